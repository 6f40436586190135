//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GaelError {
    /// Input could not be decoded or parsed (bad UTF-8, malformed file).
    #[error("format error: {0}")]
    Format(String),

    /// The supplied configuration or data files are unusable.
    #[error("configuration error: {0}")]
    Config(String),

    /// A token with no vowel (or otherwise outside the orthography) was
    /// handed to an analysis that needs one.
    #[error("unanalyzable token: {0:?}")]
    Unanalyzable(String),

    /// Source and target sides of a document pair do not line up.
    #[error("alignment error at sentence {index}: {detail}")]
    Alignment { index: usize, detail: String },

    /// Rate computation over an empty corpus.
    #[error("division error: token count is zero")]
    ZeroTokens,

    /// classify_token was called on a token that resolves in the lexicon.
    #[error("contract violation: token {0:?} is not out-of-vocabulary")]
    NotOov(String),

    /// The generator could not satisfy a recipe with the given lexicons.
    #[error("generation error for pattern {pattern}: {deficit}")]
    Generation { pattern: String, deficit: String },

    /// Caller asked for something the API does not offer.
    #[error("usage error: {0}")]
    Usage(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}
