//! Rule-based detection and classification of invented words in
//! English→Irish machine translation output.
//!
//! Irish is a morphologically rich, low-resource language; MT systems
//! translating into it sometimes invent words that do not exist. Many of
//! these inventions are internally coherent: they respect initial
//! mutations, vowel harmony ("caol le caol agus leathan le leathan"),
//! conjugation suffixes and declension endings. This crate codifies those
//! rules so invented words can be found, validated against the rules, and
//! sorted into a small taxonomy of formation patterns.
//!
//! The pipeline is:
//!
//! 1. [`pipeline::tokenize`] splits MT output into word tokens.
//! 2. [`lexicon::Lexicon::lookup`] resolves tokens directly or through
//!    mutation stripping; unresolved tokens are out-of-vocabulary.
//! 3. [`classifier::classify_token`] assigns each OOV token a formation
//!    category and a rule verdict built from the [`verbmorph`] and
//!    [`nounmorph`] validators.
//! 4. [`pipeline::analyze_document`] aggregates per-document reports with
//!    hallucination rates per 1,000 tokens.
//!
//! [`generator`] runs the taxonomy in reverse, synthesizing labeled
//! pseudo-Irish words for round-trip testing.

pub mod classifier;
pub mod config;
pub mod error;
pub mod generator;
pub mod lexicon;
pub mod nounmorph;
pub mod orthography;
pub mod pipeline;
pub mod rules;
pub mod similarity;
pub mod verbmorph;

pub use classifier::{Category, HallucinationRecord, NounPattern, RuleVerdict, VerbPattern};
pub use config::Config;
pub use error::GaelError;
pub use lexicon::{LexEntry, Lexicon, LookupResult, Pos};
pub use orthography::{MutationKind, VowelClass};
pub use rules::RuleSet;
