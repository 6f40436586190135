//! Tunable analysis settings and their key-value file format.
//!
//! The config file is plain UTF-8, one `key = value` per line, `#` for
//! comments:
//!
//! ```text
//! similarity_threshold = 0.6
//! min_english_root_len = 3
//! truncated_root_min_len = 4
//! category_order = compound, code-switching, suffix-echo, good-confabulation, lazy-gaelicisation, prefix, suffix
//! ```
//!
//! `category_order` reorders the noun decision steps for ablation runs;
//! steps left out are skipped entirely.

use std::io::Read;

use crate::error::GaelError;

/// One probe in the noun classification walk. `SuffixEcho` and `Suffix`
/// both assign the suffix category; the echo step additionally demands
/// that the suffixed root echo a source word, which is what lets
/// suffixed-source-word formations outrank plain phonetic respelling.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CategoryStep {
    Compound,
    CodeSwitching,
    SuffixEcho,
    LazyGaelicisation,
    GoodConfabulation,
    Prefix,
    Suffix,
}

impl CategoryStep {
    pub fn parse(s: &str) -> Option<CategoryStep> {
        match s.trim() {
            "compound" => Some(CategoryStep::Compound),
            "code-switching" => Some(CategoryStep::CodeSwitching),
            "suffix-echo" => Some(CategoryStep::SuffixEcho),
            "lazy-gaelicisation" => Some(CategoryStep::LazyGaelicisation),
            "good-confabulation" => Some(CategoryStep::GoodConfabulation),
            "prefix" => Some(CategoryStep::Prefix),
            "suffix" => Some(CategoryStep::Suffix),
            _ => None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Config {
    /// Minimum phonetic similarity for lazy-gaelicisation and echo checks.
    pub similarity_threshold: f64,
    /// Shortest English word english_root_match may return.
    pub min_english_root_len: usize,
    /// Shortest fragment eligible for truncated-borrowing matching.
    pub truncated_root_min_len: usize,
    /// Noun classification steps, tried in order; first hit wins.
    pub category_order: Vec<CategoryStep>,
    /// Use this token total for rate computation instead of the
    /// tokenizer's own count.
    pub token_count_override: Option<u64>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            similarity_threshold: 0.6,
            min_english_root_len: 3,
            truncated_root_min_len: 4,
            category_order: vec![
                CategoryStep::Compound,
                CategoryStep::CodeSwitching,
                CategoryStep::SuffixEcho,
                CategoryStep::GoodConfabulation,
                CategoryStep::LazyGaelicisation,
                CategoryStep::Prefix,
                CategoryStep::Suffix,
            ],
            token_count_override: None,
        }
    }
}

impl Config {
    /// Parse the key-value config format. Unknown keys are errors;
    /// omitted keys keep their defaults.
    pub fn parse(text: &str) -> Result<Config, GaelError> {
        let mut cfg = Config::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(GaelError::Format(format!(
                    "config line {}: expected key = value",
                    lineno + 1
                )));
            };
            let (key, value) = (key.trim(), value.trim());
            match key {
                "similarity_threshold" => {
                    cfg.similarity_threshold = value.parse().map_err(|_| {
                        GaelError::Format(format!("config line {}: bad float", lineno + 1))
                    })?;
                    if !(0.0..=1.0).contains(&cfg.similarity_threshold) {
                        return Err(GaelError::Config(
                            "similarity_threshold must be in [0,1]".into(),
                        ));
                    }
                }
                "min_english_root_len" => {
                    cfg.min_english_root_len = value.parse().map_err(|_| {
                        GaelError::Format(format!("config line {}: bad integer", lineno + 1))
                    })?;
                }
                "truncated_root_min_len" => {
                    cfg.truncated_root_min_len = value.parse().map_err(|_| {
                        GaelError::Format(format!("config line {}: bad integer", lineno + 1))
                    })?;
                }
                "category_order" => {
                    let mut order = Vec::new();
                    for name in value.split(',') {
                        let step = CategoryStep::parse(name).ok_or_else(|| {
                            GaelError::Config(format!("unknown category step {:?}", name.trim()))
                        })?;
                        order.push(step);
                    }
                    if order.is_empty() {
                        return Err(GaelError::Config("category_order is empty".into()));
                    }
                    cfg.category_order = order;
                }
                other => {
                    return Err(GaelError::Config(format!("unknown config key {other:?}")));
                }
            }
        }
        Ok(cfg)
    }

    pub fn load<R: Read>(mut source: R) -> Result<Config, GaelError> {
        let mut bytes = Vec::new();
        source.read_to_end(&mut bytes)?;
        let text = String::from_utf8(bytes)
            .map_err(|e| GaelError::Format(format!("config is not valid UTF-8: {e}")))?;
        Config::parse(&text)
    }
}
