//! Taxonomy assignment for out-of-vocabulary tokens.
//!
//! Every OOV token receives exactly one formation category and one rule
//! verdict. The two are computed separately: the category describes how
//! the word appears to have been built (structural evidence first, then
//! source-side phonetics), while the verdict comes from the morphology
//! validators alone and never moves with the similarity threshold.
//!
//! Verb readings are claimed first, but only when anchored: the suffixed
//! root must resolve as an Irish noun (a conjugated noun) or as an
//! English word (a conjugated borrowing), and the best-matching source
//! word must not be known to be a plain noun. Unanchored verb shapes fall
//! through to the noun walk, whose probe order is configurable.

use crate::config::{CategoryStep, Config};
use crate::error::GaelError;
use crate::lexicon::{Lexicon, Pos};
use crate::orthography;
use crate::rules::RuleSet;
use crate::similarity::phonetic_similarity;
use crate::{nounmorph, verbmorph};

/// Identifier of one codified rule, used in itemized violations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    NonNativeLetter,
    VowelHarmony,
    IllegalGeminate,
    SuffixClassMismatch,
    PastLenitionMissing,
    BarePastUnknownRoot,
    PrefixLenitionMissing,
    ForeignPrefix,
    PrefixMistranslated,
    PluralOfUnknownStem,
    DerivBaseMismatch,
    SyncopeRequired,
    SeamHarmonyMismatch,
    CompoundLenitionMissing,
    UnanalyzableToken,
}

impl std::fmt::Display for RuleId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RuleId::NonNativeLetter => "non-native-letter",
            RuleId::VowelHarmony => "vowel-harmony",
            RuleId::IllegalGeminate => "illegal-geminate",
            RuleId::SuffixClassMismatch => "suffix-class-mismatch",
            RuleId::PastLenitionMissing => "past-lenition-missing",
            RuleId::BarePastUnknownRoot => "bare-past-unknown-root",
            RuleId::PrefixLenitionMissing => "prefix-lenition-missing",
            RuleId::ForeignPrefix => "foreign-prefix",
            RuleId::PrefixMistranslated => "prefix-mistranslated",
            RuleId::PluralOfUnknownStem => "plural-of-unknown-stem",
            RuleId::DerivBaseMismatch => "deriv-base-mismatch",
            RuleId::SyncopeRequired => "syncope-required",
            RuleId::SeamHarmonyMismatch => "seam-harmony-mismatch",
            RuleId::CompoundLenitionMissing => "compound-lenition-missing",
            RuleId::UnanalyzableToken => "unanalyzable-token",
        };
        write!(f, "{s}")
    }
}

/// One itemized rule breach.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Violation {
    pub rule: RuleId,
    pub detail: String,
}

impl Violation {
    pub fn new(rule: RuleId, detail: impl Into<String>) -> Violation {
        Violation {
            rule,
            detail: detail.into(),
        }
    }
}

/// Conformant exactly when the violation list is empty.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct RuleVerdict {
    pub conformant: bool,
    pub violations: Vec<Violation>,
}

impl RuleVerdict {
    pub fn conformant() -> RuleVerdict {
        RuleVerdict {
            conformant: true,
            violations: Vec::new(),
        }
    }

    pub fn violating(violations: Vec<Violation>) -> RuleVerdict {
        RuleVerdict {
            conformant: false,
            violations,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerbPattern {
    /// An Irish noun conjugated as if it were a verb.
    NounConjugation,
    /// An English word carrying Irish conjugation.
    EnglishConjugated,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NounPattern {
    Compound,
    LazyGaelicisation,
    GoodConfabulation,
    CodeSwitching,
    Prefix,
    Suffix,
}

/// Formation category of an invented word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Category {
    Verb(VerbPattern),
    Noun(NounPattern),
    Unclassified,
}

impl serde::Serialize for Category {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.slug())
    }
}

impl<'de> serde::Deserialize<'de> for Category {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let slug = String::deserialize(deserializer)?;
        Category::from_slug(&slug)
            .ok_or_else(|| serde::de::Error::custom(format!("unknown category {slug:?}")))
    }
}

impl Category {
    /// CLI/file slug, also accepted by the generator.
    pub fn slug(&self) -> &'static str {
        match self {
            Category::Verb(VerbPattern::NounConjugation) => "verb-noun-conjugation",
            Category::Verb(VerbPattern::EnglishConjugated) => "verb-english-conjugated",
            Category::Noun(NounPattern::Compound) => "compound",
            Category::Noun(NounPattern::LazyGaelicisation) => "lazy-gaelicisation",
            Category::Noun(NounPattern::GoodConfabulation) => "good-confabulation",
            Category::Noun(NounPattern::CodeSwitching) => "code-switching",
            Category::Noun(NounPattern::Prefix) => "prefix",
            Category::Noun(NounPattern::Suffix) => "suffix",
            Category::Unclassified => "unclassified",
        }
    }

    pub fn from_slug(slug: &str) -> Option<Category> {
        let c = match slug {
            "verb-noun-conjugation" => Category::Verb(VerbPattern::NounConjugation),
            "verb-english-conjugated" => Category::Verb(VerbPattern::EnglishConjugated),
            "compound" => Category::Noun(NounPattern::Compound),
            "lazy-gaelicisation" => Category::Noun(NounPattern::LazyGaelicisation),
            "good-confabulation" => Category::Noun(NounPattern::GoodConfabulation),
            "code-switching" => Category::Noun(NounPattern::CodeSwitching),
            "prefix" => Category::Noun(NounPattern::Prefix),
            "suffix" => Category::Noun(NounPattern::Suffix),
            "unclassified" => Category::Unclassified,
            _ => return None,
        };
        Some(c)
    }

    /// All generatable category slugs.
    pub fn generatable_slugs() -> [&'static str; 8] {
        [
            "compound",
            "lazy-gaelicisation",
            "good-confabulation",
            "code-switching",
            "prefix",
            "suffix",
            "verb-noun-conjugation",
            "verb-english-conjugated",
        ]
    }

    pub fn pos(&self) -> Pos {
        match self {
            Category::Verb(_) => Pos::Verb,
            Category::Noun(_) => Pos::Noun,
            Category::Unclassified => Pos::Unknown,
        }
    }
}

impl std::fmt::Display for Category {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.slug())
    }
}

/// One classified out-of-vocabulary token.
#[derive(Debug, Clone, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct HallucinationRecord {
    pub surface: String,
    pub sentence_id: usize,
    pub category: Category,
    /// Word class the verdict was computed under. Follows the category
    /// when one was found; unclassified verb-shaped words answer to the
    /// verb rules and count as verbs.
    pub pos: Pos,
    pub verdict: RuleVerdict,
    /// Human-readable citations of the analyses behind the call.
    pub evidence: Vec<String>,
    /// Best-matching source word and its similarity score. Always present
    /// for lazy gaelicisation and code-switching.
    pub source_link: Option<(String, f64)>,
}

/// Lowercased alphabetic source words long enough to carry content.
fn content_words(source_words: &[String]) -> Vec<String> {
    source_words
        .iter()
        .map(|w| {
            w.to_lowercase()
                .chars()
                .filter(|c| c.is_alphabetic() || *c == '\'')
                .collect::<String>()
        })
        .filter(|w| w.chars().count() >= 3)
        .collect()
}

/// Classify one OOV token against its aligned source sentence.
///
/// The token must already be established OOV; a resolvable token is a
/// contract violation.
pub fn classify_token(
    surface: &str,
    sentence_id: usize,
    source_words: &[String],
    ga: &Lexicon,
    eng: &Lexicon,
    rules: &RuleSet,
    cfg: &Config,
) -> Result<HallucinationRecord, GaelError> {
    if !ga.lookup(surface).is_absent() {
        return Err(GaelError::NotOov(surface.to_string()));
    }

    let readings = orthography::detect_and_strip_mutation(surface);
    let sources = content_words(source_words);

    // Best (source word, reading) similarity pair. Ties keep the earlier
    // source word, so the result is deterministic.
    let mut best_src: Option<(String, f64)> = None;
    for word in &sources {
        for (_, root) in &readings {
            let score = phonetic_similarity(word, root);
            let better = match &best_src {
                Some((_, s)) => score > *s,
                None => true,
            };
            if better {
                best_src = Some((word.clone(), score));
            }
        }
    }

    let mut evidence: Vec<String> = Vec::new();

    // ── Verb branch ────────────────────────────────────────────────────
    let candidates = verbmorph::parse_verb_candidates(surface, rules);
    let mut verb_pattern: Option<(VerbPattern, Option<(String, f64)>)> = None;
    for a in &candidates {
        if let Some(noun) = verbmorph::noun_root_of(&a.root, ga) {
            evidence.push(format!("verb reading: noun {} + -{}", noun, a.suffix));
            verb_pattern = Some((VerbPattern::NounConjugation, best_src.clone()));
            break;
        }
    }
    if verb_pattern.is_none() {
        for a in &candidates {
            if a.suffix.is_empty() {
                continue;
            }
            if let Some(eng_word) = eng.english_root_match(
                &a.root,
                cfg.min_english_root_len,
                cfg.truncated_root_min_len,
            ) {
                let score = phonetic_similarity(&eng_word, &a.root);
                evidence.push(format!(
                    "verb reading: english {} + -{}",
                    eng_word, a.suffix
                ));
                verb_pattern = Some((VerbPattern::EnglishConjugated, Some((eng_word, score))));
                break;
            }
        }
    }
    // Source-side anchor: when the output genuinely echoes a source word
    // (at or above the similarity threshold) and that word is listed as a
    // plain noun, the output is not being used as a verb. Noise-level
    // matches carry no such signal.
    let src_is_plain_noun = best_src
        .as_ref()
        .map(|(w, score)| {
            let entries = eng.get(w);
            *score >= cfg.similarity_threshold
                && !entries.is_empty()
                && entries.iter().all(|e| e.pos == Pos::Noun)
        })
        .unwrap_or(false);

    if let Some((pattern, link)) = verb_pattern {
        if !src_is_plain_noun {
            let verdict = verbmorph::validate_verb(surface, &candidates, ga, eng, rules, cfg)
                .expect("candidates are non-empty");
            return Ok(HallucinationRecord {
                surface: surface.to_string(),
                sentence_id,
                category: Category::Verb(pattern),
                pos: Pos::Verb,
                verdict: apply_source_checks(verdict, &sources, &readings, rules),
                evidence,
                source_link: link,
            });
        }
    }

    // ── Noun branch ────────────────────────────────────────────────────
    let base_verdict = nounmorph::validate_noun(surface, ga, eng, rules, cfg);
    let verdict = apply_source_checks(base_verdict, &sources, &readings, rules);

    let mut category = Category::Unclassified;
    let mut source_link = best_src.clone();

    'walk: for step in &cfg.category_order {
        match step {
            CategoryStep::Compound => {
                for (_, reading) in &readings {
                    let splits = nounmorph::split_compound(reading, ga, rules);
                    if let Some(s) = splits.first() {
                        evidence.push(format!(
                            "compound: {} + {}{}",
                            s.first.form,
                            s.second_surface,
                            if s.second_lenited { " (lenited)" } else { "" }
                        ));
                        category = Category::Noun(NounPattern::Compound);
                        break 'walk;
                    }
                }
            }
            CategoryStep::CodeSwitching => {
                for (_, reading) in &readings {
                    let affixes = nounmorph::eng_root_affixes(reading, eng, rules, cfg);
                    if let Some(a) = affixes.iter().find(|a| {
                        a.affix.loan_ok || !orthography::check_alphabet(&a.root).is_empty()
                    }) {
                        evidence.push(format!(
                            "code-switching: english {} + -{}",
                            a.eng_word, a.affix.form
                        ));
                        source_link =
                            Some((a.eng_word.clone(), phonetic_similarity(&a.eng_word, &a.root)));
                        category = Category::Noun(NounPattern::CodeSwitching);
                        break 'walk;
                    }
                }
            }
            CategoryStep::SuffixEcho => {
                for (_, reading) in &readings {
                    for chain in nounmorph::top_chains(reading, ga, rules) {
                        let Some(root) = chain.resolved_root() else {
                            continue;
                        };
                        let echo = sources
                            .iter()
                            .map(|w| (w.clone(), phonetic_similarity(w, root)))
                            .filter(|(_, s)| *s >= cfg.similarity_threshold)
                            .max_by(|a, b| a.1.total_cmp(&b.1));
                        if let Some((word, score)) = echo {
                            evidence.push(format!(
                                "suffixed source echo: {} ≈ {} under {:?}",
                                word, root, chain.steps
                            ));
                            source_link = Some((word, score));
                            category = Category::Noun(NounPattern::Suffix);
                            break 'walk;
                        }
                    }
                }
            }
            CategoryStep::GoodConfabulation => {
                if !verdict.conformant {
                    continue;
                }
                if !orthography::check_alphabet(surface).is_empty() {
                    continue;
                }
                let structural = readings.iter().any(|(_, reading)| {
                    !nounmorph::split_compound(reading, ga, rules).is_empty()
                        || !nounmorph::check_prefix(reading, ga, rules).is_empty()
                        || nounmorph::top_chains(reading, ga, rules)
                            .iter()
                            .any(|c| c.resolved())
                });
                if !structural {
                    continue;
                }
                // "No official translation available": the source carries
                // a term our English wordlist does not know.
                let untranslatable =
                    sources.is_empty() || sources.iter().any(|w| eng.get(w).is_empty());
                if untranslatable {
                    evidence.push("coherent formation for an unlisted source term".to_string());
                    category = Category::Noun(NounPattern::GoodConfabulation);
                    break 'walk;
                }
            }
            CategoryStep::LazyGaelicisation => {
                let Some((word, score)) = &best_src else {
                    continue;
                };
                if *score < cfg.similarity_threshold {
                    continue;
                }
                if !orthography::check_alphabet(surface).is_empty() {
                    continue;
                }
                // A form carrying verbal morphology is a verb attempt,
                // not a phonetic respelling of a noun.
                if !candidates.is_empty() {
                    continue;
                }
                evidence.push(format!("phonetic respelling of {word} (score {score:.2})"));
                source_link = Some((word.clone(), *score));
                category = Category::Noun(NounPattern::LazyGaelicisation);
                break 'walk;
            }
            CategoryStep::Prefix => {
                for (_, reading) in &readings {
                    let ps = nounmorph::check_prefix(reading, ga, rules);
                    if let Some(p) = ps.first() {
                        evidence.push(format!("prefix: {}- + {}", p.prefix, p.remainder));
                        category = Category::Noun(NounPattern::Prefix);
                        break 'walk;
                    }
                }
            }
            CategoryStep::Suffix => {
                for (_, reading) in &readings {
                    let chains = nounmorph::top_chains(reading, ga, rules);
                    if let Some(c) = chains.iter().find(|c| c.resolved()) {
                        evidence.push(format!(
                            "suffix chain on {} under {:?}",
                            c.stem, c.steps
                        ));
                        category = Category::Noun(NounPattern::Suffix);
                        break 'walk;
                    }
                }
            }
        }
    }

    // Unclassified words that are verb-shaped answer to the verb rules
    // and count as verbs.
    let (verdict, pos) = if category == Category::Unclassified && !candidates.is_empty() {
        let v = verbmorph::validate_verb(surface, &candidates, ga, eng, rules, cfg)
            .expect("candidates are non-empty");
        (apply_source_checks(v, &sources, &readings, rules), Pos::Verb)
    } else {
        (verdict, category.pos())
    };

    if matches!(
        category,
        Category::Noun(NounPattern::LazyGaelicisation) | Category::Noun(NounPattern::CodeSwitching)
    ) {
        debug_assert!(source_link.is_some());
    }

    Ok(HallucinationRecord {
        surface: surface.to_string(),
        sentence_id,
        category,
        pos,
        verdict,
        evidence,
        source_link,
    })
}

/// Source-side prefix check: when the echoed source word opens with a
/// known Greco-Latin prefix, the output must open with one of its
/// established Irish renderings.
fn apply_source_checks(
    verdict: RuleVerdict,
    sources: &[String],
    readings: &[(orthography::MutationKind, String)],
    rules: &RuleSet,
) -> RuleVerdict {
    let mut best: Option<(&String, f64)> = None;
    for word in sources {
        for (_, root) in readings {
            let score = phonetic_similarity(word, root);
            if best.map(|(_, s)| score > s).unwrap_or(true) {
                best = Some((word, score));
            }
        }
    }
    let Some((word, _)) = best else {
        return verdict;
    };
    for (eng_prefix, renderings) in &rules.english_prefixes {
        if !word.starts_with(eng_prefix) || word.chars().count() <= eng_prefix.chars().count() + 2
        {
            continue;
        }
        let rendered = readings
            .iter()
            .any(|(_, root)| renderings.iter().any(|r| root.starts_with(r.as_str())));
        if !rendered {
            let mut violations = verdict.violations;
            let v = Violation::new(
                RuleId::PrefixMistranslated,
                format!(
                    "source {word} opens with {eng_prefix}-, expected one of {renderings:?}"
                ),
            );
            if !violations.contains(&v) {
                violations.push(v);
            }
            return RuleVerdict::violating(violations);
        }
    }
    verdict
}
