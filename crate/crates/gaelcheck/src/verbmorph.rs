//! Parsing and validation of candidate verb forms.
//!
//! A word is verb-shaped when, after stripping any initial mutation, it
//! ends in one of the conjugation suffixes, or when it is a short lenited
//! form (the bare analytic past). Validation checks suffix/root vowel-class
//! agreement, vowel harmony, the native alphabet, and the lenition that
//! past-tense forms require. English-matched roots are exempt from
//! orthography checks inside the root: borrowed stems keep their donor
//! spelling while the suffix must still be attached by the rules.

use crate::classifier::{RuleId, RuleVerdict, Violation};
use crate::config::Config;
use crate::lexicon::{Lexicon, Pos};
use crate::orthography::{self, MutationKind, VowelClass};
use crate::rules::{Conjugation, RuleSet, VerbSlot};

/// One reading of a word as an inflected verb.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct VerbAnalysis {
    /// Mutation-stripped, suffix-stripped stem.
    pub root: String,
    pub conjugation: Conjugation,
    /// Suffix surface, empty for the bare analytic past.
    pub suffix: String,
    pub suffix_class: VowelClass,
    pub slot: VerbSlot,
    pub mutation_seen: MutationKind,
}

impl VerbAnalysis {
    /// Rebuild the mutation-stripped word this analysis came from.
    pub fn reconstruct(&self) -> String {
        format!("{}{}", self.root, self.suffix)
    }
}

/// Bare analytic pasts are single roots; longer lenited words are not
/// plausible zero-suffix verb forms.
const BARE_PAST_MAX_SYLLABLES: usize = 2;

/// Every suffix-shaped reading of the word, before class-agreement and
/// harmony filtering. [`parse_verb`] filters these; validation wants the
/// raw set so it can name what went wrong with near-miss forms.
pub fn parse_verb_candidates(word: &str, rules: &RuleSet) -> Vec<VerbAnalysis> {
    let mut out: Vec<VerbAnalysis> = Vec::new();
    for (mutation_seen, form) in orthography::detect_and_strip_mutation(word) {
        let chars: Vec<char> = form.chars().collect();
        for suffix in &rules.verb_suffixes {
            let s_len = suffix.form.chars().count();
            if chars.len() <= s_len + 1 {
                continue;
            }
            let tail: String = chars[chars.len() - s_len..].iter().collect();
            if tail != suffix.form {
                continue;
            }
            let root: String = chars[..chars.len() - s_len].iter().collect();
            if !root.chars().any(orthography::is_vowel) {
                continue;
            }
            let analysis = VerbAnalysis {
                root,
                conjugation: suffix.conjugation,
                suffix: suffix.form.clone(),
                suffix_class: suffix.class,
                slot: suffix.slot,
                mutation_seen,
            };
            if !out.contains(&analysis) {
                out.push(analysis);
            }
        }
        // Bare analytic past: a lenited short root with no suffix at all.
        if mutation_seen == MutationKind::Lenition {
            if let (Ok(syllables), Ok(quality)) = (
                orthography::syllable_count(&form),
                orthography::final_quality(&form),
            ) {
                if syllables <= BARE_PAST_MAX_SYLLABLES {
                    out.push(VerbAnalysis {
                        root: form.clone(),
                        conjugation: Conjugation::First,
                        suffix: String::new(),
                        suffix_class: quality,
                        slot: VerbSlot::PastAnalytic,
                        mutation_seen,
                    });
                }
            }
        }
    }
    out
}

/// Readings that survive the agreement filters: suffix class matches the
/// root's final vowel quality and the whole word passes vowel harmony.
/// An empty result means the word is not verb-shaped.
pub fn parse_verb(word: &str, rules: &RuleSet) -> Vec<VerbAnalysis> {
    let harmony_ok = orthography::check_vowel_harmony(word)
        .map(|r| r.passed)
        .unwrap_or(false);
    parse_verb_candidates(word, rules)
        .into_iter()
        .filter(|a| {
            harmony_ok
                && orthography::final_quality(&a.root)
                    .map(|q| q == a.suffix_class)
                    .unwrap_or(false)
        })
        .collect()
}

/// Resolve a verb root as a conjugated noun: the root itself, or the root
/// with the verbalizing -ál/-áil extension removed, listed as a noun.
pub fn noun_root_of(root: &str, ga: &Lexicon) -> Option<String> {
    let mut candidates = vec![root.to_string()];
    for ext in ["áil", "ál"] {
        if let Some(stem) = root.strip_suffix(ext) {
            candidates.push(stem.to_string());
        }
    }
    candidates.into_iter().find(|c| {
        !c.is_empty() && (ga.has_pos(c, Pos::Noun) || ga.has_pos(c, Pos::Unknown)) && ga.contains(c)
    })
}

/// Char span of the root inside the folded word (after the mutation
/// marker, before the suffix).
fn root_span(word: &str, analysis: &VerbAnalysis) -> (usize, usize) {
    let word_len = orthography::fold(word).chars().count();
    let suffix_len = analysis.suffix.chars().count();
    let root_len = analysis.root.chars().count();
    let start = word_len.saturating_sub(suffix_len + root_len);
    (start, word_len - suffix_len)
}

/// Validate a word against its verb readings. `None` when there are no
/// readings at all (not a verb; the caller routes it elsewhere). The
/// verdict is conformant when at least one reading satisfies every rule;
/// otherwise the violations of all readings are itemized.
pub fn validate_verb(
    word: &str,
    candidates: &[VerbAnalysis],
    ga: &Lexicon,
    eng: &Lexicon,
    rules: &RuleSet,
    cfg: &Config,
) -> Option<RuleVerdict> {
    if candidates.is_empty() {
        return None;
    }
    let harmony = match orthography::check_vowel_harmony(word) {
        Ok(report) => report,
        Err(_) => {
            return Some(RuleVerdict::violating(vec![Violation::new(
                RuleId::UnanalyzableToken,
                format!("{word:?} has no vowel"),
            )]))
        }
    };

    let mut all_violations: Vec<Violation> = Vec::new();
    for analysis in candidates {
        let mut violations = Vec::new();
        let eng_root = eng.english_root_match(
            &analysis.root,
            cfg.min_english_root_len,
            cfg.truncated_root_min_len,
        );
        let span = root_span(word, analysis);

        let suffix_letters = orthography::check_alphabet(&analysis.suffix);
        if !suffix_letters.is_empty() {
            violations.push(Violation::new(
                RuleId::NonNativeLetter,
                format!("suffix -{} carries {:?}", analysis.suffix, suffix_letters),
            ));
        }
        let root_letters = orthography::check_alphabet(&analysis.root);
        if !root_letters.is_empty() && eng_root.is_none() {
            violations.push(Violation::new(
                RuleId::NonNativeLetter,
                format!(
                    "root {} carries non-native {:?}",
                    analysis.root, root_letters
                ),
            ));
        }

        for v in &harmony.violations {
            let inside_root = v.span.0 >= span.0 && v.span.1 <= span.1;
            if inside_root && eng_root.is_some() {
                continue;
            }
            violations.push(Violation::new(
                RuleId::VowelHarmony,
                format!("cluster {:?} splits {} and {}", v.cluster, v.left, v.right),
            ));
        }

        if !analysis.suffix.is_empty() {
            match orthography::final_quality(&analysis.root) {
                Ok(q) if q == analysis.suffix_class => {}
                Ok(q) => violations.push(Violation::new(
                    RuleId::SuffixClassMismatch,
                    format!(
                        "{} root {} takes a {} suffix, found -{}",
                        q, analysis.root, q, analysis.suffix
                    ),
                )),
                Err(_) => violations.push(Violation::new(
                    RuleId::UnanalyzableToken,
                    format!("root {} has no vowel", analysis.root),
                )),
            }
        }

        if analysis.slot.is_past()
            && orthography::is_lenitable(&analysis.root)
            && analysis.mutation_seen != MutationKind::Lenition
        {
            violations.push(Violation::new(
                RuleId::PastLenitionMissing,
                format!("past form of {} must be lenited", analysis.root),
            ));
        }

        if analysis.slot == VerbSlot::PastAnalytic && !ga.has_pos(&analysis.root, Pos::Verb) {
            violations.push(Violation::new(
                RuleId::BarePastUnknownRoot,
                format!("bare past of unknown verb {}", analysis.root),
            ));
        }

        // A derivational prefix inside the root carries its own lenition
        // obligation onto what follows it.
        if let Some(prefix) = rules.match_prefix(&analysis.root) {
            let remainder = analysis.root[prefix.form.len()..].trim_start_matches('-');
            if remainder.chars().count() >= 3 && ga.contains(remainder) {
                if !prefix.native {
                    violations.push(Violation::new(
                        RuleId::ForeignPrefix,
                        format!("prefix {}- kept in source form", prefix.form),
                    ));
                }
                if orthography::is_lenitable(remainder) {
                    violations.push(Violation::new(
                        RuleId::PrefixLenitionMissing,
                        format!("{} after {}- must be lenited", remainder, prefix.form),
                    ));
                }
            }
        }

        if violations.is_empty() {
            return Some(RuleVerdict::conformant());
        }
        for v in violations {
            if !all_violations.contains(&v) {
                all_violations.push(v);
            }
        }
    }

    Some(RuleVerdict::violating(all_violations))
}
