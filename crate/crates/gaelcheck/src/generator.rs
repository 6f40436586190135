//! Synthesis of labeled pseudo-Irish words, one recipe per taxonomy
//! pattern. Output is deterministic under the seed: candidate pools are
//! sorted, sampling is rejection-based with a fixed attempt cap, and every
//! emitted word is verified OOV and re-validated before it leaves, so the
//! label is guaranteed to match what the validators will say.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::classifier::{Category, NounPattern, RuleId, VerbPattern};
use crate::config::Config;
use crate::error::GaelError;
use crate::lexicon::{Lexicon, Pos};
use crate::nounmorph;
use crate::orthography::{self, VowelClass};
use crate::rules::{AffixKind, RuleSet, VerbSlot};
use crate::verbmorph;

/// What to generate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenSpec {
    pub pattern: Category,
    pub count: usize,
    pub rng_seed: u64,
    /// true → emit rule-conformant words; false → break exactly one
    /// named rule per word.
    pub well_formed: bool,
}

/// One synthesized word with its expected labels.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct GeneratedWord {
    pub word: String,
    pub pattern: Category,
    pub conformant: bool,
    /// The single rule a deliberately broken word violates.
    pub rule_violated: Option<RuleId>,
    /// Source-sentence words to classify the sample against; empty for
    /// patterns whose sources are untranslatable by construction.
    pub source_hint: Vec<String>,
}

const MAX_ATTEMPTS: usize = 1000;

struct Pools {
    /// Native, orthographically clean lexicon nouns.
    nouns: Vec<String>,
    /// Nouns with a lenitable initial.
    lenitable_nouns: Vec<String>,
    /// English words usable as borrowing roots: alphabetic, consonant
    /// final, not in the Irish lexicon.
    eng_roots: Vec<String>,
    /// English roots carrying a non-native letter.
    eng_foreign_roots: Vec<String>,
    /// Native derivational prefixes.
    prefixes: Vec<String>,
}

fn clean_native_noun(form: &str, entry_native: bool) -> bool {
    entry_native
        && form.chars().count() >= 3
        && form.chars().all(char::is_alphabetic)
        && orthography::check_alphabet(form).is_empty()
        && orthography::check_geminates(form).is_empty()
        && orthography::check_vowel_harmony(form)
            .map(|r| r.passed)
            .unwrap_or(false)
}

fn build_pools(ga: &Lexicon, eng: &Lexicon, rules: &RuleSet) -> Pools {
    let nouns: Vec<String> = ga
        .iter()
        .filter(|e| e.pos == Pos::Noun && clean_native_noun(&e.form, e.native))
        .map(|e| e.form.clone())
        .collect();
    let lenitable_nouns = nouns
        .iter()
        .filter(|n| orthography::is_lenitable(n))
        .cloned()
        .collect();
    let eng_words = |foreign: bool| -> Vec<String> {
        eng.iter()
            .map(|e| e.form.clone())
            .filter(|w| {
                let len = w.chars().count();
                // Roots opening with a mapped Greco-Latin prefix carry a
                // prefix-translation obligation of their own; skip them.
                let carries_prefix = rules
                    .english_prefixes
                    .iter()
                    .any(|(p, _)| w.starts_with(p.as_str()) && len > p.chars().count() + 2);
                (3..=9).contains(&len)
                    && w.chars().all(|c| c.is_ascii_alphabetic())
                    && w.chars().any(orthography::is_vowel)
                    && !w
                        .chars()
                        .last()
                        .map(orthography::is_vowel)
                        .unwrap_or(true)
                    && ga.get(w).is_empty()
                    && !carries_prefix
                    && orthography::check_alphabet(w).is_empty() != foreign
            })
            .collect()
    };
    Pools {
        nouns,
        lenitable_nouns,
        eng_roots: eng_words(false),
        eng_foreign_roots: eng_words(true),
        prefixes: rules
            .prefixes
            .iter()
            .filter(|p| p.native)
            .map(|p| p.form.clone())
            .collect(),
    }
}

fn pick<'a>(rng: &mut ChaCha8Rng, pool: &'a [String]) -> Option<&'a String> {
    if pool.is_empty() {
        None
    } else {
        pool.get(rng.gen_range(0..pool.len()))
    }
}

fn deficit(pattern: &Category, what: &str) -> GaelError {
    GaelError::Generation {
        pattern: pattern.slug().to_string(),
        deficit: what.to_string(),
    }
}

/// Generate `spec.count` labeled words. Deterministic under
/// `spec.rng_seed`; every word is OOV with respect to the Irish lexicon
/// and re-checked against the validators before emission.
pub fn generate(
    spec: &GenSpec,
    ga: &Lexicon,
    eng: &Lexicon,
    rules: &RuleSet,
    cfg: &Config,
) -> Result<Vec<GeneratedWord>, GaelError> {
    if spec.count == 0 {
        return Err(GaelError::Usage("count must be at least 1".into()));
    }
    if spec.pattern == Category::Unclassified {
        return Err(GaelError::Usage("cannot generate the unclassified pattern".into()));
    }
    let pools = build_pools(ga, eng, rules);
    let mut rng = ChaCha8Rng::seed_from_u64(spec.rng_seed);
    let mut out = Vec::with_capacity(spec.count);
    while out.len() < spec.count {
        let word = synthesize(spec, &pools, &mut rng, ga, eng, rules, cfg)?;
        out.push(word);
    }
    Ok(out)
}

fn synthesize(
    spec: &GenSpec,
    pools: &Pools,
    rng: &mut ChaCha8Rng,
    ga: &Lexicon,
    eng: &Lexicon,
    rules: &RuleSet,
    cfg: &Config,
) -> Result<GeneratedWord, GaelError> {
    for _ in 0..MAX_ATTEMPTS {
        let candidate = match (&spec.pattern, spec.well_formed) {
            (Category::Noun(NounPattern::Compound), true) => compound(rng, pools, true),
            (Category::Noun(NounPattern::Compound), false) => compound(rng, pools, false),
            (Category::Noun(NounPattern::Prefix), wf) => prefixed(rng, pools, wf, false),
            (Category::Noun(NounPattern::GoodConfabulation), wf) => prefixed(rng, pools, wf, true),
            (Category::Noun(NounPattern::CodeSwitching), wf) => code_switch(rng, pools, rules, wf),
            (Category::Noun(NounPattern::LazyGaelicisation), wf) => {
                lazy(rng, pools, rules, cfg, wf)
            }
            (Category::Noun(NounPattern::Suffix), wf) => suffixed(rng, pools, rules, wf),
            (Category::Verb(VerbPattern::NounConjugation), wf) => {
                conjugated_noun(rng, pools, rules, wf)
            }
            (Category::Verb(VerbPattern::EnglishConjugated), wf) => {
                conjugated_english(rng, pools, rules, wf)
            }
            (Category::Unclassified, _) => unreachable!("rejected in generate"),
        };
        let Some(mut cand) = candidate else { continue };
        if !ga.lookup(&cand.word).is_absent() {
            continue;
        }
        // The label must match what the validators will actually say.
        let verdict = match spec.pattern {
            Category::Verb(_) => {
                let cands = verbmorph::parse_verb_candidates(&cand.word, rules);
                match verbmorph::validate_verb(&cand.word, &cands, ga, eng, rules, cfg) {
                    Some(v) => v,
                    None => continue,
                }
            }
            _ => nounmorph::validate_noun(&cand.word, ga, eng, rules, cfg),
        };
        if verdict.conformant != spec.well_formed {
            continue;
        }
        if !spec.well_formed {
            let intended = cand.rule_violated.expect("broken recipes name their rule");
            if !verdict.violations.iter().any(|v| v.rule == intended) {
                continue;
            }
        }
        cand.conformant = spec.well_formed;
        cand.pattern = spec.pattern;
        return Ok(cand);
    }
    Err(deficit(
        &spec.pattern,
        "no candidate satisfied the recipe within the attempt cap \
         (lexicon may lack eligible roots)",
    ))
}

fn seam_matches(first: &str, second: &str) -> bool {
    matches!(
        (
            orthography::final_quality(first),
            orthography::initial_quality(second)
        ),
        (Ok(a), Ok(b)) if a == b
    )
}

fn compound(rng: &mut ChaCha8Rng, pools: &Pools, well_formed: bool) -> Option<GeneratedWord> {
    let first = pick(rng, &pools.nouns)?.clone();
    let second = pick(rng, &pools.lenitable_nouns)?.clone();
    if first == second {
        return None;
    }
    if well_formed {
        if !seam_matches(&first, &second) {
            return None;
        }
        let word = format!("{first}{}", orthography::apply_lenition(&second));
        return Some(gen_word(word, None, vec![]));
    }
    // Break exactly one rule: drop the owed lenition, or clash the seam.
    if rng.gen_bool(0.5) {
        if !seam_matches(&first, &second) {
            return None;
        }
        let word = format!("{first}{second}");
        Some(gen_word(word, Some(RuleId::CompoundLenitionMissing), vec![]))
    } else {
        if seam_matches(&first, &second) {
            return None;
        }
        let word = format!("{first}{}", orthography::apply_lenition(&second));
        Some(gen_word(word, Some(RuleId::SeamHarmonyMismatch), vec![]))
    }
}

/// Shared recipe for the prefix and good-confabulation patterns; they
/// differ only in whether the classifier is handed a translatable source.
fn prefixed(
    rng: &mut ChaCha8Rng,
    pools: &Pools,
    well_formed: bool,
    untranslatable_source: bool,
) -> Option<GeneratedWord> {
    let prefix = pick(rng, &pools.prefixes)?.clone();
    let noun = pick(rng, &pools.lenitable_nouns)?.clone();
    if noun.starts_with(&prefix) {
        return None;
    }
    let hint = if untranslatable_source {
        vec![]
    } else {
        vec!["results".to_string()]
    };
    if well_formed {
        let word = format!("{prefix}{}", orthography::apply_lenition(&noun));
        Some(gen_word(word, None, hint))
    } else {
        let word = format!("{prefix}{noun}");
        Some(gen_word(word, Some(RuleId::PrefixLenitionMissing), hint))
    }
}

fn code_switch(
    rng: &mut ChaCha8Rng,
    pools: &Pools,
    rules: &RuleSet,
    well_formed: bool,
) -> Option<GeneratedWord> {
    if well_formed {
        let root = pick(rng, &pools.eng_roots)?.clone();
        let quality = orthography::final_quality(&root).ok()?;
        let affix = rules
            .noun_affixes
            .iter()
            .filter(|a| a.loan_ok && a.class == quality)
            .collect::<Vec<_>>();
        let affix = affix.get(rng.gen_range(0..affix.len().max(1)))?;
        let word = format!("{root}{}", affix.form);
        Some(gen_word(word, None, vec![root]))
    } else {
        // A suffix that demands a native base, on a root that is not one.
        let root = pick(rng, &pools.eng_foreign_roots)?.clone();
        let word = format!("{root}áid");
        Some(gen_word(word, Some(RuleId::NonNativeLetter), vec![root]))
    }
}

/// Respell an English word with Irish letter values, then repair vowel
/// harmony by inserting glide vowels at clashing clusters.
fn lazy(
    rng: &mut ChaCha8Rng,
    pools: &Pools,
    rules: &RuleSet,
    cfg: &Config,
    well_formed: bool,
) -> Option<GeneratedWord> {
    let source = pick(rng, &pools.eng_roots)?.clone();
    let mut word = transliterate(&source);
    word = repair_harmony(&word);
    if word.chars().count() < 3 {
        return None;
    }
    if !orthography::check_alphabet(&word).is_empty() {
        return None;
    }
    // A respelling that happens to look verb-inflected or
    // mutation-initial would be read as something else entirely.
    if !verbmorph::parse_verb_candidates(&word, rules).is_empty() {
        return None;
    }
    if crate::similarity::phonetic_similarity(&source, &word) < cfg.similarity_threshold {
        return None;
    }
    if well_formed {
        if !orthography::check_vowel_harmony(&word).ok()?.passed {
            return None;
        }
        Some(gen_word(word, None, vec![source]))
    } else {
        // Insert one clashing vowel to break harmony in a known spot.
        let broken = break_harmony(&word)?;
        Some(gen_word(broken, Some(RuleId::VowelHarmony), vec![source]))
    }
}

fn transliterate(eng: &str) -> String {
    let lower = eng.to_lowercase();
    let mut out = String::new();
    let chars: Vec<char> = lower.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        // ph keeps its f-sound; other digraphs fall through per-letter.
        if chars[i] == 'p' && chars.get(i + 1) == Some(&'h') {
            out.push('f');
            i += 2;
            continue;
        }
        match chars[i] {
            'k' | 'q' => out.push('c'),
            'v' => out.push_str("bh"),
            'w' => out.push('u'),
            'x' => out.push_str("cs"),
            'y' => out.push('í'),
            'j' => out.push('s'),
            'z' => out.push('s'),
            c => out.push(c),
        }
        i += 1;
    }
    out
}

fn repair_harmony(word: &str) -> String {
    let mut current: Vec<char> = word.chars().collect();
    for _ in 0..8 {
        let s: String = current.iter().collect();
        let Ok(report) = orthography::check_vowel_harmony(&s) else {
            return s;
        };
        let Some(v) = report.violations.first() else {
            return s;
        };
        // Insert a vowel of the left class right after the cluster.
        let glide = match v.left {
            VowelClass::Broad => 'a',
            VowelClass::Slender => 'i',
        };
        current.insert(v.span.1, glide);
    }
    current.iter().collect()
}

fn break_harmony(word: &str) -> Option<String> {
    let chars: Vec<char> = word.chars().collect();
    // Find an internal cluster and flip the vowel after it.
    for i in 1..chars.len().saturating_sub(1) {
        if !orthography::is_vowel(chars[i])
            && orthography::is_vowel(chars[i - 1])
            && orthography::is_vowel(chars[i + 1])
        {
            let left = orthography::classify_vowel(chars[i - 1])?;
            let flipped = match left {
                VowelClass::Broad => 'i',
                VowelClass::Slender => 'o',
            };
            let mut out = chars.clone();
            out[i + 1] = flipped;
            let s: String = out.iter().collect();
            let dirty = !orthography::check_vowel_harmony(&s).ok()?.passed;
            if dirty {
                return Some(s);
            }
        }
    }
    None
}

fn suffixed(
    rng: &mut ChaCha8Rng,
    pools: &Pools,
    rules: &RuleSet,
    well_formed: bool,
) -> Option<GeneratedWord> {
    let noun = pick(rng, &pools.nouns)?.clone();
    let quality = orthography::final_quality(&noun).ok()?;
    let hint = vec!["results".to_string()];
    if well_formed {
        let derivational = rng.gen_bool(0.5);
        let kind = if derivational {
            AffixKind::Deriv
        } else {
            AffixKind::StrongPlural
        };
        let options: Vec<_> = rules
            .noun_affixes
            .iter()
            .filter(|a| a.kind == kind && a.class == quality && !a.loan_ok)
            .collect();
        let affix = *options.get(rng.gen_range(0..options.len().max(1)))?;
        if noun.ends_with("adh") && affix.form.starts_with(|c| orthography::is_vowel(c)) {
            return None;
        }
        let word = format!("{noun}{}", affix.form);
        Some(gen_word(word, None, hint))
    } else {
        // A strong plural whose vowel class clashes with the stem.
        let options: Vec<_> = rules
            .affixes_of(AffixKind::StrongPlural)
            .filter(|a| a.class != quality && !a.loan_ok)
            .collect();
        let affix = *options.get(rng.gen_range(0..options.len().max(1)))?;
        if noun
            .chars()
            .last()
            .map(orthography::is_vowel)
            .unwrap_or(true)
        {
            // Vowel-final stems merge with the suffix; no clash possible.
            return None;
        }
        let word = format!("{noun}{}", affix.form);
        Some(gen_word(word, Some(RuleId::SuffixClassMismatch), hint))
    }
}

fn verb_suffix<'a>(
    rng: &mut ChaCha8Rng,
    rules: &'a RuleSet,
    quality: VowelClass,
    slots: &[VerbSlot],
) -> Option<&'a crate::rules::VerbSuffix> {
    let options: Vec<_> = rules
        .verb_suffixes
        .iter()
        .filter(|s| s.class == quality && slots.contains(&s.slot))
        .collect();
    options.get(rng.gen_range(0..options.len().max(1))).copied()
}

const PRESENT_SLOTS: [VerbSlot; 4] = [
    VerbSlot::Pres1Sg,
    VerbSlot::PresAnalytic,
    VerbSlot::Pres1Pl,
    VerbSlot::PresAut,
];
const PAST_SLOTS: [VerbSlot; 2] = [VerbSlot::Past1Pl, VerbSlot::PastAut];

fn conjugated_noun(
    rng: &mut ChaCha8Rng,
    pools: &Pools,
    rules: &RuleSet,
    well_formed: bool,
) -> Option<GeneratedWord> {
    let noun = pick(rng, &pools.nouns)?.clone();
    if noun
        .chars()
        .last()
        .map(orthography::is_vowel)
        .unwrap_or(true)
    {
        return None;
    }
    let quality = orthography::final_quality(&noun).ok()?;
    if well_formed {
        let past = rng.gen_bool(0.4);
        if past {
            let suffix = verb_suffix(rng, rules, quality, &PAST_SLOTS)?;
            let word = format!("{}{}", orthography::apply_lenition(&noun), suffix.form);
            Some(gen_word(word, None, vec![]))
        } else {
            let suffix = verb_suffix(rng, rules, quality, &PRESENT_SLOTS)?;
            let word = format!("{noun}{}", suffix.form);
            Some(gen_word(word, None, vec![]))
        }
    } else if rng.gen_bool(0.5) {
        // Wrong-class suffix.
        let other = match quality {
            VowelClass::Broad => VowelClass::Slender,
            VowelClass::Slender => VowelClass::Broad,
        };
        let suffix = verb_suffix(rng, rules, other, &PRESENT_SLOTS)?;
        let word = format!("{noun}{}", suffix.form);
        Some(gen_word(word, Some(RuleId::SuffixClassMismatch), vec![]))
    } else {
        // Past tense without the lenition it demands.
        if !orthography::is_lenitable(&noun) {
            return None;
        }
        let suffix = verb_suffix(rng, rules, quality, &PAST_SLOTS)?;
        let word = format!("{noun}{}", suffix.form);
        Some(gen_word(word, Some(RuleId::PastLenitionMissing), vec![]))
    }
}

fn conjugated_english(
    rng: &mut ChaCha8Rng,
    pools: &Pools,
    rules: &RuleSet,
    well_formed: bool,
) -> Option<GeneratedWord> {
    let root = pick(rng, &pools.eng_roots)?.clone();
    let quality = orthography::final_quality(&root).ok()?;
    // No source hint: the conjugation is visible from the form itself,
    // and an echoing noun-tagged source would veto the verb reading.
    if well_formed {
        let suffix = verb_suffix(rng, rules, quality, &PRESENT_SLOTS)?;
        let word = format!("{root}{}", suffix.form);
        Some(gen_word(word, None, vec![]))
    } else {
        let other = match quality {
            VowelClass::Broad => VowelClass::Slender,
            VowelClass::Slender => VowelClass::Broad,
        };
        let suffix = verb_suffix(rng, rules, other, &PRESENT_SLOTS)?;
        let word = format!("{root}{}", suffix.form);
        Some(gen_word(word, Some(RuleId::SuffixClassMismatch), vec![]))
    }
}

fn gen_word(word: String, rule: Option<RuleId>, source_hint: Vec<String>) -> GeneratedWord {
    GeneratedWord {
        word,
        pattern: Category::Unclassified, // overwritten by synthesize
        conformant: rule.is_none(),
        rule_violated: rule,
        source_hint,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Lexicon, Lexicon, RuleSet, Config) {
        let ga = crate::lexicon::load_lexicon_str(concat!(
            "gaoth\tNoun\nmoill\tNoun\nceist\tNoun\nbinn\tNoun\ncumhacht\tNoun\n",
            "sraith\tNoun\nturas\tNoun\nbord\tNoun\ncóras\tNoun\nfuinneamh\tNoun\n",
            "leabhar\tNoun\nsolas\tNoun\nteach\tNoun\nbarr\tNoun\ncloch\tNoun\n",
        ))
        .unwrap();
        let eng = crate::lexicon::load_lexicon_str(concat!(
            "fan\tNoun\ntend\tVerb\nplan\tNoun\ntest\tVerb\nprint\tVerb\n",
            "wave\tNoun\nvent\tNoun\nmarket\tNoun\nsignal\tNoun\n",
        ))
        .unwrap();
        (ga, eng, RuleSet::builtin(), Config::default())
    }

    fn spec(pattern: &str, well_formed: bool) -> GenSpec {
        GenSpec {
            pattern: Category::from_slug(pattern).unwrap(),
            count: 8,
            rng_seed: 7,
            well_formed,
        }
    }

    #[test]
    fn deterministic_under_seed() {
        let (ga, eng, rules, cfg) = setup();
        let s = spec("compound", true);
        let a = generate(&s, &ga, &eng, &rules, &cfg).unwrap();
        let b = generate(&s, &ga, &eng, &rules, &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn outputs_are_oov_and_labeled() {
        let (ga, eng, rules, cfg) = setup();
        for pattern in Category::generatable_slugs() {
            let words = generate(&spec(pattern, true), &ga, &eng, &rules, &cfg)
                .unwrap_or_else(|e| panic!("{pattern}: {e}"));
            assert_eq!(words.len(), 8);
            for w in words {
                assert!(ga.lookup(&w.word).is_absent(), "{} not OOV", w.word);
                assert!(w.conformant);
                assert_eq!(w.pattern, Category::from_slug(pattern).unwrap());
            }
        }
    }

    #[test]
    fn broken_words_name_their_rule() {
        let (ga, eng, rules, cfg) = setup();
        for pattern in ["compound", "prefix", "suffix", "verb-noun-conjugation"] {
            let words = generate(&spec(pattern, false), &ga, &eng, &rules, &cfg)
                .unwrap_or_else(|e| panic!("{pattern}: {e}"));
            for w in words {
                assert!(!w.conformant);
                assert!(w.rule_violated.is_some());
            }
        }
    }

    #[test]
    fn recipes_reproduce_attested_formations() {
        // With only gaoth and moill available, the compound recipe can
        // produce exactly one word.
        let ga = crate::lexicon::load_lexicon_str("gaoth\tNoun\nmoill\tNoun\n").unwrap();
        let eng = crate::lexicon::load_lexicon_str("fan\tNoun\n").unwrap();
        let (rules, cfg) = (RuleSet::builtin(), Config::default());
        let words = generate(
            &GenSpec {
                pattern: Category::from_slug("compound").unwrap(),
                count: 3,
                rng_seed: 1,
                well_formed: true,
            },
            &ga,
            &eng,
            &rules,
            &cfg,
        )
        .unwrap();
        assert!(words.iter().all(|w| w.word == "gaothmhoill"));

        // The code-switching recipe rebuilds fan + -aithe.
        let words = generate(
            &GenSpec {
                pattern: Category::from_slug("code-switching").unwrap(),
                count: 10,
                rng_seed: 1,
                well_formed: true,
            },
            &ga,
            &eng,
            &rules,
            &cfg,
        )
        .unwrap();
        assert!(words.iter().any(|w| w.word == "fanaithe"));
    }

    #[test]
    fn broken_compounds_break_exactly_one_named_rule() {
        let (ga, eng, rules, cfg) = setup();
        let words = generate(
            &GenSpec {
                pattern: Category::from_slug("compound").unwrap(),
                count: 30,
                rng_seed: 9,
                well_formed: false,
            },
            &ga,
            &eng,
            &rules,
            &cfg,
        )
        .unwrap();
        for w in words {
            let rule = w.rule_violated.unwrap();
            assert!(
                matches!(
                    rule,
                    RuleId::CompoundLenitionMissing | RuleId::SeamHarmonyMismatch
                ),
                "{}: {rule:?}",
                w.word
            );
        }
    }

    #[test]
    fn unreachable_pattern_errors_with_deficit() {
        // No lenitable nouns at all: compounds cannot be built.
        let ga = crate::lexicon::load_lexicon_str("olann\tNoun\nualach\tOther\n").unwrap();
        let eng = crate::lexicon::load_lexicon_str("fan\tNoun\n").unwrap();
        let (rules, cfg) = (RuleSet::builtin(), Config::default());
        let err = generate(&spec("compound", true), &ga, &eng, &rules, &cfg);
        assert!(matches!(err, Err(GaelError::Generation { .. })));
    }

    #[test]
    fn count_must_be_positive() {
        let (ga, eng, rules, cfg) = setup();
        let mut s = spec("compound", true);
        s.count = 0;
        assert!(matches!(
            generate(&s, &ga, &eng, &rules, &cfg),
            Err(GaelError::Usage(_))
        ));
    }
}
