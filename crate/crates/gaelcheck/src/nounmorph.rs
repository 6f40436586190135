//! Parsing and validation of candidate noun forms: plural endings,
//! noun+noun compounds with second-element lenition, derivational
//! prefixes with post-prefix lenition, and derivational suffix chains.
//!
//! Validation weighs every structural reading of a word and sorts each
//! into one of three dispositions:
//!
//! * satisfying — fully resolved against the lexicon with every attachment
//!   rule observed; one such reading makes the word conformant.
//! * violating — structurally committed but rule-breaking (a plural on a
//!   stem that exists nowhere, a compound without its lenition, a suffix
//!   stacked on the wrong base).
//! * neutral — a shape too generic to damn (a bare genitive ending, a
//!   slenderized-looking final syllable, a derivational suffix coining a
//!   new stem that is itself orthographically clean). Confabulated words
//!   are built exactly here, so neutral readings never convict.
//!
//! A word with no reading at all is judged on orthography alone: invented
//! words that keep to the spelling rules are coherent coinages.

use crate::classifier::{RuleId, RuleVerdict, Violation};
use crate::config::Config;
use crate::lexicon::{LexEntry, Lexicon, Pos};
use crate::orthography::{self, MutationKind, VowelClass};
use crate::rules::{AffixKind, NounAffix, RuleSet};
use crate::verbmorph;

const MAX_CHAIN_DEPTH: usize = 4;
const MIN_STEM_CHARS: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PluralStrategy {
    WeakSlenderized,
    WeakA,
    Strong,
}

/// One reading of a word as a plural form.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PluralAnalysis {
    /// Reconstructed singular.
    pub root: String,
    pub strategy: PluralStrategy,
    /// Suffix surface, empty for slenderization.
    pub suffix: String,
    /// The singular resolves in the lexicon (directly or as a derived
    /// form of a lexicon root).
    pub root_resolved: bool,
    /// The singular is orthographically well-formed on its own.
    pub root_well_formed: bool,
}

/// One reading of a word as a noun+noun compound.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct CompoundSplit {
    pub first: LexEntry,
    /// Lexicon entry the second element resolves to.
    pub second: LexEntry,
    /// Second element as it appears in the word (possibly lenited,
    /// possibly inflected).
    pub second_surface: String,
    pub second_lenited: bool,
    /// Lenition is owed on the second element.
    pub lenition_expected: bool,
    /// Vowel classes agree across the seam.
    pub seam_ok: bool,
}

/// One reading of a word as prefix + stem.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct PrefixAnalysis {
    pub prefix: String,
    pub prefix_native: bool,
    /// Remainder as it appears in the word.
    pub remainder: String,
    /// Remainder with any lenition stripped.
    pub remainder_root: String,
    pub lenition_expected: bool,
    pub lenition_present: bool,
}

/// One step of a suffix chain, outermost first.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub enum ChainStep {
    Strong(String),
    WeakA,
    Genitive(String),
    Deriv(String),
    Slenderized,
}

/// A word read as stem + stacked suffixes.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct SuffixChain {
    pub steps: Vec<ChainStep>,
    /// Innermost stem.
    pub stem: String,
    /// Lexicon entry the stem resolved to, when it did.
    pub stem_entry: Option<LexEntry>,
    /// Rule breaches detected along the chain (syncope, base POS).
    violations: Vec<Violation>,
}

impl SuffixChain {
    pub fn resolved(&self) -> bool {
        self.stem_entry.is_some()
    }

    /// Lexicon root at the bottom of a resolved chain.
    pub fn resolved_root(&self) -> Option<&str> {
        self.stem_entry.as_ref().map(|e| e.form.as_str())
    }

    fn outer_step_is_inflection(&self) -> bool {
        matches!(
            self.steps.first(),
            Some(ChainStep::Strong(_)) | Some(ChainStep::WeakA)
        )
    }
}

/// A word read as an English root carrying an Irish affix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EngRootAffix {
    /// The in-word root (an English word or a truncation of one).
    pub root: String,
    /// The English lexicon word it matched.
    pub eng_word: String,
    pub affix: NounAffix,
}

fn noun_like(entry: &LexEntry) -> bool {
    matches!(entry.pos, Pos::Noun | Pos::Unknown)
}

fn stem_usable(stem: &str) -> bool {
    stem.chars().count() >= MIN_STEM_CHARS && stem.chars().any(orthography::is_vowel)
}

fn orthographically_clean(form: &str) -> bool {
    orthography::check_alphabet(form).is_empty()
        && orthography::check_geminates(form).is_empty()
        && orthography::check_vowel_harmony(form)
            .map(|r| r.passed)
            .unwrap_or(false)
}

/// Seam agreement for suffix attachment: a consonant-final stem must end
/// in a vowel of the class the suffix demands; vowel-final stems merge
/// into a vowel group with the suffix and are exempt.
fn seam_agrees(stem: &str, class: VowelClass) -> bool {
    let last = stem.chars().last();
    match last {
        Some(c) if orthography::is_vowel(c) => true,
        _ => matches!(orthography::final_quality(stem), Ok(q) if q == class),
    }
}

/// Roots ending in unstressed -(e)adh syncopate before a vowel-initial
/// suffix; gluing them together unchanged breaks spelling conventions.
fn syncope_required(stem: &str, suffix: &str) -> bool {
    let suffix_vowel_initial = suffix
        .chars()
        .next()
        .map(orthography::is_vowel)
        .unwrap_or(false);
    suffix_vowel_initial && (stem.ends_with("adh") || stem.ends_with("eadh"))
}

/// Resolve a stem as a lexicon word or a derivational/plural formation on
/// one. Genitive endings and slenderization are deliberately not tried at
/// depth: they are inflection, and inflection buried under derivation is
/// no evidence of anything.
fn resolve_stem(word: &str, ga: &Lexicon, rules: &RuleSet, depth: usize) -> Vec<SuffixChain> {
    let mut out = Vec::new();
    if let Some(entry) = ga.get(word).first() {
        out.push(SuffixChain {
            steps: Vec::new(),
            stem: word.to_string(),
            stem_entry: Some(entry.clone()),
            violations: Vec::new(),
        });
        return out;
    }
    if depth == 0 {
        return out;
    }

    let chars: Vec<char> = word.chars().collect();
    for affix in &rules.noun_affixes {
        if !matches!(affix.kind, AffixKind::Deriv | AffixKind::StrongPlural) {
            continue;
        }
        let s_len = affix.form.chars().count();
        if chars.len() < s_len + MIN_STEM_CHARS {
            continue;
        }
        let tail: String = chars[chars.len() - s_len..].iter().collect();
        if tail != affix.form {
            continue;
        }
        let stem: String = chars[..chars.len() - s_len].iter().collect();
        if !stem_usable(&stem) {
            continue;
        }

        let mut stems = vec![stem.clone()];
        // Elided stems: a vowel-final stem loses its vowel before a
        // vowel-initial suffix (deartha + -ach → dearthach). Lexicon
        // membership only; no recursion on reconstructed stems.
        if affix
            .form
            .chars()
            .next()
            .map(orthography::is_vowel)
            .unwrap_or(false)
        {
            for v in ['a', 'e', 'i', 'o', 'u', 'á', 'é', 'í', 'ó', 'ú'] {
                let cand = format!("{stem}{v}");
                if !ga.get(&cand).is_empty() {
                    stems.push(cand);
                }
            }
        }

        let step = || match affix.kind {
            AffixKind::Deriv => ChainStep::Deriv(affix.form.clone()),
            _ => ChainStep::Strong(affix.form.clone()),
        };
        for stem_cand in stems {
            let subs = resolve_stem(&stem_cand, ga, rules, depth - 1);
            if subs.is_empty() {
                // Unresolved boundary: record the plain strip once.
                if stem_cand == stem {
                    out.push(SuffixChain {
                        steps: vec![step()],
                        stem: stem.clone(),
                        stem_entry: None,
                        violations: Vec::new(),
                    });
                }
                continue;
            }
            for sub in subs {
                let mut violations = sub.violations.clone();
                if let Some(entry) = &sub.stem_entry {
                    if sub.steps.is_empty() {
                        let base_ok = match affix.kind {
                            AffixKind::Deriv => affix.base.accepts(entry.pos),
                            // Plurals attach to nouns.
                            _ => noun_like(entry),
                        };
                        if !base_ok {
                            violations.push(Violation::new(
                                RuleId::DerivBaseMismatch,
                                format!(
                                    "-{} does not attach to {} {}",
                                    affix.form, entry.pos, entry.form
                                ),
                            ));
                        }
                    }
                }
                if syncope_required(&stem_cand, &affix.form) {
                    violations.push(Violation::new(
                        RuleId::SyncopeRequired,
                        format!("{} + -{} must syncopate", stem_cand, affix.form),
                    ));
                }
                if !seam_agrees(&stem_cand, affix.class) {
                    violations.push(Violation::new(
                        RuleId::SuffixClassMismatch,
                        format!("-{} needs a {} stem: {}", affix.form, affix.class, stem_cand),
                    ));
                }
                let mut steps = vec![step()];
                steps.extend(sub.steps.clone());
                out.push(SuffixChain {
                    steps,
                    stem: sub.stem.clone(),
                    stem_entry: sub.stem_entry.clone(),
                    violations,
                });
            }
        }
    }
    out
}

/// Candidate singulars behind a slenderized final syllable. The common
/// patterns: drop the inserted i (báid → bád), widen éi to éa
/// (tripléid → tripléad), restore i to (e)a (fir → fear, mic → mac),
/// and the -(a)igh ↔ -(e)ach alternation (eocaróitigh → eocaróiteach).
fn deslenderize(word: &str) -> Vec<String> {
    let chars: Vec<char> = word.chars().collect();
    let mut out = Vec::new();
    if let Some(stem) = word.strip_suffix("aigh") {
        out.push(format!("{stem}ach"));
    } else if let Some(stem) = word.strip_suffix("igh") {
        out.push(format!("{stem}each"));
    }
    // Find the final consonant run and the vowel group before it.
    let n = chars.len();
    let mut c_start = n;
    while c_start > 0 && !orthography::is_vowel(chars[c_start - 1]) {
        c_start -= 1;
    }
    if c_start == 0 || c_start == n {
        return out;
    }
    let mut v_start = c_start;
    while v_start > 0 && orthography::is_vowel(chars[v_start - 1]) {
        v_start -= 1;
    }
    let vowels: String = chars[v_start..c_start].iter().collect();
    let cons: String = chars[c_start..].iter().collect();
    let head: String = chars[..v_start].iter().collect();
    if !vowels.ends_with('i') {
        return out;
    }
    let trimmed = &vowels[..vowels.len() - 1];
    if !trimmed.is_empty() {
        // bád ← báid, tripléad ← tripléid.
        out.push(format!("{head}{trimmed}{cons}"));
        if trimmed.ends_with('é') {
            out.push(format!("{head}{trimmed}a{cons}"));
        }
    } else {
        out.push(format!("{head}ea{cons}"));
        out.push(format!("{head}a{cons}"));
    }
    out
}

/// All plural readings of a word: strong suffixes, the weak -a, and
/// final-consonant slenderization, each with resolution flags for the
/// reconstructed singular.
pub fn analyze_plural(word: &str, ga: &Lexicon, rules: &RuleSet) -> Vec<PluralAnalysis> {
    let folded = orthography::fold(word);
    let chars: Vec<char> = folded.chars().collect();
    let mut out = Vec::new();
    let mut push = |root: String, strategy: PluralStrategy, suffix: String| {
        if !stem_usable(&root) {
            return;
        }
        let root_resolved = resolve_stem(&root, ga, rules, MAX_CHAIN_DEPTH)
            .iter()
            .any(|c| c.resolved() && c.violations.is_empty());
        let analysis = PluralAnalysis {
            root_well_formed: orthographically_clean(&root),
            root,
            strategy,
            suffix,
            root_resolved,
        };
        if !out.contains(&analysis) {
            out.push(analysis);
        }
    };

    for affix in rules.plural_affixes() {
        let s_len = affix.form.chars().count();
        if chars.len() < s_len + MIN_STEM_CHARS {
            continue;
        }
        let tail: String = chars[chars.len() - s_len..].iter().collect();
        if tail != affix.form {
            continue;
        }
        let root: String = chars[..chars.len() - s_len].iter().collect();
        let strategy = if affix.kind == AffixKind::WeakPlural {
            PluralStrategy::WeakA
        } else {
            PluralStrategy::Strong
        };
        push(root, strategy, affix.form.clone());
    }
    for root in deslenderize(&folded) {
        push(root, PluralStrategy::WeakSlenderized, String::new());
    }
    out
}

/// All readings of a word as first-noun + second-element compounds. The
/// first element is a lexicon noun; the second resolves directly, through
/// lenition stripping, or as an inflected form of a lexicon word. Splits
/// that break the seam's vowel harmony are marked, not dropped.
pub fn split_compound(word: &str, ga: &Lexicon, rules: &RuleSet) -> Vec<CompoundSplit> {
    let folded = orthography::fold(word);
    let chars: Vec<char> = folded.chars().collect();
    let mut out = Vec::new();
    if chars.len() < 4 {
        return out;
    }
    for i in MIN_STEM_CHARS..=chars.len() - MIN_STEM_CHARS {
        let first_str: String = chars[..i].iter().collect();
        let first_entry = match resolve_first_element(&first_str, ga, rules) {
            Some(e) => e,
            None => continue,
        };
        let second_surface: String = chars[i..].iter().collect();
        let (second_lenited, second_root) = strip_lenition(&second_surface);
        let Some(second_entry) = resolve_inflected(&second_root, ga, rules) else {
            continue;
        };
        let seam_ok = match (
            orthography::final_quality(&first_str),
            orthography::initial_quality(&second_root),
        ) {
            (Ok(a), Ok(b)) => a == b,
            _ => false,
        };
        out.push(CompoundSplit {
            first: first_entry,
            second: second_entry,
            second_surface,
            second_lenited,
            lenition_expected: orthography::is_lenitable(&second_root),
            seam_ok,
        });
    }
    out
}

fn resolve_first_element(form: &str, ga: &Lexicon, rules: &RuleSet) -> Option<LexEntry> {
    if let Some(entry) = ga.get(form).iter().find(|e| noun_like(e)) {
        return Some(entry.clone());
    }
    // A plural first element: resolve through its chain.
    resolve_stem(form, ga, rules, 1)
        .into_iter()
        .find(|c| c.resolved() && c.violations.is_empty() && c.outer_step_is_inflection())
        .and_then(|c| c.stem_entry)
        .filter(noun_like)
}

fn strip_lenition(form: &str) -> (bool, String) {
    for (kind, root) in orthography::detect_and_strip_mutation(form) {
        if kind == MutationKind::Lenition {
            return (true, root);
        }
    }
    (false, form.to_string())
}

/// Resolve a form as a lexicon word or a plural/genitive inflection of
/// one (used for the tail of compounds and prefixed words).
fn resolve_inflected(form: &str, ga: &Lexicon, rules: &RuleSet) -> Option<LexEntry> {
    if let Some(entry) = ga.get(form).iter().find(|e| noun_like(e)) {
        return Some(entry.clone());
    }
    for chain in top_chains(form, ga, rules) {
        if chain.resolved() && chain.violations.is_empty() {
            if let Some(entry) = chain.stem_entry {
                if noun_like(&entry) {
                    return Some(entry);
                }
            }
        }
    }
    None
}

/// All readings of a word as known-prefix + stem, with the lenition
/// bookkeeping the prefix imposes. Only resolvable remainders are
/// reported.
pub fn check_prefix(word: &str, ga: &Lexicon, rules: &RuleSet) -> Vec<PrefixAnalysis> {
    let folded = orthography::fold(word);
    let mut out = Vec::new();
    for prefix in &rules.prefixes {
        let Some(raw_remainder) = folded.strip_prefix(&prefix.form) else {
            continue;
        };
        let remainder = raw_remainder.trim_start_matches('-');
        if remainder.chars().count() < MIN_STEM_CHARS {
            continue;
        }
        let (lenition_present, remainder_root) = strip_lenition(remainder);
        let resolved = resolve_inflected(&remainder_root, ga, rules).is_some()
            || remainder_resolves_as_verb(&remainder_root, ga, rules);
        if !resolved {
            continue;
        }
        out.push(PrefixAnalysis {
            prefix: prefix.form.clone(),
            prefix_native: prefix.native,
            remainder: remainder.to_string(),
            remainder_root: remainder_root.clone(),
            lenition_expected: orthography::is_lenitable(&remainder_root),
            lenition_present,
        });
    }
    out
}

fn remainder_resolves_as_verb(form: &str, ga: &Lexicon, rules: &RuleSet) -> bool {
    verbmorph::parse_verb(form, rules)
        .iter()
        .any(|a| !ga.get(&a.root).is_empty())
}

/// Suffix-chain readings from the top of a word: derivational chains,
/// plus genitive/plural/slenderization as the outermost layer only.
pub fn top_chains(word: &str, ga: &Lexicon, rules: &RuleSet) -> Vec<SuffixChain> {
    let folded = orthography::fold(word);
    let chars: Vec<char> = folded.chars().collect();
    let mut out = resolve_stem(&folded, ga, rules, MAX_CHAIN_DEPTH);
    // Never report the word itself as a chain: callers deal in OOV words;
    // a zero-step resolution would mean the word is not OOV at all.
    out.retain(|c| !c.steps.is_empty());

    for affix in &rules.noun_affixes {
        if !matches!(affix.kind, AffixKind::Genitive | AffixKind::WeakPlural) {
            continue;
        }
        let s_len = affix.form.chars().count();
        if chars.len() < s_len + MIN_STEM_CHARS {
            continue;
        }
        let tail: String = chars[chars.len() - s_len..].iter().collect();
        if tail != affix.form {
            continue;
        }
        let base: String = chars[..chars.len() - s_len].iter().collect();
        if !stem_usable(&base) {
            continue;
        }
        let step = if affix.kind == AffixKind::Genitive {
            ChainStep::Genitive(affix.form.clone())
        } else {
            ChainStep::WeakA
        };
        let subs = resolve_stem(&base, ga, rules, MAX_CHAIN_DEPTH);
        if subs.iter().any(|s| s.resolved()) {
            for sub in subs.into_iter().filter(|s| s.resolved()) {
                let mut steps = vec![step.clone()];
                steps.extend(sub.steps.clone());
                out.push(SuffixChain {
                    steps,
                    stem: sub.stem,
                    stem_entry: sub.stem_entry,
                    violations: sub.violations,
                });
            }
        } else {
            out.push(SuffixChain {
                steps: vec![step],
                stem: base,
                stem_entry: None,
                violations: Vec::new(),
            });
        }
    }

    for strong in rules.affixes_of(AffixKind::StrongPlural) {
        let s_len = strong.form.chars().count();
        if chars.len() < s_len + MIN_STEM_CHARS {
            continue;
        }
        let tail: String = chars[chars.len() - s_len..].iter().collect();
        if tail != strong.form {
            continue;
        }
        let stem: String = chars[..chars.len() - s_len].iter().collect();
        if !stem_usable(&stem) {
            continue;
        }
        let subs = resolve_stem(&stem, ga, rules, MAX_CHAIN_DEPTH);
        let mut any = false;
        for sub in subs.into_iter().filter(|s| s.resolved()) {
            any = true;
            let mut violations = sub.violations.clone();
            if !seam_agrees(&stem, strong.class) {
                violations.push(Violation::new(
                    RuleId::SuffixClassMismatch,
                    format!("-{} needs a {} stem: {}", strong.form, strong.class, stem),
                ));
            }
            if sub.steps.is_empty() {
                if let Some(entry) = &sub.stem_entry {
                    if !noun_like(entry) {
                        violations.push(Violation::new(
                            RuleId::DerivBaseMismatch,
                            format!(
                                "-{} does not attach to {} {}",
                                strong.form, entry.pos, entry.form
                            ),
                        ));
                    }
                }
            }
            let mut steps = vec![ChainStep::Strong(strong.form.clone())];
            steps.extend(sub.steps.clone());
            out.push(SuffixChain {
                steps,
                stem: sub.stem,
                stem_entry: sub.stem_entry,
                violations,
            });
        }
        if !any {
            out.push(SuffixChain {
                steps: vec![ChainStep::Strong(strong.form.clone())],
                stem,
                stem_entry: None,
                violations: Vec::new(),
            });
        }
    }

    for root in deslenderize(&folded) {
        let subs = resolve_stem(&root, ga, rules, MAX_CHAIN_DEPTH);
        let mut any = false;
        for sub in subs.into_iter().filter(|s| s.resolved()) {
            any = true;
            let mut steps = vec![ChainStep::Slenderized];
            steps.extend(sub.steps.clone());
            out.push(SuffixChain {
                steps,
                stem: sub.stem,
                stem_entry: sub.stem_entry,
                violations: sub.violations,
            });
        }
        if !any {
            out.push(SuffixChain {
                steps: vec![ChainStep::Slenderized],
                stem: root,
                stem_entry: None,
                violations: Vec::new(),
            });
        }
    }

    dedup_chains(out)
}

fn dedup_chains(chains: Vec<SuffixChain>) -> Vec<SuffixChain> {
    let mut out: Vec<SuffixChain> = Vec::new();
    for c in chains {
        if !out.iter().any(|o| o.steps == c.steps && o.stem == c.stem) {
            out.push(c);
        }
    }
    out
}

/// Readings of a word as English root + Irish affix (derivational or
/// strong plural). The root must be, or truncate, an English lexicon word.
pub fn eng_root_affixes(
    word: &str,
    eng: &Lexicon,
    rules: &RuleSet,
    cfg: &Config,
) -> Vec<EngRootAffix> {
    let folded = orthography::fold(word);
    let chars: Vec<char> = folded.chars().collect();
    let mut out = Vec::new();
    for affix in &rules.noun_affixes {
        if !matches!(affix.kind, AffixKind::Deriv | AffixKind::StrongPlural) {
            continue;
        }
        let s_len = affix.form.chars().count();
        if chars.len() < s_len + cfg.min_english_root_len {
            continue;
        }
        let tail: String = chars[chars.len() - s_len..].iter().collect();
        if tail != affix.form {
            continue;
        }
        let root: String = chars[..chars.len() - s_len].iter().collect();
        let Some(eng_word) =
            eng.english_root_match(&root, cfg.min_english_root_len, cfg.truncated_root_min_len)
        else {
            continue;
        };
        // The whole root must be English: an exact word, or a truncation
        // of a longer one. A match on a shorter prefix would leave
        // unexplained residue in the root.
        if eng_word != root && !eng_word.starts_with(root.as_str()) {
            continue;
        }
        out.push(EngRootAffix {
            root,
            eng_word,
            affix: affix.clone(),
        });
    }
    out
}

enum Disposition {
    Satisfying,
    Neutral,
    Violating(Vec<Violation>),
}

fn ortho_violations(form: &str, skip_alpha: bool, skip_harmony: bool) -> Vec<Violation> {
    let mut out = Vec::new();
    if !skip_alpha {
        let letters = orthography::check_alphabet(form);
        if !letters.is_empty() {
            out.push(Violation::new(
                RuleId::NonNativeLetter,
                format!("{form} carries non-native {letters:?}"),
            ));
        }
    }
    let geminates = orthography::check_geminates(form);
    if !geminates.is_empty() {
        out.push(Violation::new(
            RuleId::IllegalGeminate,
            format!("{form} doubles {geminates:?}"),
        ));
    }
    if !skip_harmony {
        match orthography::check_vowel_harmony(form) {
            Ok(report) => {
                for v in report.violations {
                    out.push(Violation::new(
                        RuleId::VowelHarmony,
                        format!(
                            "cluster {:?} splits {} and {}",
                            v.cluster, v.left, v.right
                        ),
                    ));
                }
            }
            Err(_) => out.push(Violation::new(
                RuleId::UnanalyzableToken,
                format!("{form:?} has no vowel"),
            )),
        }
    }
    out
}

fn compound_disposition(split: &CompoundSplit, reading: &str) -> Disposition {
    let mut violations = Vec::new();
    if split.lenition_expected && !split.second_lenited {
        violations.push(Violation::new(
            RuleId::CompoundLenitionMissing,
            format!(
                "second element {} must be lenited after {}",
                split.second.form, split.first.form
            ),
        ));
    }
    if !split.seam_ok {
        violations.push(Violation::new(
            RuleId::SeamHarmonyMismatch,
            format!(
                "classes clash where {} meets {}",
                split.first.form, split.second_surface
            ),
        ));
    }
    violations.extend(ortho_violations(&split.first.form, false, false));
    let (_, second_root) = strip_lenition(&split.second_surface);
    violations.extend(ortho_violations(&second_root, !split.second.native, false));
    let _ = reading;
    if violations.is_empty() {
        Disposition::Satisfying
    } else {
        Disposition::Violating(violations)
    }
}

fn prefix_disposition(p: &PrefixAnalysis) -> Disposition {
    let mut violations = Vec::new();
    if !p.prefix_native {
        violations.push(Violation::new(
            RuleId::ForeignPrefix,
            format!("prefix {}- kept in source form", p.prefix),
        ));
    }
    if p.lenition_expected && !p.lenition_present {
        violations.push(Violation::new(
            RuleId::PrefixLenitionMissing,
            format!("{} after {}- must be lenited", p.remainder_root, p.prefix),
        ));
    }
    // The prefix seam is conventionalized; harmony applies within the
    // remainder, not across the join.
    violations.extend(ortho_violations(&p.remainder_root, false, false));
    if violations.is_empty() {
        Disposition::Satisfying
    } else {
        Disposition::Violating(violations)
    }
}

fn chain_disposition(chain: &SuffixChain, reading: &str) -> Disposition {
    if chain.resolved() {
        let mut violations = chain.violations.clone();
        let loan_root = chain
            .stem_entry
            .as_ref()
            .map(|e| !e.native)
            .unwrap_or(false);
        // A loanword root keeps its own spelling; the affixed material
        // around it must still conform.
        if loan_root {
            let stem_len = chain.stem.chars().count();
            let tail: String = orthography::fold(reading).chars().skip(stem_len).collect();
            violations.extend(ortho_violations(&tail, false, true));
        } else {
            violations.extend(ortho_violations(reading, false, false));
        }
        if violations.is_empty() {
            Disposition::Satisfying
        } else {
            Disposition::Violating(violations)
        }
    } else {
        // Unresolved stems: a plural demands an existing lemma; genitive
        // endings and slenderized shapes are too generic to convict;
        // derivation may be coining a stem, which is tolerated exactly
        // when the coined stem is orthographically clean.
        match chain.steps.first() {
            Some(ChainStep::Strong(s)) => {
                let mut violations = vec![Violation::new(
                    RuleId::PluralOfUnknownStem,
                    format!("-{} pluralizes unknown stem {}", s, chain.stem),
                )];
                violations.extend(
                    ortho_violations(&chain.stem, false, false)
                        .into_iter()
                        .filter(|v| v.rule != RuleId::UnanalyzableToken),
                );
                Disposition::Violating(violations)
            }
            Some(ChainStep::Deriv(_)) => {
                if orthographically_clean(&chain.stem) {
                    Disposition::Neutral
                } else {
                    Disposition::Violating(ortho_violations(&chain.stem, false, false))
                }
            }
            _ => Disposition::Neutral,
        }
    }
}

fn eng_affix_disposition(a: &EngRootAffix) -> Disposition {
    let mut violations = Vec::new();
    if !seam_agrees(&a.root, a.affix.class) {
        violations.push(Violation::new(
            RuleId::SuffixClassMismatch,
            format!("-{} needs a {} stem: {}", a.affix.form, a.affix.class, a.root),
        ));
    }
    if !a.affix.loan_ok {
        // This suffix demands a native-conformant base.
        violations.extend(ortho_violations(&a.root, false, false));
    }
    if violations.is_empty() {
        Disposition::Satisfying
    } else {
        Disposition::Violating(violations)
    }
}

/// Validate a word as a noun form. Conformant when some structural
/// reading fully satisfies the rules, or when the word commits to no
/// structure and is orthographically clean throughout.
pub fn validate_noun(
    word: &str,
    ga: &Lexicon,
    eng: &Lexicon,
    rules: &RuleSet,
    cfg: &Config,
) -> RuleVerdict {
    let readings = orthography::detect_and_strip_mutation(word);
    // A surface that pattern-matches a mutation (an initial lenition
    // digraph, an eclipsis cluster) is read through that mutation; its
    // unmutated reading cannot claim to be a clean standalone coinage,
    // because no lemma begins with a mutation artifact.
    let looks_mutated = readings.len() > 1;
    let mut all_violations: Vec<Violation> = Vec::new();
    for (kind, reading) in &readings {
        let allow_fallback = !(looks_mutated && *kind == MutationKind::None);
        match validate_reading(reading, ga, eng, rules, cfg, allow_fallback) {
            Ok(()) => return RuleVerdict::conformant(),
            Err(violations) => {
                for v in violations {
                    if !all_violations.contains(&v) {
                        all_violations.push(v);
                    }
                }
            }
        }
    }
    if all_violations.is_empty() {
        all_violations.push(Violation::new(
            RuleId::UnanalyzableToken,
            format!("{word:?} has no conformant reading"),
        ));
    }
    RuleVerdict::violating(all_violations)
}

fn validate_reading(
    reading: &str,
    ga: &Lexicon,
    eng: &Lexicon,
    rules: &RuleSet,
    cfg: &Config,
    allow_fallback: bool,
) -> Result<(), Vec<Violation>> {
    let mut violations: Vec<Violation> = Vec::new();
    let mut any_violating = false;

    let mut absorb = |d: Disposition, any_violating: &mut bool| -> bool {
        match d {
            Disposition::Satisfying => true,
            Disposition::Neutral => false,
            Disposition::Violating(vs) => {
                *any_violating = true;
                for v in vs {
                    if !violations.contains(&v) {
                        violations.push(v);
                    }
                }
                false
            }
        }
    };

    for split in split_compound(reading, ga, rules) {
        if absorb(compound_disposition(&split, reading), &mut any_violating) {
            return Ok(());
        }
    }
    for p in check_prefix(reading, ga, rules) {
        if absorb(prefix_disposition(&p), &mut any_violating) {
            return Ok(());
        }
    }
    for chain in top_chains(reading, ga, rules) {
        if absorb(chain_disposition(&chain, reading), &mut any_violating) {
            return Ok(());
        }
    }
    for a in eng_root_affixes(reading, eng, rules, cfg) {
        if absorb(eng_affix_disposition(&a), &mut any_violating) {
            return Ok(());
        }
    }

    if any_violating {
        return Err(violations);
    }
    if !allow_fallback {
        return Err(Vec::new());
    }
    // No structural commitment (or only neutral shapes): judge the
    // orthography of the whole reading.
    let ortho = ortho_violations(reading, false, false);
    if ortho.is_empty() {
        Ok(())
    } else {
        Err(ortho)
    }
}
