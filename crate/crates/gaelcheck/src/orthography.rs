//! Character-level Irish orthographic machinery.
//!
//! Everything here is a pure function over NFC-normalized text: vowel
//! classification into broad/slender, native-alphabet checks, vowel-harmony
//! validation across internal consonant clusters, application and stripping
//! of initial mutations, and heuristic syllable counting.

use std::collections::BTreeSet;

use unicode_normalization::UnicodeNormalization;

use crate::error::GaelError;

/// Broad/slender classification of Irish vowels.
///
/// Broad (leathan): a á o ó u ú. Slender (caol): e é i í. Suffix selection
/// and vowel harmony both key off this split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum VowelClass {
    Broad,
    Slender,
}

impl std::fmt::Display for VowelClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VowelClass::Broad => write!(f, "broad"),
            VowelClass::Slender => write!(f, "slender"),
        }
    }
}

/// Initial mutations recognized on word forms.
///
/// At most one initial mutation is carried per word form. Stripping one
/// yields a root candidate whose first letter is the root initial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MutationKind {
    None,
    Lenition,
    Eclipsis,
    TPrefix,
    HPrefix,
}

impl std::fmt::Display for MutationKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MutationKind::None => write!(f, "none"),
            MutationKind::Lenition => write!(f, "lenition"),
            MutationKind::Eclipsis => write!(f, "eclipsis"),
            MutationKind::TPrefix => write!(f, "t-prefix"),
            MutationKind::HPrefix => write!(f, "h-prefix"),
        }
    }
}

/// One vowel-harmony failure: an internal consonant cluster flanked by
/// vowels of differing class.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HarmonyViolation {
    /// Char-index range `[start, end)` of the offending cluster.
    pub span: (usize, usize),
    /// The cluster itself, for diagnostics.
    pub cluster: String,
    pub left: VowelClass,
    pub right: VowelClass,
}

/// Result of [`check_vowel_harmony`]. `passed` holds exactly when
/// `violations` is empty.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct HarmonyReport {
    pub passed: bool,
    pub violations: Vec<HarmonyViolation>,
}

/// NFC-normalize a string.
pub fn nfc(s: &str) -> String {
    s.nfc().collect()
}

/// NFC-normalize and lowercase for matching. Fada vowels keep their fada:
/// Á folds to á, never to a.
pub fn fold(s: &str) -> String {
    nfc(s).to_lowercase()
}

/// Classify a single character as a broad or slender vowel.
///
/// Total over the ten vowel letters (case-insensitive), `None` for
/// everything else, consonants included.
pub fn classify_vowel(c: char) -> Option<VowelClass> {
    match c.to_lowercase().next().unwrap_or(c) {
        'a' | 'á' | 'o' | 'ó' | 'u' | 'ú' => Some(VowelClass::Broad),
        'e' | 'é' | 'i' | 'í' => Some(VowelClass::Slender),
        _ => None,
    }
}

/// True for the ten Irish vowel letters. 'h' is never a vowel here; inside
/// a word it marks lenition and counts as cluster material.
pub fn is_vowel(c: char) -> bool {
    classify_vowel(c).is_some()
}

/// Letters outside the native Irish alphabet.
const NON_NATIVE: [char; 8] = ['j', 'k', 'q', 'v', 'w', 'x', 'y', 'z'];

/// Collect every distinct non-native letter occurring in `word`
/// (case-insensitive). Empty set means the word uses native letters only.
pub fn check_alphabet(word: &str) -> BTreeSet<char> {
    fold(word)
        .chars()
        .filter(|c| NON_NATIVE.contains(c))
        .collect()
}

/// Collect illegal geminates: doubled consonant letters other than the
/// native ll/nn/rr. Doubled vowels are left alone (they form vowel groups).
pub fn check_geminates(word: &str) -> BTreeSet<String> {
    let folded = fold(word);
    let chars: Vec<char> = folded.chars().collect();
    let mut out = BTreeSet::new();
    for pair in chars.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if a == b && a.is_alphabetic() && !is_vowel(a) && !matches!(a, 'l' | 'n' | 'r') {
            out.insert(format!("{a}{b}"));
        }
    }
    out
}

/// Check "caol le caol agus leathan le leathan": for every maximal internal
/// consonant cluster flanked by vowels on both sides, the flanking vowels
/// must share a class. Word-initial and word-final clusters have one flank
/// and are exempt. Non-letter characters (hyphens, apostrophes) count as
/// cluster material.
pub fn check_vowel_harmony(word: &str) -> Result<HarmonyReport, GaelError> {
    let folded = fold(word);
    let chars: Vec<char> = folded.chars().collect();
    if !chars.iter().copied().any(is_vowel) {
        return Err(GaelError::Unanalyzable(word.to_string()));
    }

    let mut violations = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if is_vowel(chars[i]) {
            i += 1;
            continue;
        }
        let start = i;
        while i < chars.len() && !is_vowel(chars[i]) {
            i += 1;
        }
        // Cluster [start, i). Internal iff a vowel sits on both sides.
        if start == 0 || i == chars.len() {
            continue;
        }
        let left = classify_vowel(chars[start - 1]).expect("left flank is a vowel");
        let right = classify_vowel(chars[i]).expect("right flank is a vowel");
        if left != right {
            violations.push(HarmonyViolation {
                span: (start, i),
                cluster: chars[start..i].iter().collect(),
                left,
                right,
            });
        }
    }

    Ok(HarmonyReport {
        passed: violations.is_empty(),
        violations,
    })
}

/// Count syllables as maximal contiguous vowel-letter groups. A heuristic:
/// Irish digraphs and triphthongs make true syllabification more involved,
/// but vowel-group counting is what conjugation-class assignment needs.
pub fn syllable_count(word: &str) -> Result<usize, GaelError> {
    let folded = fold(word);
    let mut count = 0;
    let mut in_group = false;
    for c in folded.chars() {
        if is_vowel(c) {
            if !in_group {
                count += 1;
                in_group = true;
            }
        } else {
            in_group = false;
        }
    }
    if count == 0 {
        return Err(GaelError::Unanalyzable(word.to_string()));
    }
    Ok(count)
}

/// Class of the last vowel in a stem; this decides which suffix class the
/// stem may take.
pub fn final_quality(stem: &str) -> Result<VowelClass, GaelError> {
    fold(stem)
        .chars()
        .rev()
        .find_map(classify_vowel)
        .ok_or_else(|| GaelError::Unanalyzable(stem.to_string()))
}

/// Class of the first vowel in a stem. Used for seam checks on suffix
/// attachment when the suffix itself begins with a consonant.
pub fn initial_quality(stem: &str) -> Result<VowelClass, GaelError> {
    fold(stem)
        .chars()
        .find_map(classify_vowel)
        .ok_or_else(|| GaelError::Unanalyzable(stem.to_string()))
}

/// Initials that take lenition unconditionally.
const LENITABLE_PLAIN: [char; 8] = ['b', 'c', 'd', 'f', 'g', 'm', 'p', 't'];

/// Whether a word-initial position is subject to lenition. Initial s takes
/// lenition only before a vowel or l/n/r; l, n, r, h and vowels never do.
pub fn is_lenitable(word: &str) -> bool {
    let folded = fold(word);
    let mut it = folded.chars();
    let Some(first) = it.next() else {
        return false;
    };
    if LENITABLE_PLAIN.contains(&first) {
        // An 'h' already in second position means the form is lenited.
        return it.next() != Some('h');
    }
    if first == 's' {
        return matches!(it.next(), Some(c) if is_vowel(c) || matches!(c, 'l' | 'n' | 'r'));
    }
    false
}

/// Apply lenition to a root: insert 'h' after a lenitable initial. Roots
/// with unlenitable initials (l, n, r, h, vowels, s before a stop) come
/// back unchanged, as do forms that already carry the 'h'.
pub fn apply_lenition(root: &str) -> String {
    if !is_lenitable(root) {
        return root.to_string();
    }
    let mut chars = root.chars();
    let first = chars.next().expect("non-empty: is_lenitable passed");
    let mut out = String::with_capacity(root.len() + 1);
    out.push(first);
    out.push('h');
    out.extend(chars);
    out
}

/// Apply eclipsis to a root: prepend the voiced/nasal counterpart
/// (b→mb, c→gc, d→nd, f→bhf, g→ng, p→bp, t→dt) or n- before a vowel.
/// Other initials do not take eclipsis and come back unchanged.
pub fn apply_eclipsis(root: &str) -> String {
    let folded = fold(root);
    let Some(first) = folded.chars().next() else {
        return root.to_string();
    };
    let prefix = match first {
        'b' => "m",
        'c' => "g",
        'd' => "n",
        'f' => "bh",
        'g' => "n",
        'p' => "b",
        't' => "d",
        v if is_vowel(v) => "n-",
        _ => return root.to_string(),
    };
    format!("{prefix}{root}")
}

/// Return all plausible initial-mutation readings of a word, always
/// including the unmutated reading. Roots come back case-folded. Readings
/// are ordered none, lenition, eclipsis, t-prefix, h-prefix; lookup relies
/// on that order.
pub fn detect_and_strip_mutation(word: &str) -> Vec<(MutationKind, String)> {
    let folded = fold(word);
    let chars: Vec<char> = folded.chars().collect();
    let orig: Vec<char> = nfc(word).chars().collect();
    let mut readings = vec![(MutationKind::None, folded.clone())];
    if chars.len() < 2 {
        return readings;
    }

    let rest_from = |n: usize| -> String { chars[n..].iter().collect() };
    let upper_vowel_second = orig.len() >= 2 && orig[1].is_uppercase() && is_vowel(orig[1]);

    // Lenition: Ch-pattern on b/c/d/f/g/m/p/s/t.
    if chars[1] == 'h' && matches!(chars[0], 'b' | 'c' | 'd' | 'f' | 'g' | 'm' | 'p' | 's' | 't')
    {
        if chars.len() > 2 {
            readings.push((MutationKind::Lenition, format!("{}{}", chars[0], rest_from(2))));
        }
    }

    // Eclipsis digraphs and n-prefixed vowels.
    let ecl = match (chars[0], chars[1], chars.get(2)) {
        ('b', 'h', Some('f')) => Some(rest_from(2)),
        ('m', 'b', _) | ('g', 'c', _) | ('n', 'd', _) | ('n', 'g', _) | ('b', 'p', _)
        | ('d', 't', _) => Some(rest_from(1)),
        ('n', '-', Some(v)) if is_vowel(*v) => Some(rest_from(2)),
        ('n', v, _) if is_vowel(v) && upper_vowel_second => Some(rest_from(1)),
        _ => None,
    };
    if let Some(root) = ecl {
        if !root.is_empty() {
            readings.push((MutationKind::Eclipsis, root));
        }
    }

    // t-prefix: t-úll / tÚll, and ts+vowel (an tsúil → súil).
    let tpre = match (chars[0], chars[1], chars.get(2)) {
        ('t', '-', Some(v)) if is_vowel(*v) => Some(rest_from(2)),
        ('t', v, _) if is_vowel(v) && upper_vowel_second => Some(rest_from(1)),
        ('t', 's', Some(v)) if is_vowel(*v) => Some(rest_from(1)),
        _ => None,
    };
    if let Some(root) = tpre {
        if !root.is_empty() {
            readings.push((MutationKind::TPrefix, root));
        }
    }

    // h-prefix before a vowel.
    if chars[0] == 'h' && is_vowel(chars[1]) {
        readings.push((MutationKind::HPrefix, rest_from(1)));
    }

    readings
}
