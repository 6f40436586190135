//! Immutable wordlists with POS tags and native/loanword flags.
//!
//! The lexicon is the operational stand-in for "a corresponding word exists
//! in Irish": a token that resolves here, directly or through mutation
//! stripping, is not an invented word. File format (UTF-8, LF):
//!
//! ```text
//! # comment
//! form[<TAB>pos[<TAB>native|loan]]
//! ```
//!
//! `pos` is one of Noun, Verb, Adjective, Other (case-insensitive);
//! it defaults to Unknown. The native flag defaults to native.

use std::collections::BTreeMap;
use std::io::Read;

use crate::error::GaelError;
use crate::orthography::{self, MutationKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize, serde::Deserialize)]
pub enum Pos {
    Noun,
    Verb,
    Adjective,
    Other,
    Unknown,
}

impl Pos {
    fn parse(s: &str) -> Option<Pos> {
        match s.to_ascii_lowercase().as_str() {
            "noun" => Some(Pos::Noun),
            "verb" => Some(Pos::Verb),
            "adjective" | "adj" => Some(Pos::Adjective),
            "other" => Some(Pos::Other),
            _ => None,
        }
    }
}

impl std::fmt::Display for Pos {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Pos::Noun => "noun",
            Pos::Verb => "verb",
            Pos::Adjective => "adjective",
            Pos::Other => "other",
            Pos::Unknown => "unknown",
        };
        write!(f, "{s}")
    }
}

/// One wordlist entry. `form` is NFC, lowercased, fada preserved.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct LexEntry {
    pub form: String,
    pub pos: Pos,
    pub native: bool,
}

/// Outcome of resolving a token against a lexicon.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LookupResult {
    /// Surface form present as-is.
    Exact(LexEntry),
    /// Surface resolves after stripping an initial mutation.
    ViaMutation {
        kind: MutationKind,
        root: String,
        entry: LexEntry,
    },
    /// Out of vocabulary.
    Absent,
}

impl LookupResult {
    pub fn is_absent(&self) -> bool {
        matches!(self, LookupResult::Absent)
    }
}

/// Immutable wordlist. Built once by [`load_lexicon`], then shared freely:
/// every operation on it is read-only and iteration order is fixed.
#[derive(Debug, Clone, Default)]
pub struct Lexicon {
    entries: BTreeMap<String, Vec<LexEntry>>,
    warnings: Vec<String>,
}

/// Embedded seed Irish wordlist.
pub const SEED_IRISH: &str = include_str!("../data/irish_seed.tsv");
/// Embedded seed English wordlist.
pub const SEED_ENGLISH: &str = include_str!("../data/english_seed.tsv");

impl Lexicon {
    /// The bundled Irish seed lexicon.
    pub fn seed_irish() -> Lexicon {
        load_lexicon_str(SEED_IRISH).expect("embedded Irish seed parses")
    }

    /// The bundled English seed lexicon.
    pub fn seed_english() -> Lexicon {
        load_lexicon_str(SEED_ENGLISH).expect("embedded English seed parses")
    }

    pub fn len(&self) -> usize {
        self.entries.values().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Lines that failed to parse during load, for diagnostics.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    pub fn contains(&self, form: &str) -> bool {
        self.entries.contains_key(&orthography::fold(form))
    }

    /// All entries for a form (a form may carry several POS tags).
    pub fn get(&self, form: &str) -> &[LexEntry] {
        self.entries
            .get(&orthography::fold(form))
            .map(Vec::as_slice)
            .unwrap_or(&[])
    }

    /// Whether the form is listed with the given POS.
    pub fn has_pos(&self, form: &str, pos: Pos) -> bool {
        self.get(form).iter().any(|e| e.pos == pos)
    }

    /// Deterministic iteration over all entries, sorted by form.
    pub fn iter(&self) -> impl Iterator<Item = &LexEntry> {
        self.entries.values().flatten()
    }

    /// Deterministic list of forms with the given POS.
    pub fn forms_with_pos(&self, pos: Pos) -> Vec<&str> {
        self.iter()
            .filter(|e| e.pos == pos)
            .map(|e| e.form.as_str())
            .collect()
    }

    /// Resolve a token: exact surface first, then each mutation reading in
    /// the fixed order none, lenition, eclipsis, t-prefix, h-prefix. First
    /// hit wins.
    pub fn lookup(&self, token: &str) -> LookupResult {
        for (kind, root) in orthography::detect_and_strip_mutation(token) {
            if let Some(entries) = self.entries.get(&root) {
                let entry = entries[0].clone();
                return match kind {
                    MutationKind::None => LookupResult::Exact(entry),
                    _ => LookupResult::ViaMutation { kind, root, entry },
                };
            }
        }
        LookupResult::Absent
    }

    /// Longest lexicon word that equals `fragment` or is a prefix of it,
    /// at least `min_len` chars long. When nothing matches and the fragment
    /// itself is at least `truncated_min_len` chars, fall back to treating
    /// the fragment as a truncation of a longer lexicon word (the shortest
    /// completion wins). Supports matching clipped borrowings where the
    /// donor word was cut mid-stem.
    pub fn english_root_match(
        &self,
        fragment: &str,
        min_len: usize,
        truncated_min_len: usize,
    ) -> Option<String> {
        let frag = orthography::fold(fragment);
        let frag_chars: Vec<char> = frag.chars().collect();
        if frag_chars.len() >= min_len {
            for end in (min_len..=frag_chars.len()).rev() {
                let prefix: String = frag_chars[..end].iter().collect();
                if self.entries.contains_key(&prefix) {
                    return Some(prefix);
                }
            }
        }
        if frag_chars.len() >= truncated_min_len {
            let mut best: Option<&str> = None;
            for form in self.entries.range(frag.clone()..).map(|(k, _)| k.as_str()) {
                if !form.starts_with(frag.as_str()) {
                    break;
                }
                if form.len() > frag.len() {
                    match best {
                        Some(b) if b.len() <= form.len() => {}
                        _ => best = Some(form),
                    }
                }
            }
            return best.map(str::to_string);
        }
        None
    }
}

/// Load a lexicon from a byte stream. Malformed lines are collected as
/// warnings rather than aborting the load; an empty result is a
/// configuration error, a non-UTF-8 stream a format error.
pub fn load_lexicon<R: Read>(mut source: R) -> Result<Lexicon, GaelError> {
    let mut bytes = Vec::new();
    source.read_to_end(&mut bytes)?;
    let text = String::from_utf8(bytes)
        .map_err(|e| GaelError::Format(format!("lexicon is not valid UTF-8: {e}")))?;
    load_lexicon_str(&text)
}

/// Load a lexicon from an in-memory string (used for the embedded seeds).
pub fn load_lexicon_str(text: &str) -> Result<Lexicon, GaelError> {
    let mut lex = Lexicon::default();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim_end_matches('\r');
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut fields = line.split('\t');
        let form_raw = fields.next().unwrap_or_default().trim();
        if form_raw.is_empty() {
            lex.warnings.push(format!("line {}: empty form", lineno + 1));
            continue;
        }
        let form = orthography::fold(form_raw);

        let mut pos = Pos::Unknown;
        if let Some(pos_field) = fields.next() {
            match Pos::parse(pos_field.trim()) {
                Some(p) => pos = p,
                None => {
                    lex.warnings
                        .push(format!("line {}: unknown pos {:?}", lineno + 1, pos_field));
                    continue;
                }
            }
        }

        let mut native = true;
        if let Some(native_field) = fields.next() {
            match native_field.trim() {
                "native" => native = true,
                "loan" => native = false,
                other => {
                    lex.warnings.push(format!(
                        "line {}: expected native|loan, got {:?}",
                        lineno + 1,
                        other
                    ));
                    continue;
                }
            }
        }

        if fields.next().is_some() {
            lex.warnings
                .push(format!("line {}: too many fields", lineno + 1));
            continue;
        }

        let bucket = lex.entries.entry(form.clone()).or_default();
        if !bucket.iter().any(|e| e.pos == pos) {
            bucket.push(LexEntry { form, pos, native });
            bucket.sort_by_key(|e| e.pos);
        }
    }

    if lex.is_empty() {
        return Err(GaelError::Config("lexicon has no entries".into()));
    }
    Ok(lex)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn load_single_entry() {
        let lex = load_lexicon_str("gaoth\tNoun\tnative\n").unwrap();
        assert_eq!(lex.len(), 1);
        let e = &lex.get("gaoth")[0];
        assert_eq!(e.pos, Pos::Noun);
        assert!(e.native);
    }

    #[test]
    fn load_loanword() {
        let lex = load_lexicon_str("zú\tNoun\tloan\n").unwrap();
        assert!(!lex.get("zú")[0].native);
    }

    #[test]
    fn empty_lexicon_is_config_error() {
        assert!(matches!(load_lexicon_str(""), Err(GaelError::Config(_))));
        assert!(matches!(
            load_lexicon_str("# only comments\n"),
            Err(GaelError::Config(_))
        ));
    }

    #[test]
    fn malformed_lines_become_warnings() {
        let lex = load_lexicon_str("gaoth\tNoun\nbad\tNotAPos\nceist\tNoun\textra\tfield\n").unwrap();
        assert_eq!(lex.len(), 1);
        assert_eq!(lex.warnings().len(), 2);
    }

    #[test]
    fn duplicate_form_pos_collapses() {
        let lex = load_lexicon_str("gaoth\tNoun\ngaoth\tNoun\ngaoth\tVerb\n").unwrap();
        assert_eq!(lex.get("gaoth").len(), 2);
    }

    #[test]
    fn lookup_paths() {
        let lex = load_lexicon_str("gaoth\tNoun\nmoill\tNoun\n").unwrap();
        assert!(matches!(lex.lookup("gaoth"), LookupResult::Exact(_)));
        match lex.lookup("mhoill") {
            LookupResult::ViaMutation { kind, root, .. } => {
                assert_eq!(kind, MutationKind::Lenition);
                assert_eq!(root, "moill");
            }
            other => panic!("expected via-mutation, got {other:?}"),
        }
        assert!(lex.lookup("gaothmhoill").is_absent());
    }

    #[test]
    fn lookup_is_case_insensitive() {
        let lex = load_lexicon_str("moill\tNoun\n").unwrap();
        assert!(matches!(
            lex.lookup("Mhoill"),
            LookupResult::ViaMutation { .. }
        ));
    }

    #[test]
    fn english_root_matching() {
        let eng =
            load_lexicon_str("fan\ntend\nsimulate\nsimulator\nevolve\nevolution\nfantastic\n")
                .unwrap();
        assert_eq!(eng.english_root_match("fan", 3, 4), Some("fan".into()));
        assert_eq!(eng.english_root_match("tend", 3, 4), Some("tend".into()));
        assert_eq!(eng.english_root_match("xq", 3, 4), None);
        // Longest prefix wins.
        assert_eq!(
            eng.english_root_match("fanaithe", 3, 4),
            Some("fan".into())
        );
        // Truncated stems resolve to the shortest completion.
        assert_eq!(
            eng.english_root_match("simul", 3, 4),
            Some("simulate".into())
        );
        assert_eq!(eng.english_root_match("evol", 3, 4), Some("evolve".into()));
        // Below the truncation floor nothing fires.
        assert_eq!(eng.english_root_match("ev", 3, 4), None);
    }
}
