//! Affix inventories and their data-file format.
//!
//! The suffix and prefix tables live in plain UTF-8 TSV files so the
//! inventories can be audited and extended without code changes. Default
//! tables are embedded in the binary; callers may load replacements from
//! disk. Lines starting with `#` are comments.
//!
//! `verb_suffixes.tsv` — one suffix per line:
//!
//! ```text
//! conjugation<TAB>slot<TAB>class<TAB>suffix
//! first<TAB>pres-analytic<TAB>broad<TAB>ann
//! ```
//!
//! `noun_affixes.tsv` — one affix per line:
//!
//! ```text
//! kind<TAB>form<TAB>class<TAB>flags
//! strong-plural<TAB>eanna<TAB>slender<TAB>-
//! deriv<TAB>achtóir<TAB>broad<TAB>base=noun,loan-ok
//! ```
//!
//! kinds: `strong-plural`, `weak-plural`, `genitive`, `deriv`. Flags are
//! comma-separated: `base=noun|verb|adjective|any` names the POS the
//! suffix derives from, `loan-ok` marks suffixes productively attached to
//! English roots (word-level code-switching).
//!
//! `prefixes.tsv` — derivational prefixes, `form<TAB>native|loan`.
//! Loan-flagged prefixes are ones kept in their source-language form;
//! attaching them violates the rules.
//!
//! `english_prefixes.tsv` — `english<TAB>irish[|irish...]`: established
//! renderings of Greco-Latin prefixes. A translation whose source word
//! carries one of these but whose output does not start with any listed
//! Irish counterpart has mistranslated the prefix.

use crate::error::GaelError;
use crate::lexicon::Pos;
use crate::orthography::VowelClass;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conjugation {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerbSlot {
    Pres1Sg,
    PresAnalytic,
    Pres1Pl,
    PresAut,
    Past1Pl,
    PastAut,
    /// Bare past form: lenited root, no suffix. Not listed in the data
    /// file; recognized structurally.
    PastAnalytic,
}

impl VerbSlot {
    pub fn is_past(self) -> bool {
        matches!(
            self,
            VerbSlot::Past1Pl | VerbSlot::PastAut | VerbSlot::PastAnalytic
        )
    }
}

impl std::fmt::Display for VerbSlot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            VerbSlot::Pres1Sg => "pres-1sg",
            VerbSlot::PresAnalytic => "pres-analytic",
            VerbSlot::Pres1Pl => "pres-1pl",
            VerbSlot::PresAut => "pres-aut",
            VerbSlot::Past1Pl => "past-1pl",
            VerbSlot::PastAut => "past-aut",
            VerbSlot::PastAnalytic => "past-analytic",
        };
        write!(f, "{s}")
    }
}

/// One verb suffix: which conjugation and slot it fills and which root
/// class it demands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbSuffix {
    pub conjugation: Conjugation,
    pub slot: VerbSlot,
    pub class: VowelClass,
    pub form: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum AffixKind {
    StrongPlural,
    WeakPlural,
    Genitive,
    Deriv,
}

/// POS a derivational suffix accepts as its base.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasePos {
    Any,
    Noun,
    Verb,
    Adjective,
}

impl BasePos {
    pub fn accepts(self, pos: Pos) -> bool {
        match self {
            BasePos::Any => true,
            BasePos::Noun => matches!(pos, Pos::Noun | Pos::Unknown),
            BasePos::Verb => matches!(pos, Pos::Verb | Pos::Unknown),
            BasePos::Adjective => matches!(pos, Pos::Adjective | Pos::Unknown),
        }
    }
}

/// One noun affix entry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NounAffix {
    pub kind: AffixKind,
    pub form: String,
    pub class: VowelClass,
    pub base: BasePos,
    /// Productively attached to English roots; the root is then exempt
    /// from native orthography checks.
    pub loan_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixEntry {
    pub form: String,
    pub native: bool,
}

/// The full rule inventory used by the morphology validators.
#[derive(Debug, Clone, Default)]
pub struct RuleSet {
    pub verb_suffixes: Vec<VerbSuffix>,
    pub noun_affixes: Vec<NounAffix>,
    pub prefixes: Vec<PrefixEntry>,
    /// (english prefix, accepted Irish renderings)
    pub english_prefixes: Vec<(String, Vec<String>)>,
}

pub const DEFAULT_VERB_SUFFIXES: &str = include_str!("../data/verb_suffixes.tsv");
pub const DEFAULT_NOUN_AFFIXES: &str = include_str!("../data/noun_affixes.tsv");
pub const DEFAULT_PREFIXES: &str = include_str!("../data/prefixes.tsv");
pub const DEFAULT_ENGLISH_PREFIXES: &str = include_str!("../data/english_prefixes.tsv");

impl RuleSet {
    /// The embedded default inventories.
    pub fn builtin() -> RuleSet {
        RuleSet::parse(
            DEFAULT_VERB_SUFFIXES,
            DEFAULT_NOUN_AFFIXES,
            DEFAULT_PREFIXES,
            DEFAULT_ENGLISH_PREFIXES,
        )
        .expect("embedded rule tables parse")
    }

    pub fn parse(
        verb_suffixes: &str,
        noun_affixes: &str,
        prefixes: &str,
        english_prefixes: &str,
    ) -> Result<RuleSet, GaelError> {
        let mut rules = RuleSet {
            verb_suffixes: parse_verb_suffixes(verb_suffixes)?,
            noun_affixes: parse_noun_affixes(noun_affixes)?,
            prefixes: parse_prefixes(prefixes)?,
            english_prefixes: parse_english_prefixes(english_prefixes)?,
        };
        // Longest-first so longest-match wins when scanning word endings.
        rules
            .verb_suffixes
            .sort_by(|a, b| b.form.len().cmp(&a.form.len()).then(a.form.cmp(&b.form)));
        rules
            .noun_affixes
            .sort_by(|a, b| b.form.len().cmp(&a.form.len()).then(a.form.cmp(&b.form)));
        rules
            .prefixes
            .sort_by(|a, b| b.form.len().cmp(&a.form.len()).then(a.form.cmp(&b.form)));
        Ok(rules)
    }

    pub fn affixes_of(&self, kind: AffixKind) -> impl Iterator<Item = &NounAffix> {
        self.noun_affixes.iter().filter(move |a| a.kind == kind)
    }

    /// Strong-plural plus weak `-a` plural suffixes.
    pub fn plural_affixes(&self) -> impl Iterator<Item = &NounAffix> {
        self.noun_affixes
            .iter()
            .filter(|a| matches!(a.kind, AffixKind::StrongPlural | AffixKind::WeakPlural))
    }

    /// Longest inventory prefix the word starts with, if any.
    pub fn match_prefix(&self, word: &str) -> Option<&PrefixEntry> {
        self.prefixes.iter().find(|p| word.starts_with(&p.form))
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_class(s: &str, line: usize) -> Result<VowelClass, GaelError> {
    match s {
        "broad" => Ok(VowelClass::Broad),
        "slender" => Ok(VowelClass::Slender),
        other => Err(GaelError::Format(format!(
            "line {line}: expected broad|slender, got {other:?}"
        ))),
    }
}

fn parse_verb_suffixes(text: &str) -> Result<Vec<VerbSuffix>, GaelError> {
    let mut out = Vec::new();
    for (line, l) in data_lines(text) {
        let fields: Vec<&str> = l.split('\t').collect();
        let [conj, slot, class, form] = fields.as_slice() else {
            return Err(GaelError::Format(format!(
                "line {line}: verb suffix rows need 4 tab-separated fields"
            )));
        };
        let conjugation = match *conj {
            "first" => Conjugation::First,
            "second" => Conjugation::Second,
            other => {
                return Err(GaelError::Format(format!(
                    "line {line}: unknown conjugation {other:?}"
                )))
            }
        };
        let slot = match *slot {
            "pres-1sg" => VerbSlot::Pres1Sg,
            "pres-analytic" => VerbSlot::PresAnalytic,
            "pres-1pl" => VerbSlot::Pres1Pl,
            "pres-aut" => VerbSlot::PresAut,
            "past-1pl" => VerbSlot::Past1Pl,
            "past-aut" => VerbSlot::PastAut,
            other => {
                return Err(GaelError::Format(format!(
                    "line {line}: unknown verb slot {other:?}"
                )))
            }
        };
        out.push(VerbSuffix {
            conjugation,
            slot,
            class: parse_class(class, line)?,
            form: (*form).to_string(),
        });
    }
    if out.is_empty() {
        return Err(GaelError::Config("verb suffix table is empty".into()));
    }
    Ok(out)
}

fn parse_noun_affixes(text: &str) -> Result<Vec<NounAffix>, GaelError> {
    let mut out = Vec::new();
    for (line, l) in data_lines(text) {
        let fields: Vec<&str> = l.split('\t').collect();
        let [kind, form, class, flags] = fields.as_slice() else {
            return Err(GaelError::Format(format!(
                "line {line}: noun affix rows need 4 tab-separated fields"
            )));
        };
        let kind = match *kind {
            "strong-plural" => AffixKind::StrongPlural,
            "weak-plural" => AffixKind::WeakPlural,
            "genitive" => AffixKind::Genitive,
            "deriv" => AffixKind::Deriv,
            other => {
                return Err(GaelError::Format(format!(
                    "line {line}: unknown affix kind {other:?}"
                )))
            }
        };
        let mut base = BasePos::Any;
        let mut loan_ok = false;
        if *flags != "-" {
            for flag in flags.split(',') {
                match flag.trim() {
                    "loan-ok" => loan_ok = true,
                    "base=noun" => base = BasePos::Noun,
                    "base=verb" => base = BasePos::Verb,
                    "base=adjective" => base = BasePos::Adjective,
                    "base=any" => base = BasePos::Any,
                    other => {
                        return Err(GaelError::Format(format!(
                            "line {line}: unknown flag {other:?}"
                        )))
                    }
                }
            }
        }
        out.push(NounAffix {
            kind,
            form: (*form).to_string(),
            class: parse_class(class, line)?,
            base,
            loan_ok,
        });
    }
    if out.is_empty() {
        return Err(GaelError::Config("noun affix table is empty".into()));
    }
    Ok(out)
}

fn parse_prefixes(text: &str) -> Result<Vec<PrefixEntry>, GaelError> {
    let mut out = Vec::new();
    for (line, l) in data_lines(text) {
        let fields: Vec<&str> = l.split('\t').collect();
        let [form, native] = fields.as_slice() else {
            return Err(GaelError::Format(format!(
                "line {line}: prefix rows need 2 tab-separated fields"
            )));
        };
        let native = match *native {
            "native" => true,
            "loan" => false,
            other => {
                return Err(GaelError::Format(format!(
                    "line {line}: expected native|loan, got {other:?}"
                )))
            }
        };
        out.push(PrefixEntry {
            form: (*form).to_string(),
            native,
        });
    }
    Ok(out)
}

fn parse_english_prefixes(text: &str) -> Result<Vec<(String, Vec<String>)>, GaelError> {
    let mut out = Vec::new();
    for (line, l) in data_lines(text) {
        let fields: Vec<&str> = l.split('\t').collect();
        let [eng, irish] = fields.as_slice() else {
            return Err(GaelError::Format(format!(
                "line {line}: english prefix rows need 2 tab-separated fields"
            )));
        };
        let renderings: Vec<String> = irish.split('|').map(str::to_string).collect();
        if renderings.is_empty() {
            return Err(GaelError::Format(format!(
                "line {line}: no Irish renderings listed"
            )));
        }
        out.push(((*eng).to_string(), renderings));
    }
    Ok(out)
}
