//! Shared test fixtures: the bundled lexicons and the curated gold list
//! of attested invented words with their expected categories and
//! verdicts.
//!
//! Compiled into several test targets; not every target uses every item.
#![allow(dead_code)]

use gaelcheck::classifier::{Category, NounPattern, VerbPattern};
use gaelcheck::config::Config;
use gaelcheck::lexicon::Lexicon;
use gaelcheck::rules::RuleSet;

pub fn setup() -> (Lexicon, Lexicon, RuleSet, Config) {
    (
        Lexicon::seed_irish(),
        Lexicon::seed_english(),
        RuleSet::builtin(),
        Config::default(),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    Gpt4,
    Mini,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct Gold {
    pub surface: &'static str,
    pub model: Model,
    pub source: &'static str,
    /// Expected category for table-listed items; None when only the
    /// verdict is attested.
    pub category: Option<Category>,
    pub conformant: bool,
}

fn g(
    surface: &'static str,
    model: Model,
    source: &'static str,
    category: Option<Category>,
    conformant: bool,
) -> Gold {
    Gold {
        surface,
        model,
        source,
        category,
        conformant,
    }
}

/// The ten attested invented verbs.
pub fn gold_verbs() -> Vec<Gold> {
    use Category::Verb;
    use VerbPattern::*;
    vec![
        g(
            "shraitheamar",
            Model::Gpt4,
            "When we first sequenced this genome",
            Some(Verb(NounConjugation)),
            true,
        ),
        g(
            "Códálann",
            Model::Gpt4,
            "Triplets of those letters code for roughly twenty amino acids",
            Some(Verb(NounConjugation)),
            true,
        ),
        g(
            "shraitheadh",
            Model::Gpt4,
            "so that we could sequence them",
            Some(Verb(NounConjugation)),
            true,
        ),
        g(
            "Tendeann",
            Model::Gpt4,
            "Each device incorporating an Arm processor tends to be",
            Some(Verb(EnglishConjugated)),
            true,
        ),
        g(
            "athsraitheadh",
            Model::Gpt4,
            "the resequencing of the genome",
            None,
            false,
        ),
        g("chog", Model::Gpt4, "he chewed the code", None, false),
        g(
            "simulaíonn",
            Model::Mini,
            "it does not simulate the execution of code",
            Some(Verb(EnglishConjugated)),
            true,
        ),
        g(
            "Códann",
            Model::Mini,
            "Triplets of those letters code for roughly twenty",
            Some(Verb(NounConjugation)),
            true,
        ),
        g(
            "dearthach",
            Model::Mini,
            "they are designing the system",
            None,
            false,
        ),
        g("Aknowimid", Model::Mini, "you know that much", None, false),
    ]
}

/// Table-listed invented nouns (all conformant, category attested by the
/// table each appears in).
pub fn gold_table_nouns() -> Vec<Gold> {
    use Category::Noun;
    use NounPattern::*;
    vec![
        // Compounds.
        g(
            "bhinncheisteanna",
            Model::Gpt4,
            "results of independent performance benchmarks",
            Some(Noun(Compound)),
            true,
        ),
        g(
            "gaothmhoill",
            Model::Mini,
            "Or, in this case, windmill.",
            Some(Noun(Compound)),
            true,
        ),
        g(
            "gaothchumhachta",
            Model::Mini,
            "Evolution of the turbine",
            Some(Noun(Compound)),
            true,
        ),
        g(
            "gaothmhoillí",
            Model::Mini,
            "modern wind turbines are huge",
            Some(Noun(Compound)),
            true,
        ),
        g(
            "gaothchumhachtaí",
            Model::Mini,
            "Wind turbines are reaching ever higher.",
            Some(Noun(Compound)),
            true,
        ),
        g(
            "gcomhairlín",
            Model::Mini,
            "results of independent performance benchmarks",
            Some(Noun(Compound)),
            true,
        ),
        // Lazy gaelicisation.
        g(
            "nascáil",
            Model::Gpt4,
            "on all of the elements in the nacelle",
            Some(Noun(LazyGaelicisation)),
            true,
        ),
        g(
            "tripléid",
            Model::Gpt4,
            "Triplets of those letters code for roughly twenty",
            Some(Noun(LazyGaelicisation)),
            true,
        ),
        g(
            "géanómóireacht",
            Model::Gpt4,
            "what we are calling combinatorial genomics",
            Some(Noun(LazyGaelicisation)),
            true,
        ),
        g(
            "blaide",
            Model::Mini,
            "It will handle turbine blades",
            Some(Noun(LazyGaelicisation)),
            true,
        ),
        g(
            "gcásáidí",
            Model::Mini,
            "so we thought we would build them in cassettes",
            Some(Noun(LazyGaelicisation)),
            true,
        ),
        g(
            "alcaimíocht",
            Model::Mini,
            "this may sound like genomic alchemy",
            Some(Noun(LazyGaelicisation)),
            true,
        ),
        g(
            "ghinéise",
            Model::Mini,
            "Now I made an argument, this is not genesis",
            Some(Noun(LazyGaelicisation)),
            true,
        ),
        // Good confabulations.
        g(
            "micirialtóir",
            Model::Gpt4,
            "the heart of a device controller, a microcontroller",
            Some(Noun(GoodConfabulation)),
            true,
        ),
        g(
            "fótamhicreagraf",
            Model::Gpt4,
            "this is just a regular photomicrograph",
            Some(Noun(GoodConfabulation)),
            true,
        ),
        g(
            "Seanríochtaí",
            Model::Gpt4,
            "with synthetic bacteria, Archaea",
            Some(Noun(GoodConfabulation)),
            true,
        ),
        // Code-switching.
        g(
            "Fanaithe",
            Model::Mini,
            "Giant fans of wind energy",
            Some(Noun(CodeSwitching)),
            true,
        ),
        g(
            "simulachtóir",
            Model::Mini,
            "in what sources outside call an emulator",
            Some(Noun(CodeSwitching)),
            true,
        ),
        g(
            "inventiú",
            Model::Mini,
            "invention, science, technology",
            Some(Noun(CodeSwitching)),
            true,
        ),
        // Prefix.
        g(
            "gcomhshamlacha",
            Model::Mini,
            "mainly in the area of composites",
            Some(Noun(Prefix)),
            true,
        ),
        g(
            "tríphéirí",
            Model::Mini,
            "Triplets of those letters code for roughly twenty amino acids",
            Some(Noun(Prefix)),
            true,
        ),
        g(
            "bithleacht",
            Model::Mini,
            "we think that biology can have a major impact",
            Some(Noun(Prefix)),
            true,
        ),
        // Suffix.
        g(
            "turasáin",
            Model::Gpt4,
            "there is a problem when it comes to simulating wind turbines",
            Some(Noun(Suffix)),
            true,
        ),
        g(
            "cuimhneachtaí",
            Model::Gpt4,
            "forces and moments on the shaft in three directions",
            Some(Noun(Suffix)),
            true,
        ),
        g(
            "radaim",
            Model::Gpt4,
            "that can take three million rads of radiation",
            Some(Noun(Suffix)),
            true,
        ),
        g(
            "eocaróitigh",
            Model::Gpt4,
            "bacteria and, eventually, eukaryotes",
            Some(Noun(Suffix)),
            true,
        ),
        g(
            "ghéineomaí",
            Model::Mini,
            "starting with the digital information of the genome",
            Some(Noun(Suffix)),
            true,
        ),
        g(
            "radán",
            Model::Mini,
            "that can take three million rads of radiation",
            Some(Noun(Suffix)),
            true,
        ),
        g(
            "feidhmeannaíochta",
            Model::Mini,
            "we can select for viability",
            Some(Noun(Suffix)),
            true,
        ),
    ]
}

/// Prose-attested counterexamples (and the one deceiving conformant
/// case); their verdicts are attested, categories are not.
pub fn gold_prose_nouns() -> Vec<Gold> {
    vec![
        g(
            "gaoithchumachta",
            Model::Mini,
            "the evolution of wind power",
            None,
            false,
        ),
        g(
            "protáitíopaíocht",
            Model::Mini,
            "rapid prototyping",
            None,
            false,
        ),
        g(
            "protáitíopaí",
            Model::Mini,
            "the new prototypes",
            None,
            false,
        ),
        g(
            "evólúisian",
            Model::Mini,
            "the evolution of the species",
            None,
            false,
        ),
        g(
            "autagrafaí",
            Model::Mini,
            "the autograph of the author",
            None,
            false,
        ),
        g(
            "Simuláid",
            Model::Unknown,
            "a simulation of the system",
            None,
            false,
        ),
        g(
            "evoláid",
            Model::Unknown,
            "Evolution of the turbine",
            Some(Category::Noun(NounPattern::CodeSwitching)),
            false,
        ),
        g("dippaí", Model::Gpt4, "it generated voltage dips", None, false),
        g(
            "titimeanna",
            Model::Mini,
            "voltage dips",
            None,
            false,
        ),
        g(
            "dhearadhóir",
            Model::Mini,
            "the famous designer",
            None,
            false,
        ),
        g(
            "micoplásma",
            Model::Unknown,
            "the mycoplasma in the laboratory",
            None,
            false,
        ),
        g(
            "cilivata",
            Model::Unknown,
            "kilowatts of power",
            None,
            false,
        ),
        g(
            "megavata",
            Model::Unknown,
            "megawatts of power",
            None,
            false,
        ),
        g(
            "sub-aonadanna",
            Model::Unknown,
            "the sub-units of the system",
            None,
            false,
        ),
        g(
            "laigeas",
            Model::Mini,
            "able to withstand bending moments",
            None,
            true,
        ),
    ]
}

pub fn source_words(sentence: &str) -> Vec<String> {
    sentence.split_whitespace().map(str::to_string).collect()
}
