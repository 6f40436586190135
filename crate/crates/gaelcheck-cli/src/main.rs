//! Command-line front end: corpus analysis, single-word checks and
//! classification, labeled generation, and report reformatting.
//!
//! Data goes to stdout, diagnostics to stderr. Exit codes: 0 success,
//! 1 usage or input-format error, 2 internal error.

use std::fs::File;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use gaelcheck::classifier::{classify_token, Category};
use gaelcheck::config::Config;
use gaelcheck::generator::{generate, GenSpec};
use gaelcheck::lexicon::{load_lexicon, Lexicon, LookupResult};
use gaelcheck::nounmorph;
use gaelcheck::pipeline::{
    analyze_document, emit_report, hallucination_rate, CountRow, DocumentPair, Report,
    ReportFormat,
};
use gaelcheck::rules::RuleSet;
use gaelcheck::verbmorph;
use gaelcheck::GaelError;

/// Rule-based detection of invented words in English→Irish MT output.
#[derive(Parser)]
#[command(name = "gaelcheck", version, about, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LexiconArgs {
    /// Irish wordlist (TSV); defaults to the bundled seed or
    /// $GAELCHECK_GA_LEXICON.
    #[arg(long = "lex")]
    irish_lexicon: Option<PathBuf>,
    /// English wordlist (TSV); defaults to the bundled seed or
    /// $GAELCHECK_EN_LEXICON.
    #[arg(long = "eng")]
    english_lexicon: Option<PathBuf>,
    /// Analysis settings (key = value lines).
    #[arg(long = "config")]
    config: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a parallel corpus and report its invented words.
    Analyze {
        #[command(flatten)]
        lexicons: LexiconArgs,
        /// Source (English) text, one sentence per line.
        #[arg(long)]
        src: Option<PathBuf>,
        /// Target (Irish) text, line-aligned with --src.
        #[arg(long)]
        tgt: Option<PathBuf>,
        /// JSONL corpus ({"id":…, "src":…, "tgt":…}) instead of
        /// --src/--tgt.
        #[arg(long, conflicts_with_all = ["src", "tgt"])]
        jsonl: Option<PathBuf>,
        /// Tag naming the MT system that produced the target.
        #[arg(long, default_value = "unknown")]
        model: String,
        /// Output format: jsonl, csv or text.
        #[arg(long, default_value = "jsonl")]
        format: String,
        /// Use this token total for the per-1,000 rate instead of the
        /// tokenizer's count.
        #[arg(long)]
        token_count_override: Option<u64>,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look one word up and print its analyses and verdict.
    Check {
        #[command(flatten)]
        lexicons: LexiconArgs,
        word: String,
        /// Source word to score phonetic similarity against.
        #[arg(long)]
        src_word: Option<String>,
    },
    /// Classify one word against its source sentence; prints the record
    /// as JSON.
    Classify {
        #[command(flatten)]
        lexicons: LexiconArgs,
        word: String,
        /// The aligned source sentence.
        #[arg(long, default_value = "")]
        src: String,
    },
    /// Generate labeled pseudo-Irish words for a taxonomy pattern.
    Generate {
        #[command(flatten)]
        lexicons: LexiconArgs,
        /// Pattern slug, e.g. compound or code-switching.
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit deliberately rule-breaking words instead of conformant
        /// ones.
        #[arg(long)]
        broken: bool,
    },
    /// Re-emit a saved JSONL report in another format.
    Report {
        /// JSONL report produced by `analyze`.
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "text")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            // Help and version requests are not errors.
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            let _ = e.print();
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("gaelcheck: {e:#}");
            let usage = e
                .downcast_ref::<GaelError>()
                .map(|g| {
                    matches!(
                        g,
                        GaelError::Usage(_)
                            | GaelError::Format(_)
                            | GaelError::Config(_)
                            | GaelError::Alignment { .. }
                            | GaelError::NotOov(_)
                    )
                })
                .unwrap_or(false);
            ExitCode::from(if usage { 1 } else { 2 })
        }
    }
}

fn load_lexicon_from(
    flag: &Option<PathBuf>,
    env_var: &str,
    fallback: fn() -> Lexicon,
) -> anyhow::Result<Lexicon> {
    let path = flag
        .clone()
        .or_else(|| std::env::var_os(env_var).map(PathBuf::from));
    match path {
        Some(p) => {
            let file = File::open(&p).with_context(|| format!("open {}", p.display()))?;
            let lex = load_lexicon(file).with_context(|| format!("load {}", p.display()))?;
            for w in lex.warnings() {
                eprintln!("gaelcheck: {}: {w}", p.display());
            }
            Ok(lex)
        }
        None => Ok(fallback()),
    }
}

fn load_setup(args: &LexiconArgs) -> anyhow::Result<(Lexicon, Lexicon, RuleSet, Config)> {
    let ga = load_lexicon_from(&args.irish_lexicon, "GAELCHECK_GA_LEXICON", Lexicon::seed_irish)?;
    let eng = load_lexicon_from(
        &args.english_lexicon,
        "GAELCHECK_EN_LEXICON",
        Lexicon::seed_english,
    )?;
    let cfg = match &args.config {
        Some(p) => {
            let file = File::open(p).with_context(|| format!("open {}", p.display()))?;
            Config::load(file).with_context(|| format!("load {}", p.display()))?
        }
        None => Config::default(),
    };
    Ok((ga, eng, RuleSet::builtin(), cfg))
}

fn read_text(path: &Path) -> anyhow::Result<String> {
    let mut s = String::new();
    File::open(path)
        .with_context(|| format!("open {}", path.display()))?
        .read_to_string(&mut s)
        .with_context(|| format!("read {}", path.display()))?;
    Ok(s)
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Analyze {
            lexicons,
            src,
            tgt,
            jsonl,
            model,
            format,
            token_count_override,
            out,
        } => {
            let (ga, eng, rules, mut cfg) = load_setup(&lexicons)?;
            if token_count_override.is_some() {
                cfg.token_count_override = token_count_override;
            }
            let format = ReportFormat::parse(&format)?;
            let pair = match (src, tgt, jsonl) {
                (Some(s), Some(t), None) => DocumentPair::from_aligned_texts(
                    &s.display().to_string(),
                    &model,
                    &read_text(&s)?,
                    &read_text(&t)?,
                )?,
                (None, None, Some(j)) => DocumentPair::from_jsonl(&model, &read_text(&j)?)?,
                _ => {
                    return Err(GaelError::Usage(
                        "supply --src and --tgt together, or --jsonl".into(),
                    )
                    .into())
                }
            };
            let report = analyze_document(&pair, &ga, &eng, &rules, &cfg)?;
            let bytes = emit_report(&report, format)?;
            match out {
                Some(p) => {
                    File::create(&p)
                        .with_context(|| format!("create {}", p.display()))?
                        .write_all(&bytes)?;
                }
                None => io::stdout().write_all(&bytes)?,
            }
            eprintln!(
                "{} hallucinations, {}/1000 over {} tokens",
                report.records.len(),
                report.rate_per_1000,
                report.token_count
            );
            Ok(())
        }

        Command::Check {
            lexicons,
            word,
            src_word,
        } => {
            if word.trim().is_empty() {
                return Err(GaelError::Usage("empty word".into()).into());
            }
            let (ga, eng, rules, cfg) = load_setup(&lexicons)?;
            cmd_check(&word, src_word.as_deref(), &ga, &eng, &rules, &cfg)
        }

        Command::Classify {
            lexicons,
            word,
            src,
        } => {
            if word.trim().is_empty() {
                return Err(GaelError::Usage("empty word".into()).into());
            }
            let (ga, eng, rules, cfg) = load_setup(&lexicons)?;
            if !ga.lookup(&word).is_absent() {
                return Err(GaelError::NotOov(word).into());
            }
            let source: Vec<String> = src.split_whitespace().map(str::to_string).collect();
            let record = classify_token(&word, 0, &source, &ga, &eng, &rules, &cfg)?;
            println!("{}", serde_json::to_string(&record)?);
            Ok(())
        }

        Command::Generate {
            lexicons,
            pattern,
            count,
            seed,
            broken,
        } => {
            let (ga, eng, rules, cfg) = load_setup(&lexicons)?;
            let pattern = Category::from_slug(&pattern).ok_or_else(|| {
                GaelError::Usage(format!(
                    "unknown pattern {pattern:?}; valid patterns: {}",
                    Category::generatable_slugs().join(", ")
                ))
            })?;
            let spec = GenSpec {
                pattern,
                count,
                rng_seed: seed,
                well_formed: !broken,
            };
            let words = generate(&spec, &ga, &eng, &rules, &cfg)?;
            let stdout = io::stdout();
            let mut h = stdout.lock();
            for w in words {
                serde_json::to_writer(&mut h, &w)?;
                writeln!(h)?;
            }
            Ok(())
        }

        Command::Report { input, format } => {
            let format = ReportFormat::parse(&format)?;
            let report = reload_report(&read_text(&input)?)?;
            io::stdout().write_all(&emit_report(&report, format)?)?;
            Ok(())
        }
    }
}

fn cmd_check(
    word: &str,
    src_word: Option<&str>,
    ga: &Lexicon,
    eng: &Lexicon,
    rules: &RuleSet,
    cfg: &Config,
) -> anyhow::Result<()> {
    match ga.lookup(word) {
        LookupResult::Exact(entry) => {
            println!(
                "{word}: in lexicon ({}, {})",
                entry.pos,
                nativity(entry.native)
            );
            return Ok(());
        }
        LookupResult::ViaMutation { kind, root, entry } => {
            println!(
                "{word}: in lexicon via {kind} of {root} ({}, {})",
                entry.pos,
                nativity(entry.native)
            );
            return Ok(());
        }
        LookupResult::Absent => println!("{word}: out of vocabulary"),
    }

    for (kind, reading) in gaelcheck::orthography::detect_and_strip_mutation(word) {
        for split in nounmorph::split_compound(&reading, ga, rules) {
            println!(
                "  compound: {} + {}{}",
                split.first.form,
                split.second_surface,
                if split.second_lenited { " (lenited)" } else { "" }
            );
        }
        for p in nounmorph::check_prefix(&reading, ga, rules) {
            println!(
                "  prefix: {}- + {} (lenition {})",
                p.prefix,
                p.remainder,
                match (p.lenition_expected, p.lenition_present) {
                    (true, true) => "present",
                    (true, false) => "missing",
                    (false, _) => "not owed",
                }
            );
        }
        for chain in nounmorph::top_chains(&reading, ga, rules) {
            if let Some(root) = chain.resolved_root() {
                println!("  suffixed: {} under {:?}", root, chain.steps);
            }
        }
        if kind == gaelcheck::orthography::MutationKind::None {
            for a in verbmorph::parse_verb(word, rules) {
                println!("  verb: {} + -{} ({})", a.root, a.suffix, a.slot);
            }
        }
    }

    let src_words: Vec<String> = src_word.iter().map(|s| s.to_string()).collect();
    let record = classify_token(word, 0, &src_words, ga, eng, rules, cfg)?;
    println!("  category: {}", record.category);
    if let (Some(sw), Some((linked, score))) = (src_word, &record.source_link) {
        if sw == linked {
            println!("  similarity to {sw}: {score:.2}");
        }
    }
    if record.verdict.conformant {
        println!("  verdict: conformant");
    } else {
        println!("  verdict: violating");
        for v in &record.verdict.violations {
            println!("    {}: {}", v.rule, v.detail);
        }
    }
    Ok(())
}

fn nativity(native: bool) -> &'static str {
    if native {
        "native"
    } else {
        "loan"
    }
}

/// Rebuild a Report from a saved JSONL stream (records plus trailing
/// summary object).
fn reload_report(text: &str) -> anyhow::Result<Report> {
    let mut records: Vec<gaelcheck::HallucinationRecord> = Vec::new();
    let mut summary: Option<serde_json::Value> = None;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let value: serde_json::Value = serde_json::from_str(line)
            .map_err(|e| GaelError::Format(format!("line {}: {e}", lineno + 1)))?;
        if value.get("summary").is_some() {
            summary = Some(value["summary"].clone());
        } else {
            let record = serde_json::from_value(value)
                .map_err(|e| GaelError::Format(format!("line {}: {e}", lineno + 1)))?;
            records.push(record);
        }
    }
    let summary = summary.ok_or_else(|| GaelError::Format("no summary line".into()))?;
    let token_count = summary["token_count"]
        .as_u64()
        .ok_or_else(|| anyhow!("summary lacks token_count"))?;
    let mut counts: Vec<CountRow> = Vec::new();
    for rec in &records {
        match counts
            .iter_mut()
            .find(|c| c.pos == rec.pos && c.conformant == rec.verdict.conformant)
        {
            Some(row) => row.count += 1,
            None => counts.push(CountRow {
                pos: rec.pos,
                conformant: rec.verdict.conformant,
                count: 1,
            }),
        }
    }
    counts.sort_by_key(|c| (c.pos, c.conformant));
    Ok(Report {
        doc_id: summary["doc_id"].as_str().unwrap_or("reloaded").to_string(),
        model_tag: summary["model"].as_str().unwrap_or("unknown").to_string(),
        token_count,
        rate_per_1000: hallucination_rate(records.len() as u64, token_count)?,
        records,
        counts,
    })
}
