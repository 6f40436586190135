//! Corpus pipeline: tokenization, per-document OOV detection and
//! classification, rate aggregation, and report emission.

use std::collections::BTreeMap;
use std::io::Write;

use crate::classifier::{self, HallucinationRecord};
use crate::config::Config;
use crate::error::GaelError;
use crate::lexicon::{Lexicon, Pos};
use crate::orthography::{self, MutationKind};
use crate::rules::RuleSet;

/// One surface token with its char offset in the sentence.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Token {
    pub text: String,
    pub char_start: usize,
}

impl Token {
    /// Word tokens are analyzed; numbers and stray symbols are counted
    /// but skipped.
    pub fn is_word(&self) -> bool {
        self.text.chars().any(|c| c.is_alphabetic())
            && !self.text.chars().any(|c| c.is_ascii_digit())
    }
}

/// A token joined with its mutation readings, ready for classification.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct AnalyzedToken {
    pub surface: String,
    pub sentence_id: usize,
    pub char_start: usize,
    pub readings: Vec<(MutationKind, String)>,
}

/// Split text into word tokens. Apostrophes and hyphens are kept when
/// internal (b'fhéidir, sub-aonadanna, n-éan); everything else
/// non-alphanumeric separates tokens.
pub fn tokenize(text: &str) -> Vec<Token> {
    let normalized = orthography::nfc(text);
    let keep_inner = |c: char| c == '\'' || c == '-' || c == '\u{2019}';
    let is_core = |c: char| c.is_alphanumeric();

    let chars: Vec<char> = normalized.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        if !is_core(chars[i]) {
            i += 1;
            continue;
        }
        let start = i;
        let mut end = i;
        while end < chars.len() && (is_core(chars[end]) || keep_inner(chars[end])) {
            end += 1;
        }
        // Trim joiners from the edges so tokens never start or end with
        // an apostrophe or hyphen.
        let mut last = end;
        while last > start && keep_inner(chars[last - 1]) {
            last -= 1;
        }
        let text: String = chars[start..last]
            .iter()
            .map(|&c| if c == '\u{2019}' { '\'' } else { c })
            .collect();
        if !text.is_empty() {
            tokens.push(Token {
                text,
                char_start: start,
            });
        }
        i = end.max(i + 1);
    }
    tokens
}

/// A line-aligned source/target document produced by one MT system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocumentPair {
    pub doc_id: String,
    pub model_tag: String,
    /// (source english text, target irish text), line-aligned.
    pub sentences: Vec<(String, String)>,
}

impl DocumentPair {
    /// Build from two parallel texts, one sentence per line. Differing
    /// line counts are an alignment error at the first missing index.
    pub fn from_aligned_texts(
        doc_id: &str,
        model_tag: &str,
        source: &str,
        target: &str,
    ) -> Result<DocumentPair, GaelError> {
        let src: Vec<&str> = source.lines().collect();
        let tgt: Vec<&str> = target.lines().collect();
        if src.len() != tgt.len() {
            return Err(GaelError::Alignment {
                index: src.len().min(tgt.len()),
                detail: format!("{} source lines vs {} target lines", src.len(), tgt.len()),
            });
        }
        Ok(DocumentPair {
            doc_id: doc_id.to_string(),
            model_tag: model_tag.to_string(),
            sentences: src
                .into_iter()
                .zip(tgt)
                .map(|(s, t)| (s.to_string(), t.to_string()))
                .collect(),
        })
    }

    /// Parse JSONL lines of the form `{"id":…, "src":…, "tgt":…}`.
    /// An optional `model` field overrides `model_tag`.
    pub fn from_jsonl(default_tag: &str, text: &str) -> Result<DocumentPair, GaelError> {
        let mut sentences = Vec::new();
        let mut model_tag = default_tag.to_string();
        let mut doc_id = String::from("jsonl");
        for (lineno, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let v: serde_json::Value = serde_json::from_str(line).map_err(|e| {
                GaelError::Format(format!("jsonl line {}: {e}", lineno + 1))
            })?;
            let src = v
                .get("src")
                .and_then(|s| s.as_str())
                .ok_or_else(|| GaelError::Format(format!("jsonl line {}: no src", lineno + 1)))?;
            let tgt = v
                .get("tgt")
                .and_then(|s| s.as_str())
                .ok_or_else(|| GaelError::Format(format!("jsonl line {}: no tgt", lineno + 1)))?;
            if let Some(id) = v.get("id").and_then(|s| s.as_str()) {
                doc_id = id.to_string();
            }
            if let Some(m) = v.get("model").and_then(|s| s.as_str()) {
                model_tag = m.to_string();
            }
            sentences.push((src.to_string(), tgt.to_string()));
        }
        Ok(DocumentPair {
            doc_id,
            model_tag,
            sentences,
        })
    }
}

/// Hallucination rate per 1,000 tokens, truncated (not rounded) to two
/// decimals and computed in integer arithmetic so results reproduce
/// exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rate {
    hundredths: u64,
}

impl Rate {
    pub fn hundredths(&self) -> u64 {
        self.hundredths
    }

    pub fn as_f64(&self) -> f64 {
        self.hundredths as f64 / 100.0
    }
}

impl std::fmt::Display for Rate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}.{:02}", self.hundredths / 100, self.hundredths % 100)
    }
}

impl serde::Serialize for Rate {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_f64(self.as_f64())
    }
}

/// `truncate(1000·count/tokens, 2dp)` with exact integer arithmetic.
pub fn hallucination_rate(count: u64, tokens: u64) -> Result<Rate, GaelError> {
    if tokens == 0 {
        return Err(GaelError::ZeroTokens);
    }
    Ok(Rate {
        hundredths: count * 100_000 / tokens,
    })
}

/// Per-document analysis result.
#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct Report {
    pub doc_id: String,
    pub model_tag: String,
    pub token_count: u64,
    pub records: Vec<HallucinationRecord>,
    /// Counts keyed by (POS, conformant).
    pub counts: Vec<CountRow>,
    pub rate_per_1000: Rate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct CountRow {
    pub pos: Pos,
    pub conformant: bool,
    pub count: u64,
}

impl Report {
    pub fn count(&self, pos: Pos, conformant: bool) -> u64 {
        self.counts
            .iter()
            .find(|r| r.pos == pos && r.conformant == conformant)
            .map(|r| r.count)
            .unwrap_or(0)
    }
}

/// Run OOV detection and classification over every target token of a
/// document, aggregate counts, and compute the per-1,000-token rate.
pub fn analyze_document(
    pair: &DocumentPair,
    ga: &Lexicon,
    eng: &Lexicon,
    rules: &RuleSet,
    cfg: &Config,
) -> Result<Report, GaelError> {
    let mut records = Vec::new();
    let mut token_total: u64 = 0;

    for (sentence_id, (src, tgt)) in pair.sentences.iter().enumerate() {
        let src_words: Vec<String> = src.split_whitespace().map(str::to_string).collect();
        let tokens = tokenize(tgt);
        token_total += tokens.len() as u64;
        for token in tokens.iter().filter(|t| t.is_word()) {
            if ga.lookup(&token.text).is_absent() {
                let record = classifier::classify_token(
                    &token.text,
                    sentence_id,
                    &src_words,
                    ga,
                    eng,
                    rules,
                    cfg,
                )?;
                records.push(record);
            }
        }
    }

    let token_count = cfg.token_count_override.unwrap_or(token_total);
    let rate_per_1000 = hallucination_rate(records.len() as u64, token_count)?;

    let mut counts: BTreeMap<(Pos, bool), u64> = BTreeMap::new();
    for r in &records {
        *counts.entry((r.pos, r.verdict.conformant)).or_insert(0) += 1;
    }
    let counts = counts
        .into_iter()
        .map(|((pos, conformant), count)| CountRow {
            pos,
            conformant,
            count,
        })
        .collect();

    Ok(Report {
        doc_id: pair.doc_id.clone(),
        model_tag: pair.model_tag.clone(),
        token_count,
        records,
        counts,
        rate_per_1000,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Jsonl,
    Csv,
    Text,
}

impl ReportFormat {
    pub fn parse(s: &str) -> Result<ReportFormat, GaelError> {
        match s.to_ascii_lowercase().as_str() {
            "jsonl" => Ok(ReportFormat::Jsonl),
            "csv" => Ok(ReportFormat::Csv),
            "text" => Ok(ReportFormat::Text),
            other => Err(GaelError::Usage(format!(
                "unsupported format {other:?}: expected jsonl, csv or text"
            ))),
        }
    }
}

/// Serialize a report: JSONL (one record per line plus a trailing summary
/// object), CSV (flat records), or a human table of counts.
pub fn emit_report(report: &Report, format: ReportFormat) -> Result<Vec<u8>, GaelError> {
    match format {
        ReportFormat::Jsonl => emit_jsonl(report),
        ReportFormat::Csv => emit_csv(report),
        ReportFormat::Text => Ok(emit_text(report).into_bytes()),
    }
}

fn emit_jsonl(report: &Report) -> Result<Vec<u8>, GaelError> {
    let mut out = Vec::new();
    for r in &report.records {
        serde_json::to_writer(&mut out, r)
            .map_err(|e| GaelError::Format(format!("serialize record: {e}")))?;
        out.push(b'\n');
    }
    let summary = serde_json::json!({
        "summary": {
            "doc_id": report.doc_id,
            "model": report.model_tag,
            "token_count": report.token_count,
            "hallucinations": report.records.len(),
            "rate_per_1000": report.rate_per_1000,
            "counts": report.counts,
        }
    });
    serde_json::to_writer(&mut out, &summary)
        .map_err(|e| GaelError::Format(format!("serialize summary: {e}")))?;
    out.push(b'\n');
    Ok(out)
}

fn emit_csv(report: &Report) -> Result<Vec<u8>, GaelError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "surface",
        "sentence_id",
        "category",
        "conformant",
        "violations",
        "source_word",
        "similarity",
    ])
    .map_err(|e| GaelError::Format(e.to_string()))?;
    for r in &report.records {
        let violations = r
            .verdict
            .violations
            .iter()
            .map(|v| v.rule.to_string())
            .collect::<Vec<_>>()
            .join(";");
        let (src, sim) = match &r.source_link {
            Some((w, s)) => (w.clone(), format!("{s:.3}")),
            None => (String::new(), String::new()),
        };
        w.write_record([
            r.surface.as_str(),
            &r.sentence_id.to_string(),
            r.category.slug(),
            &r.verdict.conformant.to_string(),
            &violations,
            &src,
            &sim,
        ])
        .map_err(|e| GaelError::Format(e.to_string()))?;
    }
    w.into_inner()
        .map_err(|e| GaelError::Format(e.to_string()))
}

fn emit_text(report: &Report) -> String {
    let mut out = String::new();
    use std::fmt::Write as _;
    let _ = writeln!(
        out,
        "Model: {}    Tokens: {}    Hallucinations: {}    Rate/1000: {}",
        report.model_tag,
        report.token_count,
        report.records.len(),
        report.rate_per_1000
    );
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:<12} {:>6} {:>9} {:>6} {:>8}",
        "POS", "Rules", "No Rules", "Total", "% Rules"
    );
    for pos in [Pos::Verb, Pos::Noun, Pos::Unknown] {
        let rules_n = report.count(pos, true);
        let no_rules = report.count(pos, false);
        let total = rules_n + no_rules;
        if total == 0 {
            continue;
        }
        let pct = (rules_n as f64 / total as f64 * 100.0).round() as u64;
        let _ = writeln!(
            out,
            "{:<12} {:>6} {:>9} {:>6} {:>8}",
            pos.to_string(),
            rules_n,
            no_rules,
            total,
            pct
        );
    }
    out
}

/// Stream a report to a writer.
pub fn write_report<W: Write>(
    report: &Report,
    format: ReportFormat,
    mut w: W,
) -> Result<(), GaelError> {
    let bytes = emit_report(report, format)?;
    w.write_all(&bytes)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tokenize_keeps_internal_joiners() {
        let t: Vec<String> = tokenize("b'fhéidir go mbeidh")
            .into_iter()
            .map(|t| t.text)
            .collect();
        assert_eq!(t, vec!["b'fhéidir", "go", "mbeidh"]);

        let t: Vec<String> = tokenize("megavata agus sub-aonadanna.")
            .into_iter()
            .map(|t| t.text)
            .collect();
        assert_eq!(t, vec!["megavata", "agus", "sub-aonadanna"]);

        assert!(tokenize("").is_empty());
    }

    #[test]
    fn tokenize_strips_edge_punctuation() {
        let t: Vec<String> = tokenize("\u{201c}ceist\u{201d}, (gaoth) 'moill'")
            .into_iter()
            .map(|t| t.text)
            .collect();
        assert_eq!(t, vec!["ceist", "gaoth", "moill"]);
    }

    #[test]
    fn tokenize_join_fixpoint() {
        let text = "Nó, sa chás seo, gaothmhoill — b'fhéidir!";
        let once: Vec<String> = tokenize(text).into_iter().map(|t| t.text).collect();
        let joined = once.join(" ");
        let twice: Vec<String> = tokenize(&joined).into_iter().map(|t| t.text).collect();
        assert_eq!(once, twice);
    }

    #[test]
    fn rates_truncate_exactly() {
        assert_eq!(hallucination_rate(21, 24194).unwrap().to_string(), "0.86");
        assert_eq!(hallucination_rate(52, 24194).unwrap().to_string(), "2.14");
        assert_eq!(hallucination_rate(0, 1000).unwrap().to_string(), "0.00");
        assert!(matches!(
            hallucination_rate(1, 0),
            Err(GaelError::ZeroTokens)
        ));
    }

    #[test]
    fn misaligned_pair_is_an_error() {
        let err = DocumentPair::from_aligned_texts("d", "m", "a\nb\n", "x\n");
        assert!(matches!(err, Err(GaelError::Alignment { index: 1, .. })));
    }

    #[test]
    fn jsonl_input_parses() {
        let pair = DocumentPair::from_jsonl(
            "m",
            "{\"id\":\"doc\",\"src\":\"hello\",\"tgt\":\"dia duit\"}\n",
        )
        .unwrap();
        assert_eq!(pair.doc_id, "doc");
        assert_eq!(pair.sentences.len(), 1);
    }

    #[test]
    fn clean_document_yields_empty_report() {
        let ga = crate::lexicon::load_lexicon_str("gaoth\tNoun\nmór\tAdjective\n").unwrap();
        let eng = crate::lexicon::load_lexicon_str("wind\tNoun\n").unwrap();
        let rules = RuleSet::builtin();
        let cfg = Config::default();
        let pair =
            DocumentPair::from_aligned_texts("d", "m", "big wind\n", "gaoth mór\n").unwrap();
        let report = analyze_document(&pair, &ga, &eng, &rules, &cfg).unwrap();
        assert!(report.records.is_empty());
        assert_eq!(report.rate_per_1000.to_string(), "0.00");
        assert_eq!(report.token_count, 2);
    }

    #[test]
    fn jsonl_report_shape() {
        let ga = crate::lexicon::load_lexicon_str("gaoth\tNoun\nmoill\tNoun\n").unwrap();
        let eng = crate::lexicon::load_lexicon_str("windmill\tNoun\nthis\tOther\n").unwrap();
        let rules = RuleSet::builtin();
        let cfg = Config::default();
        let pair = DocumentPair::from_aligned_texts(
            "d",
            "m",
            "this windmill\n",
            "gaothmhoill anseo\n",
        );
        // anseo is OOV here too: two records, three jsonl lines.
        let report = analyze_document(&pair.unwrap(), &ga, &eng, &rules, &cfg).unwrap();
        assert_eq!(report.records.len(), 2);
        let bytes = emit_report(&report, ReportFormat::Jsonl).unwrap();
        let lines: Vec<&str> = std::str::from_utf8(&bytes).unwrap().trim().lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[2].contains("\"summary\""));
    }

    #[test]
    fn empty_report_is_summary_only() {
        let ga = crate::lexicon::load_lexicon_str("gaoth\tNoun\n").unwrap();
        let eng = crate::lexicon::load_lexicon_str("wind\tNoun\n").unwrap();
        let pair = DocumentPair::from_aligned_texts("d", "m", "wind\n", "gaoth\n").unwrap();
        let report =
            analyze_document(&pair, &ga, &eng, &RuleSet::builtin(), &Config::default()).unwrap();
        let bytes = emit_report(&report, ReportFormat::Jsonl).unwrap();
        let lines: Vec<&str> = std::str::from_utf8(&bytes).unwrap().trim().lines().collect();
        assert_eq!(lines.len(), 1);
        let summary: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert_eq!(summary["summary"]["hallucinations"], 0);
    }

    #[test]
    fn sentence_order_does_not_change_counts() {
        let ga = crate::lexicon::load_lexicon_str("gaoth\tNoun\nmoill\tNoun\nceist\tNoun\n")
            .unwrap();
        let eng = crate::lexicon::load_lexicon_str("windmill\tNoun\nquestion\tNoun\n").unwrap();
        let rules = RuleSet::builtin();
        let cfg = Config::default();
        let a = DocumentPair::from_aligned_texts(
            "d",
            "m",
            "windmill\nquestion\n",
            "gaothmhoill\nceisteanna gaothcheist\n",
        )
        .unwrap();
        let b = DocumentPair::from_aligned_texts(
            "d",
            "m",
            "question\nwindmill\n",
            "ceisteanna gaothcheist\ngaothmhoill\n",
        )
        .unwrap();
        let ra = analyze_document(&a, &ga, &eng, &rules, &cfg).unwrap();
        let rb = analyze_document(&b, &ga, &eng, &rules, &cfg).unwrap();
        assert_eq!(ra.records.len(), rb.records.len());
        assert_eq!(ra.counts, rb.counts);
        assert_eq!(ra.rate_per_1000, rb.rate_per_1000);
    }
}
