//! Acceptance suite. One test per criterion; each prints a PASS line so
//! a full run reads as a checklist.

mod common;

use std::time::Instant;

use common::{gold_prose_nouns, gold_table_nouns, gold_verbs, setup, source_words, Model};
use gaelcheck::classifier::{classify_token, Category};
use gaelcheck::generator::{generate, GenSpec};
use gaelcheck::lexicon::Pos;
use gaelcheck::orthography;
use gaelcheck::pipeline::{analyze_document, hallucination_rate, DocumentPair};

/// Criterion 1: rate reproduction, exact, in under a millisecond.
#[test]
fn criterion_1_rate_reproduction() {
    let start = Instant::now();
    let gpt4 = hallucination_rate(21, 24194).unwrap();
    let mini = hallucination_rate(52, 24194).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(gpt4.to_string(), "0.86");
    assert_eq!(mini.to_string(), "2.14");
    assert!(
        elapsed.as_micros() < 1000,
        "rate computation took {elapsed:?}"
    );
    println!("PASS criterion 1: 21/24194 → 0.86, 52/24194 → 2.14 ({elapsed:?})");
}

/// Criterion 2: the ten attested verbs receive the attested verdicts
/// (4 conformant / 2 violating for one system, 2/2 for the other).
#[test]
fn criterion_2_verb_gold_suite() {
    let (ga, eng, rules, cfg) = setup();
    let mut results = Vec::new();
    for item in gold_verbs() {
        let record = classify_token(
            item.surface,
            0,
            &source_words(item.source),
            &ga,
            &eng,
            &rules,
            &cfg,
        )
        .unwrap_or_else(|e| panic!("{}: {e}", item.surface));
        assert_eq!(
            record.verdict.conformant, item.conformant,
            "{}: expected conformant={}, violations {:?}",
            item.surface, item.conformant, record.verdict.violations
        );
        if let Some(expected) = item.category {
            assert_eq!(record.category, expected, "{}", item.surface);
        }
        results.push((item.model, record.verdict.conformant));
    }
    let count = |m: Model, c: bool| results.iter().filter(|(rm, rc)| *rm == m && *rc == c).count();
    assert_eq!((count(Model::Gpt4, true), count(Model::Gpt4, false)), (4, 2));
    assert_eq!((count(Model::Mini, true), count(Model::Mini, false)), (2, 2));
    println!("PASS criterion 2: 10/10 verb verdicts (4+2 / 2+2 split)");
}

/// Criterion 3: every table-listed noun lands in its table's category and
/// is judged conformant; the prose counterexamples get the attested
/// verdicts. Whole fixture in under a second.
#[test]
fn criterion_3_noun_gold_suite() {
    let (ga, eng, rules, cfg) = setup();
    let start = Instant::now();
    let mut checked = 0;
    for item in gold_table_nouns() {
        let record = classify_token(
            item.surface,
            0,
            &source_words(item.source),
            &ga,
            &eng,
            &rules,
            &cfg,
        )
        .unwrap_or_else(|e| panic!("{}: {e}", item.surface));
        assert!(
            record.verdict.conformant,
            "{}: unexpectedly violating: {:?}",
            item.surface, record.verdict.violations
        );
        assert_eq!(
            record.category,
            item.category.unwrap(),
            "{}: wrong category (evidence {:?})",
            item.surface,
            record.evidence
        );
        checked += 1;
    }
    for item in gold_prose_nouns() {
        let record = classify_token(
            item.surface,
            0,
            &source_words(item.source),
            &ga,
            &eng,
            &rules,
            &cfg,
        )
        .unwrap_or_else(|e| panic!("{}: {e}", item.surface));
        assert_eq!(
            record.verdict.conformant, item.conformant,
            "{}: expected conformant={}, violations {:?}",
            item.surface, item.conformant, record.verdict.violations
        );
        if let Some(expected) = item.category {
            assert_eq!(record.category, expected, "{}", item.surface);
        }
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 1, "noun suite took {elapsed:?}");
    println!("PASS criterion 3: {checked} gold nouns, categories and verdicts exact ({elapsed:?})");
}

/// Criterion 4: table-listed conformant noun counts per system: exactly
/// 11 for one, 18 recoverable of 19 for the other (the nineteenth is not
/// listed anywhere and cannot be recovered).
#[test]
fn criterion_4_noun_count_recovery() {
    let (ga, eng, rules, cfg) = setup();
    let mut gpt4 = 0;
    let mut mini = 0;
    for item in gold_table_nouns() {
        let record = classify_token(
            item.surface,
            0,
            &source_words(item.source),
            &ga,
            &eng,
            &rules,
            &cfg,
        )
        .unwrap();
        if record.verdict.conformant {
            match item.model {
                Model::Gpt4 => gpt4 += 1,
                Model::Mini => mini += 1,
                Model::Unknown => {}
            }
        }
    }
    assert_eq!(gpt4, 11, "table-listed conformant nouns for the larger system");
    assert!(mini >= 18, "recovered {mini} of 19 listed conformant nouns");
    println!("PASS criterion 4: 11 conformant nouns recovered for one system, {mini}/19 for the other");
}

/// Criterion 5: lenition round trip over every seed-lexicon root; the
/// operation is a no-op exactly on unlenitable initials.
#[test]
fn criterion_5_mutation_property_suite() {
    let ga = gaelcheck::lexicon::Lexicon::seed_irish();
    let mut lenitable = 0;
    let mut fixed = 0;
    for entry in ga.iter() {
        let root = &entry.form;
        if !root.chars().all(|c| c.is_alphabetic() || c == '\'' || c == '-') {
            continue;
        }
        let mutated = orthography::apply_lenition(root);
        if orthography::is_lenitable(root) {
            lenitable += 1;
            assert!(
                orthography::detect_and_strip_mutation(&mutated)
                    .contains(&(orthography::MutationKind::Lenition, root.clone())),
                "round trip failed for {root} → {mutated}"
            );
        } else {
            fixed += 1;
            assert_eq!(&mutated, root, "lenition must be a no-op on {root}");
        }
        // Applying twice never stacks an extra h.
        assert_eq!(orthography::apply_lenition(&mutated), mutated);
    }
    assert!(lenitable > 0 && fixed > 0);
    println!(
        "PASS criterion 5: {lenitable} lenitable roots round-trip, {fixed} unlenitable roots fixed"
    );
}

/// Criterion 6: at least 95% of native-flagged seed entries pass vowel
/// harmony, and the attested pass/fail pair holds exactly.
#[test]
fn criterion_6_harmony_property_suite() {
    let ga = gaelcheck::lexicon::Lexicon::seed_irish();
    let mut native = 0;
    let mut passed = 0;
    for entry in ga.iter() {
        if !entry.native {
            continue;
        }
        native += 1;
        if orthography::check_vowel_harmony(&entry.form)
            .map(|r| r.passed)
            .unwrap_or(false)
        {
            passed += 1;
        }
    }
    let share = passed as f64 / native as f64;
    assert!(
        share >= 0.95,
        "only {passed}/{native} native entries pass harmony"
    );
    assert!(orthography::check_vowel_harmony("gaothmhoill").unwrap().passed);
    assert!(!orthography::check_vowel_harmony("gaoithchumachta").unwrap().passed);
    println!(
        "PASS criterion 6: {passed}/{native} native entries harmonic ({:.1}%), attested pair exact",
        share * 100.0
    );
}

/// Criterion 7: generator round trip. 200 well-formed words per pattern
/// classify back to the generating pattern at ≥95% and to conformant at
/// 100%; deliberately broken words classify violating at 100%. Under 5s.
#[test]
fn criterion_7_generator_round_trip() {
    let (ga, eng, rules, cfg) = setup();
    let start = Instant::now();
    for slug in Category::generatable_slugs() {
        let pattern = Category::from_slug(slug).unwrap();
        let spec = GenSpec {
            pattern,
            count: 200,
            rng_seed: 42,
            well_formed: true,
        };
        let words = generate(&spec, &ga, &eng, &rules, &cfg)
            .unwrap_or_else(|e| panic!("{slug}: {e}"));
        let mut pattern_hits = 0;
        for w in &words {
            let record =
                classify_token(&w.word, 0, &w.source_hint, &ga, &eng, &rules, &cfg).unwrap();
            assert!(
                record.verdict.conformant,
                "{slug}: generated {} judged violating: {:?}",
                w.word, record.verdict.violations
            );
            if record.category == pattern {
                pattern_hits += 1;
            }
        }
        assert!(
            pattern_hits * 100 >= words.len() * 95,
            "{slug}: only {pattern_hits}/{} classified back",
            words.len()
        );

        let broken_spec = GenSpec {
            pattern,
            count: 50,
            rng_seed: 43,
            well_formed: false,
        };
        match generate(&broken_spec, &ga, &eng, &rules, &cfg) {
            Ok(broken) => {
                for w in &broken {
                    let record =
                        classify_token(&w.word, 0, &w.source_hint, &ga, &eng, &rules, &cfg)
                            .unwrap();
                    assert!(
                        !record.verdict.conformant,
                        "{slug}: broken {} judged conformant",
                        w.word
                    );
                }
            }
            Err(e) => panic!("{slug} broken: {e}"),
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 5, "round trip took {elapsed:?}");
    println!("PASS criterion 7: 8 patterns × 200 round-trip ≥95%, broken words 100% violating ({elapsed:?})");
}

/// Criterion 8: a 25,000-token synthetic corpus analyzes in under a
/// second, single-threaded.
#[test]
fn criterion_8_end_to_end_throughput() {
    let (ga, eng, rules, cfg) = setup();
    // Build ~25k tokens of in-lexicon text salted with OOV words.
    let vocab: Vec<&str> = ga.iter().map(|e| e.form.as_str()).collect();
    let mut sentences = Vec::new();
    let mut i = 0;
    let mut tokens = 0;
    while tokens < 25_000 {
        let mut words = Vec::new();
        for k in 0..10 {
            words.push(vocab[(i * 7 + k * 13) % vocab.len()]);
        }
        if i % 10 == 0 {
            words.push("gaothmhoill");
        }
        tokens += words.len();
        sentences.push((String::from("filler source line"), words.join(" ")));
        i += 1;
    }
    let pair = DocumentPair {
        doc_id: "synthetic".into(),
        model_tag: "bench".into(),
        sentences,
    };
    let start = Instant::now();
    let report = analyze_document(&pair, &ga, &eng, &rules, &cfg).unwrap();
    let elapsed = start.elapsed();
    assert!(report.token_count >= 25_000);
    assert!(
        elapsed.as_millis() < 1000,
        "analysis took {elapsed:?} for {} tokens",
        report.token_count
    );
    println!(
        "PASS criterion 8: {} tokens analyzed in {elapsed:?} ({} records)",
        report.token_count,
        report.records.len()
    );
}

/// Fixture reproduction: the bundled corpora yield the attested record
/// totals and rates under the declared token total.
#[test]
fn fixture_documents_reproduce_attested_rates() {
    let (ga, eng, rules, mut cfg) = setup();
    cfg.token_count_override = Some(24194);

    let gpt4 = DocumentPair::from_aligned_texts(
        "gpt4-fixture",
        "gpt4",
        include_str!("data/gpt4.src.txt"),
        include_str!("data/gpt4.tgt.txt"),
    )
    .unwrap();
    let report = analyze_document(&gpt4, &ga, &eng, &rules, &cfg).unwrap();
    let surfaces: Vec<&str> = report.records.iter().map(|r| r.surface.as_str()).collect();
    assert_eq!(
        report.records.len(),
        21,
        "expected 21 records, got {surfaces:?}"
    );
    assert_eq!(report.rate_per_1000.to_string(), "0.86");
    let conformant_nouns = report.count(Pos::Noun, true);
    assert_eq!(conformant_nouns, 11);

    let mini = DocumentPair::from_aligned_texts(
        "mini-fixture",
        "mini",
        include_str!("data/mini.src.txt"),
        include_str!("data/mini.tgt.txt"),
    )
    .unwrap();
    let report = analyze_document(&mini, &ga, &eng, &rules, &cfg).unwrap();
    let surfaces: Vec<&str> = report.records.iter().map(|r| r.surface.as_str()).collect();
    assert_eq!(
        report.records.len(),
        52,
        "expected 52 records, got {surfaces:?}"
    );
    assert_eq!(report.rate_per_1000.to_string(), "2.14");
    println!("PASS fixtures: 21 records @ 0.86 and 52 records @ 2.14 under the declared total");
}
