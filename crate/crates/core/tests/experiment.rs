use std::collections::BTreeSet;

use perso_norm::corpus::{diff_corpus, synthetic_corpus, to_corpus, CorpusLine, SyntheticConfig};
use perso_norm::experiment::{make_folds, run_experiment, summarize, write_folds, write_results, ExperimentConfig};
use perso_norm::lm::Unit;
use perso_norm::{Error, Grammar, Language, Mode};

fn corpus(lines: usize, seed: u64) -> Vec<CorpusLine> {
    to_corpus(synthetic_corpus(&SyntheticConfig {
        lines,
        vocabulary: 3000,
        seed,
        ..SyntheticConfig::default()
    }))
}

fn small_config(seed: u64) -> ExperimentConfig {
    let mut c = ExperimentConfig::new(Language::Ur, Unit::Char, seed);
    c.k = 6;
    c.orders = vec![2, 3];
    c
}

#[test]
fn changed_lines_always_train() {
    let lines = corpus(1000, 5);
    let ur = Grammar::bundled(Language::Ur).unwrap();
    let diff = diff_corpus(&lines, &ur, Mode::Reading);
    assert!(!diff.changed.is_empty());
    for seed in 0..20 {
        let folds = make_folds(lines.len(), &diff.changed, 10, 0.8, seed).unwrap();
        for f in &folds {
            assert!(f.test.iter().all(|i| !diff.changed.contains(i)));
            assert!(diff.changed.iter().all(|i| f.train.binary_search(i).is_ok()));
            assert_eq!(f.test.len(), 200);
            let all: BTreeSet<usize> = f.train.iter().chain(&f.test).copied().collect();
            assert_eq!(all.len(), lines.len());
        }
    }
}

#[test]
fn folds_depend_on_seed_and_index() {
    let d = BTreeSet::new();
    let a = make_folds(300, &d, 4, 0.8, 9).unwrap();
    assert_eq!(a, make_folds(300, &d, 4, 0.8, 9).unwrap());
    assert_ne!(a, make_folds(300, &d, 4, 0.8, 10).unwrap());
    assert_ne!(a[0].test, a[1].test);
    // adding folds does not disturb earlier ones
    assert_eq!(a[..], make_folds(300, &d, 7, 0.8, 9).unwrap()[..4]);
}

#[test]
fn experiment_outcomes_are_consistent() {
    let lines = corpus(2500, 11);
    let ur = Grammar::bundled(Language::Ur).unwrap();
    let config = small_config(3);
    let out = run_experiment(&lines, &ur, &config).unwrap();
    assert_eq!(out.folds.len(), 12);
    assert_eq!(out.summaries.len(), 2);
    assert!(out.diff.n_lines_changed > 0);
    for f in &out.folds {
        assert_eq!(f.effective_order, f.order);
        assert_eq!(f.train_lines + f.test_lines, 2500);
        assert!(f.h_baseline.is_finite() && f.h_test.is_finite());
    }
    for s in &out.summaries {
        let rows: Vec<_> = out.folds.iter().filter(|f| f.order == s.order).collect();
        let b: Vec<f64> = rows.iter().map(|f| f.h_baseline).collect();
        let t: Vec<f64> = rows.iter().map(|f| f.h_test).collect();
        let mb = b.iter().sum::<f64>() / b.len() as f64;
        let mt = t.iter().sum::<f64>() / t.len() as f64;
        assert!((s.delta_mu - (mt - mb)).abs() < 1e-12);
        assert!((s.pct - 100.0 * (mt - mb) / mb).abs() < 1e-9);
        assert_eq!(summarize(s.order, &rows).unwrap(), *s);
        // same test folds across orders
        let tokens: Vec<usize> = rows.iter().map(|f| f.test_tokens).collect();
        let other: Vec<usize> = out
            .folds
            .iter()
            .filter(|f| f.order != s.order)
            .map(|f| f.test_tokens)
            .collect();
        assert_eq!(tokens, other);
    }
}

#[test]
fn output_independent_of_thread_count() {
    let lines = corpus(1500, 2);
    let ur = Grammar::bundled(Language::Ur).unwrap();
    let config = small_config(8);
    let render = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let out = pool.install(|| run_experiment(&lines, &ur, &config)).unwrap();
        let mut buf = Vec::new();
        write_results(&mut buf, &out.summaries).unwrap();
        write_folds(&mut buf, &out.folds).unwrap();
        buf
    };
    assert_eq!(render(1), render(4));
}

#[test]
fn identity_mode_gives_no_difference() {
    let lines = corpus(1200, 4);
    let ur = Grammar::bundled(Language::Ur).unwrap();
    let mut config = small_config(1);
    config.mode = Mode::Nfc;
    let out = run_experiment(&lines, &ur, &config).unwrap();
    assert_eq!(out.diff.n_lines_changed, 0);
    for s in &out.summaries {
        assert_eq!(s.delta_mu, 0.0);
        assert_eq!(s.welch.as_ref().unwrap().p_value, 1.0);
        assert!(s.mann_whitney.as_ref().unwrap().p_value > 0.99);
    }
}

#[test]
fn every_line_changed_is_infeasible() {
    let lines = to_corpus(["کتاب", "کتاب ہے", "کیا"].map(|s| s.replace('ک', "ك")));
    let ur = Grammar::bundled(Language::Ur).unwrap();
    let err = run_experiment(&lines, &ur, &small_config(0)).unwrap_err();
    assert!(
        matches!(
            err,
            Error::InfeasibleSplit {
                required: 1,
                available: 0
            }
        ),
        "{err}"
    );
}

#[test]
fn degenerate_counts_retry_lower_order() {
    // word 5-grams cannot be estimated from 200 lines
    let lines = corpus(200, 7);
    let ur = Grammar::bundled(Language::Ur).unwrap();
    let mut config = ExperimentConfig::new(Language::Ur, Unit::Word, 1);
    config.k = 3;
    config.orders = vec![5];
    let out = run_experiment(&lines, &ur, &config).unwrap();
    assert!(out
        .folds
        .iter()
        .all(|f| f.order == 5 && (1..5).contains(&f.effective_order)));
    let mut buf = Vec::new();
    write_folds(&mut buf, &out.folds).unwrap();
    assert!(String::from_utf8(buf)
        .unwrap()
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("0\t5\t"));
}
