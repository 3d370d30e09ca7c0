//! k-fold comparison of models trained on original and normalized text.

use std::collections::BTreeSet;
use std::io::Write;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::corpus::{diff_corpus, CorpusLine, DiffStats};
use crate::error::{Error, Result};
use crate::grammar::{Grammar, Mode};
use crate::lm::{cross_entropy, Discounting, NGramModel, Unit};
use crate::stats::{brunner_munzel, delta_mu, mann_whitney, mean, welch, TestResult};
use crate::Language;

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub k: usize,
    /// Fraction of lines used for training.
    pub split: f64,
    pub unit: Unit,
    pub orders: Vec<usize>,
    pub seed: u64,
    pub language: Language,
    pub mode: Mode,
    pub discounting: Discounting,
}

impl ExperimentConfig {
    pub fn new(language: Language, unit: Unit, seed: u64) -> Self {
        ExperimentConfig {
            k: 100,
            split: 0.8,
            unit,
            orders: default_orders(unit),
            seed,
            language,
            mode: Mode::Reading,
            discounting: Discounting::Estimated,
        }
    }

    /// Parses `key = value` lines; `#` starts a comment. Keys: `language`,
    /// `unit`, `seed`, `k`, `split`, `orders` (`3,4,5` or `3-10`), `mode`,
    /// and `discounting` (`estimated`, `fallback` or `fixed:D1,D2,D3`).
    /// `language` and `seed` may instead come from `defaults`.
    pub fn parse(text: &str, language: Option<Language>, seed: Option<u64>) -> Result<Self> {
        let mut language = language;
        let mut seed = seed;
        let mut unit = Unit::Char;
        let mut k = None;
        let mut split = None;
        let mut orders = None;
        let mut mode = None;
        let mut discounting = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: String| Error::Config(format!("line {}: {msg}", i + 1));
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| bad(format!("expected key=value, found `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let num = |v: &str| v.parse::<usize>().map_err(|_| bad(format!("`{v}` is not a count")));
            match key {
                "language" | "lang" => language = Some(value.parse()?),
                "unit" => unit = value.parse()?,
                "seed" => seed = Some(value.parse().map_err(|_| bad(format!("bad seed `{value}`")))?),
                "k" | "folds" => k = Some(num(value)?),
                "split" => split = Some(value.parse::<f64>().map_err(|_| bad(format!("bad split `{value}`")))?),
                "orders" => {
                    let list = if let Some((lo, hi)) = value.split_once('-') {
                        (num(lo.trim())?..=num(hi.trim())?).collect()
                    } else {
                        value.split(',').map(|v| num(v.trim())).collect::<Result<Vec<_>>>()?
                    };
                    orders = Some(list);
                }
                "mode" => mode = Some(value.parse()?),
                "discounting" => discounting = Some(value.parse()?),
                _ => return Err(bad(format!("unknown key `{key}`"))),
            }
        }
        let language = language.ok_or_else(|| Error::Config("no language given".into()))?;
        let seed = seed.ok_or_else(|| Error::Config("no seed given".into()))?;
        let mut config = ExperimentConfig::new(language, unit, seed);
        config.k = k.unwrap_or(config.k);
        config.split = split.unwrap_or(config.split);
        config.orders = orders.unwrap_or(config.orders);
        config.mode = mode.unwrap_or(config.mode);
        config.discounting = discounting.unwrap_or(config.discounting);
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.split > 0.0 && self.split < 1.0) {
            return Err(Error::Config(format!("split must be in (0, 1), got {}", self.split)));
        }
        if self.k < 2 {
            return Err(Error::Config(format!("k must be at least 2, got {}", self.k)));
        }
        if self.orders.is_empty() || self.orders.contains(&0) {
            return Err(Error::Config(
                "orders must be a non-empty list of positive integers".into(),
            ));
        }
        Ok(())
    }
}

pub fn default_orders(unit: Unit) -> Vec<usize> {
    match unit {
        Unit::Char => (3..=10).collect(),
        Unit::Word => (2..=5).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fold {
    pub train: Vec<usize>,
    pub test: Vec<usize>,
}

/// Number of test lines for a corpus of `n` lines.
pub fn test_size(n: usize, split: f64) -> usize {
    // The tolerance keeps 0.2 * 5 from rounding up to 2.
    (((1.0 - split) * n as f64 - 1e-9).ceil() as usize).max(1)
}

/// Builds `k` folds. Each fold shuffles the lines outside `changed` with a
/// ChaCha8 stream selected by the fold index and takes the test set from
/// the front; everything else, `changed` included, is training data. Index
/// lists are sorted.
pub fn make_folds(n_lines: usize, changed: &BTreeSet<usize>, k: usize, split: f64, seed: u64) -> Result<Vec<Fold>> {
    if let Some(&bad) = changed.iter().find(|&&i| i >= n_lines) {
        return Err(Error::Precondition(format!("changed line {bad} is outside the corpus")));
    }
    let candidates: Vec<usize> = (0..n_lines).filter(|i| !changed.contains(i)).collect();
    let required = test_size(n_lines, split);
    if candidates.len() < required {
        return Err(Error::InfeasibleSplit {
            required,
            available: candidates.len(),
        });
    }
    Ok((0..k)
        .map(|fold| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(fold as u64);
            let mut pool = candidates.clone();
            pool.shuffle(&mut rng);
            let mut test = pool[..required].to_vec();
            test.sort_unstable();
            let mut train: Vec<usize> = pool[required..].iter().chain(changed).copied().collect();
            train.sort_unstable();
            Fold { train, test }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq)]
pub struct FoldOutcome {
    pub fold: usize,
    pub order: usize,
    /// Order actually trained after retries on degenerate counts.
    pub effective_order: usize,
    pub h_baseline: f64,
    pub h_test: f64,
    pub train_tokens_baseline: usize,
    pub train_tokens_test: usize,
    pub test_tokens: usize,
    pub train_lines: usize,
    pub test_lines: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct OrderSummary {
    pub order: usize,
    pub delta_mu: f64,
    pub pct: f64,
    /// Welch on (normalized, baseline).
    pub welch: Option<TestResult>,
    /// Mann-Whitney on (baseline, normalized).
    pub mann_whitney: Option<TestResult>,
    /// Brunner-Munzel on (baseline, normalized).
    pub brunner_munzel: Option<TestResult>,
}

#[derive(Clone, Debug)]
pub struct ExperimentOutcome {
    pub diff: DiffStats,
    pub folds: Vec<FoldOutcome>,
    pub summaries: Vec<OrderSummary>,
}

fn count_tokens(unit: Unit, lines: &[&str]) -> usize {
    lines.iter().map(|l| unit.split(l).len()).sum()
}

/// Trains both conditions at `order`, lowering the order for both when
/// either is degenerate.
fn train_pair(
    baseline: &[&str],
    normalized: &[&str],
    config: &ExperimentConfig,
    order: usize,
    fold: usize,
) -> Result<(NGramModel, NGramModel, usize)> {
    let mut n = order;
    loop {
        let b = NGramModel::train(baseline, config.unit, n, config.discounting);
        let t = NGramModel::train(normalized, config.unit, n, config.discounting);
        match (b, t) {
            (Ok(b), Ok(t)) => return Ok((b, t, n)),
            (Err(e @ Error::DegenerateCounts { .. }), _) | (_, Err(e @ Error::DegenerateCounts { .. })) if n > 1 => {
                log::warn!(
                    "fold {fold}, {n}-gram model: {e}; retrying both conditions at order {}",
                    n - 1
                );
                n -= 1;
            }
            (Err(e), _) | (_, Err(e)) => {
                return Err(match e {
                    Error::DegenerateCounts { statistic, .. } => Error::DegenerateCounts {
                        order,
                        statistic: format!("fold {fold}: {statistic}"),
                    },
                    other => other,
                })
            }
        }
    }
}

fn pick<'a>(lines: &'a [CorpusLine], idx: &[usize]) -> Vec<&'a str> {
    idx.iter().map(|&i| lines[i].text.as_str()).collect()
}

fn run_job(
    fold_index: usize,
    fold: &Fold,
    order: usize,
    original: &[CorpusLine],
    normalized: &[CorpusLine],
    config: &ExperimentConfig,
) -> Result<FoldOutcome> {
    let train_b = pick(original, &fold.train);
    let train_t = pick(normalized, &fold.train);
    let test_b = pick(original, &fold.test);
    let test_t = pick(normalized, &fold.test);
    if test_b != test_t {
        return Err(Error::Invariant(format!(
            "fold {fold_index}: normalized test lines differ from the original test lines"
        )));
    }
    let (model_b, model_t, effective_order) = train_pair(&train_b, &train_t, config, order, fold_index)?;
    Ok(FoldOutcome {
        fold: fold_index,
        order,
        effective_order,
        h_baseline: cross_entropy(&model_b, &test_b)?,
        h_test: cross_entropy(&model_t, &test_t)?,
        train_tokens_baseline: count_tokens(config.unit, &train_b),
        train_tokens_test: count_tokens(config.unit, &train_t),
        test_tokens: count_tokens(config.unit, &test_b),
        train_lines: fold.train.len(),
        test_lines: fold.test.len(),
    })
}

fn ok_or_warn(order: usize, name: &str, r: Result<TestResult>) -> Option<TestResult> {
    r.map_err(|e| log::warn!("order {order}: {name} not computed: {e}"))
        .ok()
}

pub fn summarize(order: usize, outcomes: &[&FoldOutcome]) -> Result<OrderSummary> {
    let b: Vec<f64> = outcomes.iter().map(|o| o.h_baseline).collect();
    let t: Vec<f64> = outcomes.iter().map(|o| o.h_test).collect();
    let d = delta_mu(&b, &t)?;
    Ok(OrderSummary {
        order,
        delta_mu: d,
        pct: 100.0 * d / mean(&b),
        welch: ok_or_warn(order, "Welch", welch(&t, &b)),
        mann_whitney: ok_or_warn(order, "Mann-Whitney", mann_whitney(&b, &t)),
        brunner_munzel: ok_or_warn(order, "Brunner-Munzel", brunner_munzel(&b, &t)),
    })
}

/// Runs the full comparison on `lines` (already filtered). Jobs run on the
/// current rayon pool; results are reduced in (order, fold) order.
pub fn run_experiment(lines: &[CorpusLine], grammar: &Grammar, config: &ExperimentConfig) -> Result<ExperimentOutcome> {
    config.validate()?;
    if lines.is_empty() {
        return Err(Error::Precondition("corpus is empty".into()));
    }
    let diff = diff_corpus(lines, grammar, config.mode);
    log::info!(
        "{} lines, {} changed ({:.2}%), {} of {} types changed",
        diff.stats.n_lines,
        diff.stats.n_lines_changed,
        diff.stats.ratio_lines,
        diff.stats.n_types_changed,
        diff.stats.n_types
    );
    let folds = make_folds(lines.len(), &diff.changed, config.k, config.split, config.seed)?;
    let jobs: Vec<(usize, usize)> = config
        .orders
        .iter()
        .flat_map(|&order| (0..config.k).map(move |f| (order, f)))
        .collect();
    let outcomes: Vec<FoldOutcome> = jobs
        .par_iter()
        .map(|&(order, f)| run_job(f, &folds[f], order, lines, &diff.normalized, config))
        .collect::<Result<Vec<_>>>()?;
    let summaries = config
        .orders
        .iter()
        .map(|&order| {
            let rows: Vec<&FoldOutcome> = outcomes.iter().filter(|o| o.order == order).collect();
            summarize(order, &rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExperimentOutcome {
        diff: diff.stats,
        folds: outcomes,
        summaries,
    })
}

/// Shortest round-trip form, in exponent notation for very small or large
/// magnitudes.
pub fn format_float(x: f64) -> String {
    let a = x.abs();
    if a == 0.0 || !a.is_finite() || (1e-4..1e9).contains(&a) {
        x.to_string()
    } else {
        format!("{x:e}")
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map_or_else(|| "nan".to_string(), format_float)
}

/// One row per order: `order Δmu pct ws_t ws_p ws_ci_lo ws_ci_hi mw_u mw_p bm_t bm_p`.
pub fn write_results<W: Write + ?Sized>(out: &mut W, summaries: &[OrderSummary]) -> std::io::Result<()> {
    writeln!(
        out,
        "order\tΔmu\tpct\tws_t\tws_p\tws_ci_lo\tws_ci_hi\tmw_u\tmw_p\tbm_t\tbm_p"
    )?;
    for s in summaries {
        let ws = s.welch.as_ref();
        let mw = s.mann_whitney.as_ref();
        let bm = s.brunner_munzel.as_ref();
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            s.order,
            format_float(s.delta_mu),
            format_float(s.pct),
            fmt_opt(ws.map(|r| r.statistic)),
            fmt_opt(ws.map(|r| r.p_value)),
            fmt_opt(ws.and_then(|r| r.ci).map(|c| c.0)),
            fmt_opt(ws.and_then(|r| r.ci).map(|c| c.1)),
            fmt_opt(mw.map(|r| r.statistic)),
            fmt_opt(mw.map(|r| r.p_value)),
            fmt_opt(bm.map(|r| r.statistic)),
            fmt_opt(bm.map(|r| r.p_value)),
        )?;
    }
    Ok(())
}

/// The full `kfold` result file: a settings line, the corpus statistics and
/// the per-order table.
pub fn write_report<W: Write + ?Sized>(
    out: &mut W,
    config: &ExperimentConfig,
    grammar_version: &str,
    outcome: &ExperimentOutcome,
) -> std::io::Result<()> {
    writeln!(
        out,
        "# lang={} mode={} unit={} k={} split={} seed={} discounting={:?} grammar={}",
        config.language.tag(),
        config.mode.as_str(),
        config.unit.as_str(),
        config.k,
        config.split,
        config.seed,
        config.discounting,
        grammar_version
    )?;
    outcome.diff.write_block(out)?;
    write_results(out, &outcome.summaries)
}

pub fn write_folds<W: Write + ?Sized>(out: &mut W, folds: &[FoldOutcome]) -> std::io::Result<()> {
    writeln!(
        out,
        "fold\torder\teffective_order\th_baseline\th_test\ttrain_tokens_baseline\ttrain_tokens_test\ttest_tokens\ttrain_lines\ttest_lines"
    )?;
    for f in folds {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            f.fold,
            f.order,
            f.effective_order,
            format_float(f.h_baseline),
            format_float(f.h_test),
            f.train_tokens_baseline,
            f.train_tokens_test,
            f.test_tokens,
            f.train_lines,
            f.test_lines
        )?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn five_line_example() {
        let d: BTreeSet<usize> = [1, 3].into();
        let folds = make_folds(5, &d, 10, 0.8, 42).unwrap();
        for f in &folds {
            assert_eq!(f.test.len(), 1);
            assert!([0, 2, 4].contains(&f.test[0]));
            assert!(f.train.contains(&1) && f.train.contains(&3));
            assert_eq!(f.train.len() + f.test.len(), 5);
        }
        assert_eq!(folds, make_folds(5, &d, 10, 0.8, 42).unwrap());
    }

    #[test]
    fn infeasible_when_everything_changed() {
        let d: BTreeSet<usize> = (0..5).collect();
        assert!(matches!(
            make_folds(5, &d, 3, 0.8, 1),
            Err(Error::InfeasibleSplit {
                required: 1,
                available: 0
            })
        ));
    }

    #[test]
    fn test_sizes() {
        assert_eq!(test_size(5, 0.8), 1);
        assert_eq!(test_size(10, 0.8), 2);
        assert_eq!(test_size(11, 0.8), 3);
        assert_eq!(test_size(1, 0.9), 1);
    }

    #[test]
    fn config_parsing() {
        let c = ExperimentConfig::parse(
            "# demo\nunit = word\norders = 2,3\nk=5\nsplit=0.75\nmode=visual\ndiscounting=fixed:0.5,1,1.5\n",
            Some(Language::Ur),
            Some(7),
        )
        .unwrap();
        assert_eq!(c.unit, Unit::Word);
        assert_eq!(c.orders, [2, 3]);
        assert_eq!(c.k, 5);
        assert_eq!(c.mode, Mode::Visual);
        assert_eq!(c.discounting, Discounting::Fixed([0.5, 1.0, 1.5]));
        let d = ExperimentConfig::parse("language=sd\nseed=3\norders=3-5", None, None).unwrap();
        assert_eq!(d.orders, [3, 4, 5]);
        assert_eq!(d.k, 100);
        assert_eq!(d.language, Language::Sd);
        for bad in ["k=1", "split=1.0", "orders=", "bogus=1", "k", "discounting=magic"] {
            assert!(
                ExperimentConfig::parse(bad, Some(Language::Ur), Some(1)).is_err(),
                "{bad}"
            );
        }
        assert!(ExperimentConfig::parse("", None, Some(1)).is_err());
    }
}
