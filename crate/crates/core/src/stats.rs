//! Significance tests over per-fold cross-entropies.

use statrs::distribution::{ContinuousCDF, Normal, StudentsT};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TestResult {
    pub statistic: f64,
    /// Two-sided.
    pub p_value: f64,
    pub df: Option<f64>,
    /// 95% confidence interval for the mean difference (Welch only).
    pub ci: Option<(f64, f64)>,
    /// The statistic is infinite because the samples are fully separated.
    pub infinite: bool,
}

impl TestResult {
    fn new(statistic: f64, p_value: f64) -> Self {
        TestResult {
            statistic,
            p_value: p_value.clamp(0.0, 1.0),
            df: None,
            ci: None,
            infinite: false,
        }
    }
}

fn check(sample: &[f64], min_len: usize, name: &str) -> Result<()> {
    if sample.len() < min_len {
        return Err(Error::Precondition(format!(
            "sample {name} has {} values, need at least {min_len}",
            sample.len()
        )));
    }
    if let Some(x) = sample.iter().find(|x| !x.is_finite()) {
        return Err(Error::Precondition(format!("sample {name} contains {x}")));
    }
    Ok(())
}

pub fn mean(x: &[f64]) -> f64 {
    x.iter().sum::<f64>() / x.len() as f64
}

/// Unbiased sample variance.
pub fn variance(x: &[f64]) -> f64 {
    let m = mean(x);
    x.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (x.len() as f64 - 1.0)
}

fn t_dist(df: f64) -> StudentsT {
    StudentsT::new(0.0, 1.0, df).expect("positive degrees of freedom")
}

/// Two-sided Student-t p-value.
pub fn t_two_sided(t: f64, df: f64) -> f64 {
    (2.0 * t_dist(df).sf(t.abs())).min(1.0)
}

/// Two-sided standard normal p-value.
pub fn normal_two_sided(z: f64) -> f64 {
    let n = Normal::new(0.0, 1.0).expect("standard normal");
    (2.0 * n.sf(z.abs())).min(1.0)
}

/// Mean paired difference `mean(test - baseline)`; negative means the test
/// condition has lower entropy.
pub fn delta_mu(baseline: &[f64], test: &[f64]) -> Result<f64> {
    if baseline.len() != test.len() {
        return Err(Error::LengthMismatch(baseline.len(), test.len()));
    }
    if baseline.is_empty() {
        return Err(Error::Precondition("no folds".into()));
    }
    Ok(test.iter().zip(baseline).map(|(t, b)| t - b).sum::<f64>() / test.len() as f64)
}

/// Welch's t-test of `mean(a) - mean(b)` with Satterthwaite degrees of
/// freedom and a 95% confidence interval.
pub fn welch(a: &[f64], b: &[f64]) -> Result<TestResult> {
    check(a, 2, "a")?;
    check(b, 2, "b")?;
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (va, vb) = (variance(a) / na, variance(b) / nb);
    let se2 = va + vb;
    if se2 == 0.0 {
        return Err(Error::ZeroVariance("both samples are constant"));
    }
    let diff = mean(a) - mean(b);
    let se = se2.sqrt();
    let t = diff / se;
    let df = se2 * se2 / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    let q = t_dist(df).inverse_cdf(0.975);
    let mut r = TestResult::new(t, t_two_sided(t, df));
    r.df = Some(df);
    r.ci = Some((diff - q * se, diff + q * se));
    Ok(r)
}

/// Average (mid) ranks, 1-based.
pub fn rank(values: &[f64]) -> Vec<f64> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut ranks = vec![0.0; values.len()];
    let mut i = 0;
    while i < order.len() {
        let mut j = i;
        while j + 1 < order.len() && values[order[j + 1]] == values[order[i]] {
            j += 1;
        }
        let r = (i + j) as f64 / 2.0 + 1.0;
        for &k in &order[i..=j] {
            ranks[k] = r;
        }
        i = j + 1;
    }
    ranks
}

/// Combined sample size up to which Mann-Whitney p-values are exact.
pub const MW_EXACT_MAX: usize = 12;

/// Mann-Whitney test. The statistic is `U` for `a`: the number of pairs
/// with `a > b`, ties counting one half.
pub fn mann_whitney(a: &[f64], b: &[f64]) -> Result<TestResult> {
    check(a, 1, "a")?;
    check(b, 1, "b")?;
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let ranks = rank(&pooled);
    let (na, nb) = (a.len(), b.len());
    let n = na + nb;
    let u_of = |rank_sum: f64| rank_sum - (na * (na + 1)) as f64 / 2.0;
    let u = u_of(ranks[..na].iter().sum());
    let centre = (na * nb) as f64 / 2.0;

    if n <= MW_EXACT_MAX {
        let observed = (u - centre).abs();
        let (mut extreme, mut total) = (0u64, 0u64);
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != na {
                continue;
            }
            let sum: f64 = (0..n).filter(|i| mask & (1 << i) != 0).map(|i| ranks[i]).sum();
            total += 1;
            if (u_of(sum) - centre).abs() >= observed - 1e-9 {
                extreme += 1;
            }
        }
        return Ok(TestResult::new(u, extreme as f64 / total as f64));
    }

    let mut sorted = pooled.clone();
    sorted.sort_by(f64::total_cmp);
    let mut tie_term = 0.0;
    let mut i = 0;
    while i < n {
        let mut j = i;
        while j + 1 < n && sorted[j + 1] == sorted[i] {
            j += 1;
        }
        let t = (j - i + 1) as f64;
        tie_term += t * t * t - t;
        i = j + 1;
    }
    let nf = n as f64;
    let var = (na * nb) as f64 / 12.0 * ((nf + 1.0) - tie_term / (nf * (nf - 1.0)));
    if var <= 0.0 {
        return Ok(TestResult::new(u, 1.0));
    }
    let z = ((u - centre).abs() - 0.5).max(0.0) / var.sqrt();
    Ok(TestResult::new(u, normal_two_sided(z)))
}

/// Brunner-Munzel test. The statistic is positive when `b` tends to rank
/// above `a`. Fully separated samples give an infinite statistic with
/// `p = 0`.
pub fn brunner_munzel(a: &[f64], b: &[f64]) -> Result<TestResult> {
    check(a, 2, "a")?;
    check(b, 2, "b")?;
    let (na, nb) = (a.len(), b.len());
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let pooled_ranks = rank(&pooled);
    let (pa, pb) = pooled_ranks.split_at(na);
    let (ra, rb) = (rank(a), rank(b));
    let (pa_mean, pb_mean) = (mean(pa), mean(pb));
    let spread = |p: &[f64], r: &[f64], p_mean: f64| {
        let r_mean = mean(r);
        p.iter()
            .zip(r)
            .map(|(pv, rv)| {
                let d = pv - rv - p_mean + r_mean;
                d * d
            })
            .sum::<f64>()
            / (p.len() as f64 - 1.0)
    };
    let sa = spread(pa, &ra, pa_mean);
    let sb = spread(pb, &rb, pb_mean);
    let (naf, nbf) = (na as f64, nb as f64);
    let pooled_var = naf * sa + nbf * sb;
    if pooled_var == 0.0 {
        if pa_mean == pb_mean {
            return Err(Error::ZeroVariance("all placements are constant"));
        }
        let mut r = TestResult::new(f64::INFINITY.copysign(pb_mean - pa_mean), 0.0);
        r.infinite = true;
        return Ok(r);
    }
    let w = naf * nbf * (pb_mean - pa_mean) / ((naf + nbf) * pooled_var.sqrt());
    let df = pooled_var * pooled_var / ((naf * sa).powi(2) / (naf - 1.0) + (nbf * sb).powi(2) / (nbf - 1.0));
    let mut r = TestResult::new(w, t_two_sided(w, df));
    r.df = Some(df);
    Ok(r)
}
