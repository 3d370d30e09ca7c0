//! Permutation references for the rank tests.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// U for `a` by direct pair counting.
pub fn u_pairs(a: &[f64], b: &[f64]) -> f64 {
    let mut u = 0.0;
    for x in a {
        for y in b {
            if x > y {
                u += 1.0;
            } else if x == y {
                u += 0.5;
            }
        }
    }
    u
}

/// Two-sided Mann-Whitney p by visiting every split of the pooled values.
pub fn mw_enumerate(a: &[f64], b: &[f64]) -> f64 {
    fn walk(start: usize, need: usize, n: usize, chosen: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if need == 0 {
            visit(chosen);
            return;
        }
        for i in start..=n - need {
            chosen.push(i);
            walk(i + 1, need - 1, n, chosen, visit);
            chosen.pop();
        }
    }
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let n = pooled.len();
    let centre = (a.len() * b.len()) as f64 / 2.0;
    let observed = (u_pairs(a, b) - centre).abs();
    let (mut hits, mut total) = (0usize, 0usize);
    walk(0, a.len(), n, &mut Vec::new(), &mut |idx: &[usize]| {
        let xa: Vec<f64> = idx.iter().map(|&i| pooled[i]).collect();
        let xb: Vec<f64> = (0..n).filter(|i| !idx.contains(i)).map(|i| pooled[i]).collect();
        total += 1;
        if (u_pairs(&xa, &xb) - centre).abs() >= observed - 1e-9 {
            hits += 1;
        }
    });
    hits as f64 / total as f64
}

/// Monte-Carlo permutation p-value for Mann-Whitney on tie-free data.
pub fn mw_monte_carlo(a: &[f64], b: &[f64], trials: usize, seed: u64) -> f64 {
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let n = pooled.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| pooled[i].total_cmp(&pooled[j]));
    // Labels in pooled sorted order: true for sample a.
    let mut labels: Vec<bool> = vec![false; n];
    for (pos, &i) in order.iter().enumerate() {
        labels[pos] = i < a.len();
    }
    let centre = (a.len() * b.len()) as f64 / 2.0;
    let u_of = |labels: &[bool]| {
        // Each a counts the b values below it.
        let (mut below, mut u) = (0usize, 0usize);
        for &is_a in labels {
            if is_a {
                u += below;
            } else {
                below += 1;
            }
        }
        u as f64
    };
    let observed = (u_of(&labels) - centre).abs();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    for _ in 0..trials {
        labels.shuffle(&mut rng);
        if (u_of(&labels) - centre).abs() >= observed - 1e-9 {
            hits += 1;
        }
    }
    hits as f64 / trials as f64
}

/// Brunner-Munzel statistic from group labels over pooled sorted order
/// (tie-free data), written from the placement definition.
fn bm_from_labels(labels: &[bool], na: usize, nb: usize) -> f64 {
    let (mut ia, mut ib) = (0usize, 0usize);
    let (mut pa, mut pb) = (Vec::with_capacity(na), Vec::with_capacity(nb));
    for (pos, &is_a) in labels.iter().enumerate() {
        let pooled_rank = (pos + 1) as f64;
        if is_a {
            ia += 1;
            // Placement: number of b values below this a.
            pa.push(pooled_rank - ia as f64);
        } else {
            ib += 1;
            pb.push(pooled_rank - ib as f64);
        }
    }
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let var = |v: &[f64]| {
        let m = mean(v);
        v.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (v.len() as f64 - 1.0)
    };
    let (naf, nbf) = (na as f64, nb as f64);
    // Relative effect P(a < b) from the b placements.
    let p_hat = mean(&pb) / naf;
    let s2 = var(&pa) / (nbf * nbf) / naf + var(&pb) / (naf * naf) / nbf;
    (p_hat - 0.5) / s2.sqrt()
}

/// Monte-Carlo permutation p-value for the Brunner-Munzel statistic.
pub fn bm_permutation(a: &[f64], b: &[f64], trials: usize, seed: u64) -> f64 {
    let pooled: Vec<f64> = a.iter().chain(b).copied().collect();
    let mut order: Vec<usize> = (0..pooled.len()).collect();
    order.sort_by(|&i, &j| pooled[i].total_cmp(&pooled[j]));
    let mut labels: Vec<bool> = order.iter().map(|&i| i < a.len()).collect();
    let observed = bm_from_labels(&labels, a.len(), b.len()).abs();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut hits = 0usize;
    for _ in 0..trials {
        labels.shuffle(&mut rng);
        let w = bm_from_labels(&labels, a.len(), b.len());
        if !w.is_finite() || w.abs() >= observed - 1e-9 {
            hits += 1;
        }
    }
    hits as f64 / trials as f64
}

/// Normal samples with a common scale and a random location shift.
pub fn shifted_samples(rng: &mut ChaCha8Rng, n: usize) -> (Vec<f64>, Vec<f64>) {
    let shift = rng.random_range(-1.0..1.0);
    let mut normal = || {
        // Box-Muller.
        let u1: f64 = rng.random_range(f64::EPSILON..1.0);
        let u2: f64 = rng.random();
        (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
    };
    let a: Vec<f64> = (0..n).map(|_| normal()).collect();
    let b: Vec<f64> = (0..n).map(|_| normal() + shift).collect();
    (a, b)
}
