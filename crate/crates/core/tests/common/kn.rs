//! Brute-force interpolated modified Kneser-Ney, computed straight from the
//! definitions by scanning the padded corpus. Slow and only meant for tiny
//! inputs.

use std::collections::{BTreeSet, HashMap};

pub const BOS: &str = "<s>";
pub const EOS: &str = "</s>";
pub const UNK: &str = "<unk>";

type Gram = Vec<String>;

pub struct Oracle {
    pub order: usize,
    pub vocab: Vec<String>,
    adjusted: HashMap<Gram, f64>,
    pub discounts: Vec<[f64; 3]>,
}

/// `Err(order)` when estimated discounts are degenerate at `order`.
pub fn train(seqs: &[Vec<&str>], order: usize, fixed: Option<[f64; 3]>) -> Result<Oracle, usize> {
    let padded: Vec<Vec<String>> = seqs
        .iter()
        .map(|s| {
            let mut p = vec![BOS.to_string()];
            p.extend(s.iter().map(|t| t.to_string()));
            p.push(EOS.to_string());
            p
        })
        .collect();
    let mut raw: HashMap<Gram, f64> = HashMap::new();
    for p in &padded {
        for k in 1..=order {
            for w in p.windows(k) {
                *raw.entry(w.to_vec()).or_default() += 1.0;
            }
        }
    }
    let mut vocab: BTreeSet<String> = seqs.iter().flatten().map(|t| t.to_string()).collect();
    vocab.insert(EOS.into());
    vocab.insert(UNK.into());

    let mut adjusted = HashMap::new();
    for (g, &c) in &raw {
        if g.len() == 1 && g[0] == BOS {
            continue;
        }
        let a = if g.len() == order || g[0] == BOS {
            c
        } else {
            let lefts: BTreeSet<&String> = raw
                .keys()
                .filter(|x| x.len() == g.len() + 1 && x[1..] == g[..])
                .map(|x| &x[0])
                .collect();
            lefts.len() as f64
        };
        adjusted.insert(g.clone(), a);
    }

    let mut discounts = Vec::new();
    for k in 1..=order {
        if let Some(d) = fixed {
            discounts.push(d);
            continue;
        }
        let mut t = [0.0f64; 5];
        for (g, &a) in &adjusted {
            if g.len() == k && a <= 4.0 {
                t[a as usize] += 1.0;
            }
        }
        let (t1, t2, t3, t4) = (t[1], t[2], t[3], t[4]);
        if t1 == 0.0 || t2 == 0.0 || t3 == 0.0 {
            return Err(k);
        }
        let y = t1 / (t1 + 2.0 * t2);
        let d = [
            1.0 - 2.0 * y * t2 / t1,
            2.0 - 3.0 * y * t3 / t2,
            3.0 - 4.0 * y * t4 / t3,
        ];
        for (j, &x) in d.iter().enumerate() {
            if !(x > 0.0 && x < (j + 1) as f64) {
                return Err(k);
            }
        }
        discounts.push(d);
    }
    Ok(Oracle {
        order,
        vocab: vocab.into_iter().collect(),
        adjusted,
        discounts,
    })
}

impl Oracle {
    fn a(&self, g: &[String]) -> f64 {
        self.adjusted.get(g).copied().unwrap_or(0.0)
    }

    fn disc(&self, k: usize, c: f64) -> f64 {
        if c == 0.0 {
            0.0
        } else {
            self.discounts[k - 1][(c.min(3.0) as usize) - 1]
        }
    }

    /// P(w | h) by direct summation over the vocabulary.
    pub fn p(&self, w: &str, h: &[&str]) -> f64 {
        let h: Vec<String> = h.iter().map(|s| s.to_string()).collect();
        self.p_owned(w, &h)
    }

    fn p_owned(&self, w: &str, h: &[String]) -> f64 {
        let k = h.len() + 1;
        let extend = |v: &str| {
            let mut g = h.to_vec();
            g.push(v.to_string());
            g
        };
        let mut total = 0.0;
        let mut mass = 0.0;
        for v in &self.vocab {
            let a = self.a(&extend(v));
            total += a;
            mass += self.disc(k, a);
        }
        let a = self.a(&extend(w));
        if k == 1 {
            return (a - self.disc(1, a)).max(0.0) / total + mass / total / self.vocab.len() as f64;
        }
        let lower = self.p_owned(w, &h[1..]);
        if total == 0.0 {
            return lower;
        }
        (a - self.disc(k, a)).max(0.0) / total + mass / total * lower
    }

    /// Bits per token over `seqs`, one `</s>` per sequence.
    pub fn cross_entropy(&self, seqs: &[Vec<&str>]) -> f64 {
        let mut bits = 0.0;
        let mut n = 0usize;
        for s in seqs {
            let mut p: Vec<&str> = vec![BOS];
            p.extend(
                s.iter()
                    .map(|t| if self.vocab.iter().any(|v| v == t) { *t } else { UNK }),
            );
            p.push(EOS);
            for i in 1..p.len() {
                let h = &p[i.saturating_sub(self.order - 1)..i];
                bits -= self.p(p[i], h).log2();
                n += 1;
            }
        }
        bits / n as f64
    }
}
