use rustc_hash::FxHashMap;

use super::{LanguageModel, Unit, Vocab, BOS_ID, EOS_ID};
use crate::error::{Error, Result};

/// Marks the empty gram, the `rest` of every unigram.
const EMPTY: u32 = u32::MAX;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Discounting {
    /// Estimated per order from counts of counts.
    Estimated,
    /// The same `(D1, D2, D3+)` at every order.
    Fixed([f64; 3]),
    /// Estimated, with the given discounts (logged) for orders whose counts
    /// of counts are degenerate.
    Fallback([f64; 3]),
}

impl Discounting {
    /// The fallback KenLM uses for `--discount_fallback`.
    pub const KENLM_FALLBACK: [f64; 3] = [0.5, 1.0, 1.5];
}

/// `estimated`, `fallback`, `fallback:D1,D2,D3` or `fixed:D1,D2,D3`.
impl std::str::FromStr for Discounting {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let values = |list: &str| -> Result<[f64; 3]> {
            let d: Vec<f64> = list
                .split(',')
                .map(|v| {
                    v.trim()
                        .parse::<f64>()
                        .map_err(|_| Error::Config(format!("bad discount `{v}`")))
                })
                .collect::<Result<_>>()?;
            match d[..] {
                [d1, d2, d3] => Ok([d1, d2, d3]),
                _ => Err(Error::Config(format!("expected three discounts, found `{list}`"))),
            }
        };
        match s.trim() {
            "estimated" => Ok(Discounting::Estimated),
            "fallback" => Ok(Discounting::Fallback(Discounting::KENLM_FALLBACK)),
            other => match other.split_once(':') {
                Some(("fixed", list)) => Ok(Discounting::Fixed(values(list)?)),
                Some(("fallback", list)) => Ok(Discounting::Fallback(values(list)?)),
                _ => Err(Error::Config(format!("unknown discounting `{other}`"))),
            },
        }
    }
}

#[derive(Clone, Copy, Debug)]
struct Gram {
    first: u32,
    /// The gram without its first token.
    rest: u32,
    /// The gram without its last token.
    prefix: u32,
    raw: u32,
    adjusted: u32,
}

#[derive(Clone, Copy, Debug, Default)]
struct ContextStats {
    total: u64,
    /// Continuations with adjusted count 1, 2 and 3 or more.
    n: [u32; 3],
}

/// Grams of one order, keyed by `(first token, id of rest)`.
#[derive(Clone, Debug, Default)]
struct Level {
    index: FxHashMap<u64, u32>,
    grams: Vec<Gram>,
}

#[inline]
fn key(first: u32, rest: u32) -> u64 {
    ((first as u64) << 32) | rest as u64
}

impl Level {
    #[inline]
    fn get(&self, first: u32, rest: u32) -> Option<u32> {
        self.index.get(&key(first, rest)).copied()
    }

    fn intern(&mut self, first: u32, rest: u32) -> u32 {
        let next = self.grams.len() as u32;
        let id = *self.index.entry(key(first, rest)).or_insert(next);
        if id == next {
            self.grams.push(Gram {
                first,
                rest,
                prefix: EMPTY,
                raw: 0,
                adjusted: 0,
            });
        }
        id
    }
}

/// A trained interpolated modified Kneser-Ney model.
#[derive(Clone, Debug)]
pub struct NGramModel {
    unit: Unit,
    order: usize,
    vocab: Vocab,
    /// `levels[k - 1]` holds the k-grams.
    levels: Vec<Level>,
    /// `contexts[k]` describes order-k grams as histories; `contexts[0]` is
    /// the empty history.
    contexts: Vec<Vec<ContextStats>>,
    /// `discounts[k - 1]` is `(D1, D2, D3+)` for order k.
    discounts: Vec<[f64; 3]>,
}

impl NGramModel {
    /// Trains on `lines`, split according to `unit`. Lines without tokens
    /// are skipped.
    pub fn train<S: AsRef<str>>(lines: &[S], unit: Unit, order: usize, discounting: Discounting) -> Result<Self> {
        let mut vocab = Vocab::default();
        let sequences: Vec<Vec<u32>> = lines
            .iter()
            .map(|l| {
                unit.split(l.as_ref())
                    .into_iter()
                    .map(|t| vocab.intern(t))
                    .collect::<Vec<u32>>()
            })
            .filter(|s| !s.is_empty())
            .collect();
        NGramModel::from_ids(&sequences, vocab, unit, order, discounting)
    }

    /// Trains on pre-split token sequences.
    pub fn train_tokens<S: AsRef<str>>(
        sequences: &[Vec<S>],
        unit: Unit,
        order: usize,
        discounting: Discounting,
    ) -> Result<Self> {
        let mut vocab = Vocab::default();
        let ids: Vec<Vec<u32>> = sequences
            .iter()
            .map(|s| s.iter().map(|t| vocab.intern(t.as_ref())).collect::<Vec<u32>>())
            .filter(|s| !s.is_empty())
            .collect();
        NGramModel::from_ids(&ids, vocab, unit, order, discounting)
    }

    fn from_ids(
        sequences: &[Vec<u32>],
        vocab: Vocab,
        unit: Unit,
        order: usize,
        discounting: Discounting,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::Precondition("model order must be at least 1".into()));
        }
        if sequences.is_empty() {
            return Err(Error::Precondition("training corpus has no tokens".into()));
        }
        let mut levels: Vec<Level> = vec![Level::default(); order];
        let mut padded = Vec::new();
        for seq in sequences {
            padded.clear();
            padded.push(BOS_ID);
            padded.extend_from_slice(seq);
            padded.push(EOS_ID);
            for end in 1..=padded.len() {
                let mut rest = EMPTY;
                for k in 1..=order.min(end) {
                    let id = levels[k - 1].intern(padded[end - k], rest);
                    levels[k - 1].grams[id as usize].raw += 1;
                    rest = id;
                }
            }
        }

        // Prefix links: the prefix of (x, rest) is (x, prefix(rest)).
        for k in 2..=order {
            let (lower, upper) = levels.split_at_mut(k - 1);
            let lower_level = &lower[k - 2];
            for g in upper[0].grams.iter_mut() {
                let rest_prefix = if k == 2 {
                    EMPTY
                } else {
                    lower_level.grams[g.rest as usize].prefix
                };
                g.prefix = lower_level
                    .get(g.first, rest_prefix)
                    .expect("prefix of a seen gram is seen");
            }
        }

        // Adjusted counts: raw for the top order and for grams opening with
        // <s>, otherwise the number of distinct left extensions.
        for k in 1..=order {
            if k < order {
                let extensions: Vec<u32> = levels[k].grams.iter().map(|g| g.rest).collect();
                for rest in extensions {
                    levels[k - 1].grams[rest as usize].adjusted += 1;
                }
            }
            for g in levels[k - 1].grams.iter_mut() {
                if k == order || g.first == BOS_ID {
                    g.adjusted = g.raw;
                }
            }
        }
        let bos_unigram = levels[0].get(BOS_ID, EMPTY).expect("every sequence starts with <s>");

        let discounts = (1..=order)
            .map(|k| match discounting {
                Discounting::Fixed(d) => Ok(d),
                Discounting::Estimated | Discounting::Fallback(_) => {
                    let skip = if k == 1 { Some(bos_unigram) } else { None };
                    match (estimate_discounts(k, &levels[k - 1], skip), discounting) {
                        (Err(e), Discounting::Fallback(d)) => {
                            log::warn!("{e}; falling back to discounts {d:?}");
                            Ok(d)
                        }
                        (result, _) => result,
                    }
                }
            })
            .collect::<Result<Vec<_>>>()?;

        let mut contexts: Vec<Vec<ContextStats>> = (0..order)
            .map(|k| vec![ContextStats::default(); if k == 0 { 1 } else { levels[k - 1].grams.len() }])
            .collect();
        for k in 1..=order {
            for (id, g) in levels[k - 1].grams.iter().enumerate() {
                if k == 1 && id as u32 == bos_unigram {
                    continue;
                }
                let ctx = if k == 1 { 0 } else { g.prefix as usize };
                let stats = &mut contexts[k - 1][ctx];
                stats.total += g.adjusted as u64;
                if g.adjusted > 0 {
                    stats.n[(g.adjusted.min(3) - 1) as usize] += 1;
                }
            }
        }

        Ok(NGramModel {
            unit,
            order,
            vocab,
            levels,
            contexts,
            discounts,
        })
    }

    pub fn discounts(&self) -> &[[f64; 3]] {
        &self.discounts
    }

    /// Number of distinct k-grams seen in training, `<s>` unigram included.
    pub fn gram_count(&self, k: usize) -> usize {
        self.levels[k - 1].grams.len()
    }

    #[inline]
    fn discount(&self, k: usize, count: u32) -> f64 {
        match count {
            0 => 0.0,
            c => self.discounts[k - 1][(c.min(3) - 1) as usize],
        }
    }

    fn gamma(&self, k: usize, stats: &ContextStats) -> f64 {
        let d = &self.discounts[k - 1];
        (d[0] * stats.n[0] as f64 + d[1] * stats.n[1] as f64 + d[2] * stats.n[2] as f64) / stats.total as f64
    }

    /// Size of the predictable vocabulary (everything but `<s>`).
    pub fn vocab_size(&self) -> usize {
        self.vocab.len() - 1
    }

    /// P(w | history). `history` is truncated to the model order; it may
    /// start with `<s>`.
    pub fn prob(&self, history: &[u32], w: u32) -> f64 {
        let m = history.len().min(self.order - 1);
        let history = &history[history.len() - m..];

        let root = &self.contexts[0][0];
        let uni = self.levels[0].get(w, EMPTY);
        let a = uni.map_or(0, |id| self.levels[0].grams[id as usize].adjusted);
        let a = if w == BOS_ID { 0 } else { a };
        let mut p = (a as f64 - self.discount(1, a)).max(0.0) / root.total as f64
            + self.gamma(1, root) / self.vocab_size() as f64;

        let mut hist_id = EMPTY;
        let mut gram_id = uni;
        for k in 2..=m + 1 {
            let first = history[m - (k - 1)];
            hist_id = match self.levels[k - 2].get(first, if k == 2 { EMPTY } else { hist_id }) {
                Some(id) => id,
                None => break,
            };
            gram_id = gram_id.and_then(|rest| self.levels[k - 1].get(first, rest));
            let stats = &self.contexts[k - 1][hist_id as usize];
            if stats.total == 0 {
                continue;
            }
            let a = gram_id.map_or(0, |id| self.levels[k - 1].grams[id as usize].adjusted);
            p = (a as f64 - self.discount(k, a)).max(0.0) / stats.total as f64 + self.gamma(k, stats) * p;
        }
        p
    }

    /// [`NGramModel::prob`] on token strings; `<s>` maps to the start symbol.
    pub fn prob_str(&self, history: &[&str], w: &str) -> f64 {
        let h: Vec<u32> = history.iter().map(|t| self.vocab.id(t)).collect();
        self.prob(&h, self.vocab.id(w))
    }

    /// Every distinct history seen in training (as context of at least one
    /// gram), as id sequences. Used for normalization checks and export.
    pub fn histories(&self) -> Vec<Vec<u32>> {
        let mut out = vec![Vec::new()];
        for k in 1..self.order {
            for (id, stats) in self.contexts[k].iter().enumerate() {
                if stats.total > 0 {
                    out.push(self.gram_tokens(k, id as u32));
                }
            }
        }
        out
    }

    pub(crate) fn gram_tokens(&self, k: usize, mut id: u32) -> Vec<u32> {
        let mut tokens = Vec::with_capacity(k);
        for level in (0..k).rev() {
            let g = &self.levels[level].grams[id as usize];
            tokens.push(g.first);
            id = g.rest;
        }
        tokens
    }

    /// Ids of all k-grams, for export.
    pub(crate) fn grams(&self, k: usize) -> impl Iterator<Item = u32> + '_ {
        0..self.levels[k - 1].grams.len() as u32
    }

    /// Backoff weight of the history `gram` of order `k`, or `None` when it
    /// never precedes a token.
    pub(crate) fn backoff(&self, k: usize, id: u32) -> Option<f64> {
        let stats = &self.contexts[k][id as usize];
        (stats.total > 0).then(|| self.gamma(k + 1, stats))
    }
}

fn estimate_discounts(k: usize, level: &Level, skip: Option<u32>) -> Result<[f64; 3]> {
    let mut t = [0u64; 4];
    for (id, g) in level.grams.iter().enumerate() {
        if Some(id as u32) == skip {
            continue;
        }
        if (1..=4).contains(&g.adjusted) {
            t[g.adjusted as usize - 1] += 1;
        }
    }
    let degenerate = |statistic: String| Error::DegenerateCounts { order: k, statistic };
    for (j, &tj) in t.iter().take(3).enumerate() {
        if tj == 0 {
            return Err(degenerate(format!("no {k}-grams with adjusted count {}", j + 1)));
        }
    }
    let [t1, t2, t3, t4] = t.map(|x| x as f64);
    let y = t1 / (t1 + 2.0 * t2);
    let d = [
        1.0 - 2.0 * y * t2 / t1,
        2.0 - 3.0 * y * t3 / t2,
        3.0 - 4.0 * y * t4 / t3,
    ];
    for (j, &dj) in d.iter().enumerate() {
        let bound = (j + 1) as f64;
        if !(dj > 0.0 && dj < bound) {
            return Err(degenerate(format!("D{} = {dj} outside (0, {bound})", j + 1)));
        }
    }
    Ok(d)
}

impl LanguageModel for NGramModel {
    fn unit(&self) -> Unit {
        self.unit
    }

    fn order(&self) -> usize {
        self.order
    }

    fn vocab(&self) -> &Vocab {
        &self.vocab
    }

    fn log2_prob(&self, history: &[u32], w: u32) -> f64 {
        self.prob(history, w).log2()
    }
}
