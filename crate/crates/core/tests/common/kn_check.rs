use perso_norm::lm::{cross_entropy, Discounting, NGramModel, Unit};
use perso_norm::Error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::kn as oracle;

pub const FIXED: [f64; 3] = [0.5, 1.0, 1.5];

pub fn lines(seqs: &[Vec<&str>]) -> Vec<String> {
    seqs.iter().map(|s| s.join(" ")).collect()
}

pub fn random_corpus(rng: &mut ChaCha8Rng) -> Vec<Vec<&'static str>> {
    const SYMBOLS: [&str; 4] = ["a", "b", "c", "d"];
    let len = rng.random_range(1..=30);
    let alphabet = rng.random_range(1..=4);
    let weights: Vec<f64> = (0..alphabet).map(|_| rng.random::<f64>() + 0.05).collect();
    let total: f64 = weights.iter().sum();
    let tokens: Vec<&str> = (0..len)
        .map(|_| {
            let mut x = rng.random::<f64>() * total;
            for (i, w) in weights.iter().enumerate() {
                if x < *w {
                    return SYMBOLS[i];
                }
                x -= w;
            }
            SYMBOLS[alphabet - 1]
        })
        .collect();
    let mut cuts: Vec<usize> = (1..len).filter(|_| rng.random_bool(0.1)).collect();
    cuts.push(len);
    let mut seqs = Vec::new();
    let mut start = 0;
    for c in cuts {
        seqs.push(tokens[start..c].to_vec());
        start = c;
    }
    seqs
}

/// Every history the model can be asked about: `<s>` only in front.
pub fn probe_histories(vocab: &[String], order: usize) -> Vec<Vec<String>> {
    let mut symbols: Vec<String> = vocab.to_vec();
    symbols.push("zz".into());
    let mut out = vec![vec![]];
    let mut frontier: Vec<Vec<String>> = vec![vec![]];
    for _ in 1..order {
        let mut next = Vec::new();
        for h in &frontier {
            for s in &symbols {
                let mut g = vec![s.clone()];
                g.extend(h.iter().cloned());
                next.push(g);
            }
            let mut g = vec!["<s>".to_string()];
            g.extend(h.iter().cloned());
            out.push(g);
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

pub fn compare_with_oracle(cases: usize, seed: u64) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut probes = 0;
    let mut estimable = 0;
    for _ in 0..cases {
        let seqs = random_corpus(&mut rng);
        let text = lines(&seqs);
        for order in [2, 3] {
            for discounting in [Discounting::Fixed(FIXED), Discounting::Estimated] {
                let fixed = match discounting {
                    Discounting::Fixed(d) => Some(d),
                    _ => None,
                };
                let reference = oracle::train(&seqs, order, fixed);
                let model = NGramModel::train(&text, Unit::Word, order, discounting);
                let (reference, model) = match (reference, model) {
                    (Ok(r), Ok(m)) => (r, m),
                    (Err(k), Err(Error::DegenerateCounts { order: got, .. })) => {
                        assert_eq!(k, got);
                        continue;
                    }
                    (r, m) => panic!("{seqs:?} n={order}: oracle {:?} vs model {:?}", r.err(), m.err()),
                };
                if fixed.is_none() {
                    estimable += 1;
                }
                for h in probe_histories(&reference.vocab, order) {
                    let hs: Vec<&str> = h.iter().map(String::as_str).collect();
                    let mut sum = 0.0;
                    for w in &reference.vocab {
                        let want = reference.p(w, &hs);
                        let got = model.prob_str(&hs, w);
                        assert!(
                            (got - want).abs() < 1e-9,
                            "{seqs:?} n={order} P({w}|{hs:?}) {got} vs {want}"
                        );
                        sum += got;
                        probes += 1;
                    }
                    assert!(
                        (sum - 1.0).abs() < 1e-6,
                        "{seqs:?} n={order} history {hs:?} sums to {sum}"
                    );
                }
                let test = random_corpus(&mut rng);
                let h_model = cross_entropy(&model, &lines(&test)).unwrap();
                let h_oracle = reference.cross_entropy(&test);
                assert!((h_model - h_oracle).abs() < 1e-9, "{h_model} vs {h_oracle}");
            }
        }
    }
    (probes, estimable)
}
