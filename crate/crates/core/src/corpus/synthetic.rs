//! Deterministic pseudo-Urdu text with injected spelling variants.

use std::collections::HashSet;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grammar::{Grammar, Mode};
use crate::Language;

const YEH: char = '\u{064A}';
const FARSI_YEH: char = '\u{06CC}';
const ALEF_MAKSURA: char = '\u{0649}';
const KAF: char = '\u{0643}';
const KEHEH: char = '\u{06A9}';
const HEH: char = '\u{0647}';
const HEH_GOAL: char = '\u{06C1}';
const REH: char = '\u{0631}';
const RREH: char = '\u{0691}';
const SMALL_HIGH_TAH: char = '\u{0615}';

/// Frequent short words, ranked first in the Zipf distribution.
const FUNCTION_WORDS: &[&str] = &[
    "کے", "میں", "کی", "ہے", "اور", "سے", "کا", "کو", "یہ", "نے", "پر", "ہیں", "کہ", "ایک", "ہ", "بھی", "تھا", "لیے",
    "کیا", "وہ", "گیا", "تھی", "جو", "کر", "ہو", "بڑا", "لڑکی", "کوئی", "ہی",
];

/// Latin-script tokens that turn up in running Urdu text.
const FOREIGN_WORDS: &[&str] = &[
    "BBC",
    "FIFA",
    "Wikipedia",
    "km",
    "pH",
    "Xbox",
    "jazz",
    "quiz",
    "oxygen",
    "NASA",
    "DNA",
    "Jr.",
    "vs",
    "UNESCO",
    "Pvt",
    "Ltd",
    "e.g.",
    "Zoology",
    "MHz",
    "kg",
];

/// Letters used for generated words, with rough relative frequencies.
const LETTERS: &[(char, f64)] = &[
    ('\u{0627}', 60.0),
    ('\u{06CC}', 45.0),
    ('\u{0646}', 35.0),
    ('\u{0631}', 30.0),
    ('\u{06A9}', 25.0),
    ('\u{0648}', 30.0),
    ('\u{0645}', 28.0),
    ('\u{062A}', 24.0),
    ('\u{0628}', 20.0),
    ('\u{0644}', 22.0),
    ('\u{0633}', 18.0),
    ('\u{06C1}', 18.0),
    ('\u{062F}', 15.0),
    ('\u{067E}', 10.0),
    ('\u{0686}', 6.0),
    ('\u{062C}', 8.0),
    ('\u{06AF}', 9.0),
    ('\u{0691}', 5.0),
    ('\u{0679}', 5.0),
    ('\u{0688}', 4.0),
    ('\u{06BA}', 8.0),
    ('\u{06BE}', 7.0),
    ('\u{0639}', 8.0),
    ('\u{0641}', 6.0),
    ('\u{0642}', 6.0),
    ('\u{0634}', 6.0),
    ('\u{0632}', 5.0),
    ('\u{062D}', 6.0),
    ('\u{062E}', 4.0),
    ('\u{0635}', 3.0),
    ('\u{0637}', 3.0),
    ('\u{063A}', 2.0),
    ('\u{0626}', 3.0),
    ('\u{06D2}', 10.0),
    // Rare letters give the character distribution a realistic tail.
    ('\u{062B}', 0.4),
    ('\u{0630}', 0.3),
    ('\u{0636}', 0.2),
    ('\u{0638}', 0.15),
    ('\u{0698}', 0.1),
    ('\u{0624}', 0.08),
    ('\u{0622}', 0.3),
    ('\u{06C3}', 0.05),
];

#[derive(Clone, Copy, Debug)]
pub struct SyntheticConfig {
    pub lines: usize,
    pub vocabulary: usize,
    /// Share of lines that receive spelling variants.
    pub perturbed_fraction: f64,
    /// Per-token chance of a Latin word or a number instead of a word.
    pub foreign_rate: f64,
    pub min_tokens: usize,
    pub max_tokens: usize,
    pub seed: u64,
}

impl Default for SyntheticConfig {
    fn default() -> Self {
        SyntheticConfig {
            lines: 50_000,
            vocabulary: 20_000,
            perturbed_fraction: 0.3,
            foreign_rate: 0.01,
            min_tokens: 5,
            max_tokens: 18,
            seed: 20_210_701,
        }
    }
}

/// Zipf-distributed lines over a generated vocabulary in which every word is
/// already in Urdu reading-normal form. A `perturbed_fraction` of the lines
/// then get non-standard spellings that the Urdu grammar undoes: Arabic yeh
/// for farsi yeh, word-final alef maksura, non-final Arabic kaf, isolated
/// heh for heh goal, and reh plus small high tah for rreh.
pub fn synthetic_corpus(config: &SyntheticConfig) -> Vec<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let vocab = vocabulary(&mut rng, config.vocabulary);
    let zipf: Vec<f64> = (1..=vocab.len()).map(|r| 1.0 / r as f64).collect();
    let pick = WeightedIndex::new(&zipf).expect("non-empty vocabulary");
    let mut lines = Vec::with_capacity(config.lines);
    for _ in 0..config.lines {
        let len = rng.random_range(config.min_tokens..=config.max_tokens);
        let mut tokens: Vec<Vec<char>> = (0..len)
            .map(|_| {
                if rng.random_bool(config.foreign_rate) {
                    foreign_token(&mut rng)
                } else {
                    vocab[pick.sample(&mut rng)].clone()
                }
            })
            .collect();
        if rng.random_bool(config.perturbed_fraction) {
            perturb_line(&mut tokens, &mut rng);
        }
        let mut line: String = tokens
            .iter()
            .map(|t| t.iter().collect::<String>())
            .collect::<Vec<_>>()
            .join(" ");
        line.push_str(" ۔");
        lines.push(line);
    }
    lines
}

fn foreign_token(rng: &mut ChaCha8Rng) -> Vec<char> {
    if rng.random_bool(0.5) {
        return FOREIGN_WORDS.choose(rng).expect("non-empty").chars().collect();
    }
    let n: u32 = rng.random_range(1..=2024);
    let digits = n.to_string();
    if rng.random_bool(0.5) {
        digits.chars().collect()
    } else {
        // Extended Arabic-Indic digits.
        digits
            .chars()
            .map(|d| char::from_u32(0x06F0 + d.to_digit(10).unwrap()).unwrap())
            .collect()
    }
}

fn vocabulary(rng: &mut ChaCha8Rng, size: usize) -> Vec<Vec<char>> {
    let grammar = Grammar::bundled(Language::Ur).expect("bundled Urdu grammar");
    let letter = WeightedIndex::new(LETTERS.iter().map(|&(_, w)| w)).expect("letter weights");
    let mut seen = HashSet::new();
    let mut words = Vec::with_capacity(size);
    for w in FUNCTION_WORDS {
        let chars: Vec<char> = w.chars().collect();
        debug_assert_eq!(grammar.normalize(Mode::Reading, &chars), chars);
        if seen.insert(chars.clone()) {
            words.push(chars);
        }
    }
    while words.len() < size {
        let len = rng.random_range(2..=7);
        let word: Vec<char> = (0..len).map(|_| LETTERS[letter.sample(rng)].0).collect();
        if grammar.normalize(Mode::Reading, &word) == word && seen.insert(word.clone()) {
            words.push(word);
        }
    }
    words
}

/// Applies variant spellings to some tokens, guaranteeing at least one
/// change when any token offers a site for one.
fn perturb_line(tokens: &mut [Vec<char>], rng: &mut ChaCha8Rng) {
    let mut changed = false;
    for token in tokens.iter_mut() {
        if rng.random_bool(0.5) {
            changed |= perturb_token(token, rng);
        }
    }
    if !changed {
        for token in tokens.iter_mut() {
            if perturb_token(token, rng) {
                break;
            }
        }
    }
}

fn perturb_token(token: &mut Vec<char>, rng: &mut ChaCha8Rng) -> bool {
    let before = token.clone();
    let n = token.len();
    if n == 1 && token[0] == HEH_GOAL {
        token[0] = HEH;
        return true;
    }
    // Final farsi yeh: either alef maksura or Arabic yeh.
    let final_variant = if rng.random_bool(0.5) { ALEF_MAKSURA } else { YEH };
    for (i, c) in token.iter_mut().enumerate() {
        match *c {
            FARSI_YEH if i + 1 == n => *c = final_variant,
            FARSI_YEH => *c = YEH,
            KEHEH if i + 1 < n => *c = KAF,
            _ => {}
        }
    }
    if let Some(pos) = token.iter().position(|&c| c == RREH) {
        token.splice(pos..pos + 1, [REH, SMALL_HIGH_TAH]);
    }
    *token != before
}
