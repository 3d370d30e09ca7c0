//! Interpolated modified Kneser-Ney n-gram models over characters or words.

mod arpa;
mod kn;

use std::fmt;
use std::str::FromStr;

use rustc_hash::FxHashMap;

pub use arpa::{read_arpa, write_arpa, ArpaModel};
pub use kn::{Discounting, NGramModel};

use crate::corpus::tokenize;
use crate::error::{Error, Result};

pub const BOS: &str = "<s>";
pub const EOS: &str = "</s>";
pub const UNK: &str = "<unk>";

pub(crate) const BOS_ID: u32 = 0;
pub(crate) const EOS_ID: u32 = 1;
pub(crate) const UNK_ID: u32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Unit {
    Char,
    Word,
}

impl Unit {
    pub fn as_str(self) -> &'static str {
        match self {
            Unit::Char => "char",
            Unit::Word => "word",
        }
    }

    /// Splits a line into tokens: Unicode scalars (space included) or
    /// whitespace-separated words.
    pub fn split(self, line: &str) -> Vec<&str> {
        match self {
            Unit::Char => line.char_indices().map(|(i, c)| &line[i..i + c.len_utf8()]).collect(),
            Unit::Word => tokenize(line),
        }
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Unit {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "char" => Ok(Unit::Char),
            "word" => Ok(Unit::Word),
            _ => Err(Error::Config(format!("unknown unit `{s}` (expected char or word)"))),
        }
    }
}

/// Token strings and their ids. Ids 0-2 are `<s>`, `</s>` and `<unk>`.
#[derive(Clone, Debug)]
pub struct Vocab {
    ids: FxHashMap<String, u32>,
    strings: Vec<String>,
}

impl Default for Vocab {
    fn default() -> Self {
        let mut v = Vocab {
            ids: FxHashMap::default(),
            strings: Vec::new(),
        };
        for s in [BOS, EOS, UNK] {
            v.intern(s);
        }
        v
    }
}

impl Vocab {
    pub(crate) fn intern(&mut self, token: &str) -> u32 {
        if let Some(&id) = self.ids.get(token) {
            return id;
        }
        let id = self.strings.len() as u32;
        self.ids.insert(token.to_string(), id);
        self.strings.push(token.to_string());
        id
    }

    /// Id of `token`, or the `<unk>` id.
    pub fn id(&self, token: &str) -> u32 {
        self.ids.get(token).copied().unwrap_or(UNK_ID)
    }

    pub fn get(&self, token: &str) -> Option<u32> {
        self.ids.get(token).copied()
    }

    pub fn token(&self, id: u32) -> &str {
        &self.strings[id as usize]
    }

    /// Number of entries, `<s>` included.
    pub fn len(&self) -> usize {
        self.strings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strings.is_empty()
    }

    /// Ids that can be predicted: everything but `<s>`.
    pub fn predictable(&self) -> impl Iterator<Item = u32> {
        1..self.strings.len() as u32
    }
}

/// Scoring interface shared by trained and loaded models.
pub trait LanguageModel {
    fn unit(&self) -> Unit;
    fn order(&self) -> usize;
    fn vocab(&self) -> &Vocab;
    /// log2 P(w | history); `history` holds at most `order - 1` ids and
    /// contains `<s>` only as its first element.
    fn log2_prob(&self, history: &[u32], w: u32) -> f64;

    /// Total log2 probability of one line and the number of predicted tokens
    /// (the line's tokens plus `</s>`).
    fn score_line(&self, line: &str) -> (f64, usize) {
        let mut ids = vec![BOS_ID];
        ids.extend(self.unit().split(line).into_iter().map(|t| self.vocab().id(t)));
        ids.push(EOS_ID);
        let n = self.order();
        let mut total = 0.0;
        for i in 1..ids.len() {
            let start = i.saturating_sub(n - 1);
            total += self.log2_prob(&ids[start..i], ids[i]);
        }
        (total, ids.len() - 1)
    }
}

/// Cross-entropy in bits per token over `lines`, one `</s>` per line
/// included. Empty lines are skipped.
pub fn cross_entropy<M: LanguageModel + ?Sized, S: AsRef<str>>(model: &M, lines: &[S]) -> Result<f64> {
    let mut bits = 0.0;
    let mut count = 0usize;
    for line in lines {
        let line = line.as_ref();
        if model.unit().split(line).is_empty() {
            continue;
        }
        let (log2, n) = model.score_line(line);
        bits -= log2;
        count += n;
    }
    if count == 0 {
        return Err(Error::Precondition("test set has no tokens".into()));
    }
    Ok(bits / count as f64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_split_keeps_spaces() {
        assert_eq!(Unit::Char.split("ab c"), ["a", "b", " ", "c"]);
        assert_eq!(Unit::Word.split(" ab  c "), ["ab", "c"]);
        assert_eq!(Unit::Char.split("کی"), ["ک", "ی"]);
    }

    #[test]
    fn reserved_ids() {
        let v = Vocab::default();
        assert_eq!(v.id(BOS), BOS_ID);
        assert_eq!(v.id(EOS), EOS_ID);
        assert_eq!(v.id("zzz"), UNK_ID);
        assert_eq!(v.predictable().collect::<Vec<_>>(), [1, 2]);
    }
}
