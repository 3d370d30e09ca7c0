//! ARPA text format for trained models.
//!
//! Entries hold log10 of the interpolated probability and, for histories,
//! log10 of the interpolation weight, so standard ARPA backoff scoring
//! reproduces the trained model. Tokens that contain whitespace or collide
//! with reserved names are escaped as `<U+XXXX>`.

use std::io::{BufRead, Write};

use rustc_hash::FxHashMap;

use super::kn::NGramModel;
use super::{LanguageModel, Unit, Vocab, BOS, BOS_ID, EOS, UNK};
use crate::error::{Error, Result};

fn is_reserved(token: &str) -> bool {
    token == BOS || token == EOS || token == UNK
}

fn escape(token: &str) -> String {
    let reserved = is_reserved(token);
    let mut out = String::with_capacity(token.len());
    for (i, c) in token.char_indices() {
        let angle = c == '<' && (reserved || token[i..].starts_with("<U+"));
        if c.is_whitespace() || angle {
            out.push_str(&format!("<U+{:04X}>", c as u32));
        } else {
            out.push(c);
        }
    }
    out
}

fn unescape(field: &str) -> Option<String> {
    let mut out = String::with_capacity(field.len());
    let mut rest = field;
    while let Some(pos) = rest.find("<U+") {
        out.push_str(&rest[..pos]);
        let tail = &rest[pos + 3..];
        let end = tail.find('>')?;
        let value = u32::from_str_radix(&tail[..end], 16).ok()?;
        out.push(char::from_u32(value)?);
        rest = &tail[end + 1..];
    }
    out.push_str(rest);
    Some(out)
}

fn token_label(vocab: &Vocab, id: u32) -> String {
    let token = vocab.token(id);
    if id < 3 {
        token.to_string()
    } else {
        escape(token)
    }
}

/// Writes `model` in ARPA format, with a `# unit=` comment before `\data\`.
pub fn write_arpa<W: Write + ?Sized>(model: &NGramModel, out: &mut W) -> std::io::Result<()> {
    let vocab = model.vocab();
    let order = model.order();
    writeln!(out, "# unit={}", model.unit())?;
    for (k, d) in model.discounts().iter().enumerate() {
        writeln!(out, "# discounts order={} D1={} D2={} D3+={}", k + 1, d[0], d[1], d[2])?;
    }
    writeln!(out)?;

    let mut sections: Vec<Vec<(String, f64, Option<f64>)>> = Vec::with_capacity(order);
    for k in 1..=order {
        let mut rows = Vec::new();
        for id in model.grams(k) {
            let tokens = model.gram_tokens(k, id);
            let (history, w) = tokens.split_at(k - 1);
            let log_p = if w[0] == BOS_ID {
                -99.0
            } else {
                model.prob(history, w[0]).log10()
            };
            let backoff = if k < order {
                model.backoff(k, id).map(f64::log10)
            } else {
                None
            };
            let label = tokens
                .iter()
                .map(|&t| token_label(vocab, t))
                .collect::<Vec<_>>()
                .join(" ");
            rows.push((label, log_p, backoff));
        }
        if k == 1 && !rows.iter().any(|r| r.0 == UNK) {
            rows.push((UNK.to_string(), model.prob(&[], super::UNK_ID).log10(), None));
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        sections.push(rows);
    }

    writeln!(out, "\\data\\")?;
    for (k, rows) in sections.iter().enumerate() {
        writeln!(out, "ngram {}={}", k + 1, rows.len())?;
    }
    for (k, rows) in sections.iter().enumerate() {
        writeln!(out)?;
        writeln!(out, "\\{}-grams:", k + 1)?;
        for (label, log_p, backoff) in rows {
            match backoff {
                Some(b) => writeln!(out, "{log_p}\t{label}\t{b}")?,
                None => writeln!(out, "{log_p}\t{label}")?,
            }
        }
    }
    writeln!(out)?;
    writeln!(out, "\\end\\")
}

/// A model read back from ARPA text, scored with standard backoff.
#[derive(Clone, Debug)]
pub struct ArpaModel {
    unit: Unit,
    order: usize,
    vocab: Vocab,
    /// `entries[k - 1]` maps k-gram ids to (log10 p, log10 backoff).
    entries: Vec<FxHashMap<Vec<u32>, (f64, f64)>>,
}

impl ArpaModel {
    pub fn log10_prob(&self, history: &[u32], w: u32) -> f64 {
        let mut gram: Vec<u32> = history.to_vec();
        gram.push(w);
        let mut backoff = 0.0;
        for start in 0..gram.len() {
            let k = gram.len() - start;
            if let Some(&(log_p, _)) = self.entries[k - 1].get(&gram[start..]) {
                return backoff + log_p;
            }
            if k >= 2 {
                if let Some(&(_, bo)) = self.entries[k - 2].get(&gram[start..gram.len() - 1]) {
                    backoff += bo;
                }
            }
        }
        // Unreachable for well-formed files, which list <unk>.
        f64::NEG_INFINITY
    }
}

impl LanguageModel for ArpaModel {
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
        self.log10_prob(history, w) * std::f64::consts::LOG2_10
    }
}

/// Reads a file written by [`write_arpa`] (or any ARPA file with a
/// `# unit=` comment; word units are assumed otherwise).
pub fn read_arpa<R: BufRead>(input: R) -> Result<ArpaModel> {
    let bad = |line: usize, message: String| Error::Parse {
        source_name: "arpa".into(),
        line,
        column: 1,
        message,
    };
    let mut unit = Unit::Word;
    let mut counts: Vec<usize> = Vec::new();
    let mut vocab = Vocab::default();
    let mut entries: Vec<FxHashMap<Vec<u32>, (f64, f64)>> = Vec::new();
    let mut section: Option<usize> = None;
    let mut in_data = false;
    let mut ended = false;
    for (i, line) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = line.map_err(|_| Error::Encoding { line: lineno })?;
        let line = line.trim_end_matches('\r');
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(u) = comment.trim().strip_prefix("unit=") {
                unit = u.trim().parse()?;
            }
            continue;
        }
        if line == "\\data\\" {
            in_data = true;
            continue;
        }
        if line == "\\end\\" {
            ended = true;
            break;
        }
        if let Some(count) = line.strip_prefix("ngram ") {
            let (k, n) = count
                .split_once('=')
                .ok_or_else(|| bad(lineno, "malformed ngram count".into()))?;
            let k: usize = k
                .trim()
                .parse()
                .map_err(|_| bad(lineno, "malformed ngram order".into()))?;
            let n: usize = n
                .trim()
                .parse()
                .map_err(|_| bad(lineno, "malformed ngram count".into()))?;
            if k != counts.len() + 1 {
                return Err(bad(lineno, format!("ngram orders out of sequence at {k}")));
            }
            counts.push(n);
            entries.push(FxHashMap::default());
            continue;
        }
        if let Some(header) = line.strip_prefix('\\').and_then(|s| s.strip_suffix("-grams:")) {
            let k: usize = header
                .parse()
                .map_err(|_| bad(lineno, format!("bad section header `{line}`")))?;
            if k == 0 || k > counts.len() {
                return Err(bad(lineno, format!("section {k} not declared in \\data\\")));
            }
            section = Some(k);
            continue;
        }
        let k = match (in_data, section) {
            (true, Some(k)) => k,
            _ => return Err(bad(lineno, "entry outside an n-gram section".into())),
        };
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() < 2 || fields.len() > 3 {
            return Err(bad(lineno, "expected `log10p<TAB>tokens[<TAB>backoff]`".into()));
        }
        let log_p: f64 = fields[0].parse().map_err(|_| bad(lineno, "bad probability".into()))?;
        let backoff: f64 = match fields.get(2) {
            Some(b) => b.parse().map_err(|_| bad(lineno, "bad backoff".into()))?,
            None => 0.0,
        };
        let mut ids = Vec::with_capacity(k);
        for label in fields[1].split(' ') {
            let id = if is_reserved(label) {
                vocab.intern(label)
            } else {
                let token = unescape(label).ok_or_else(|| bad(lineno, format!("bad escape in `{label}`")))?;
                vocab.intern(&token)
            };
            ids.push(id);
        }
        if ids.len() != k {
            return Err(bad(lineno, format!("expected {k} tokens, found {}", ids.len())));
        }
        entries[k - 1].insert(ids, (log_p, backoff));
    }
    if !ended {
        return Err(bad(0, "missing \\end\\".into()));
    }
    for (k, (map, &n)) in entries.iter().zip(&counts).enumerate() {
        if map.len() != n {
            return Err(bad(
                0,
                format!("{}-gram section has {} entries, header says {n}", k + 1, map.len()),
            ));
        }
    }
    if counts.is_empty() {
        return Err(bad(0, "no n-gram sections".into()));
    }
    Ok(ArpaModel {
        unit,
        order: counts.len(),
        vocab,
        entries,
    })
}
