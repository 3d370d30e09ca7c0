//! Corpus ingestion, the script filter, tokenization and diff accounting.

mod synthetic;

use std::collections::{BTreeSet, HashMap};
use std::io::Write;

use rayon::prelude::*;

pub use synthetic::{synthetic_corpus, SyntheticConfig};

use crate::error::{Error, Result};
use crate::grammar::{hex, Grammar, Mode};
use crate::unicode_data::is_arabic_block;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CorpusLine {
    pub index: usize,
    pub text: String,
}

/// Decoded input lines.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TextLines {
    pub lines: Vec<String>,
    /// A leading U+FEFF was removed.
    pub had_bom: bool,
}

/// Splits `bytes` on `\n` and validates each line as UTF-8. A final
/// newline does not start a new line. Errors carry 1-based line numbers.
pub fn decode_lines(bytes: &[u8]) -> Result<TextLines> {
    let (bytes, had_bom) = match bytes.strip_prefix(b"\xEF\xBB\xBF") {
        Some(rest) => (rest, true),
        None => (bytes, false),
    };
    let body = bytes.strip_suffix(b"\n").unwrap_or(bytes);
    let mut lines = Vec::new();
    if !bytes.is_empty() {
        for (i, raw) in body.split(|&b| b == b'\n').enumerate() {
            let line = std::str::from_utf8(raw).map_err(|_| Error::Encoding { line: i + 1 })?;
            lines.push(line.to_string());
        }
    }
    Ok(TextLines { lines, had_bom })
}

pub fn to_corpus(lines: impl IntoIterator<Item = String>) -> Vec<CorpusLine> {
    lines
        .into_iter()
        .enumerate()
        .map(|(index, text)| CorpusLine { index, text })
        .collect()
}

/// Keeps a line when at least `beta * l` of its `l` code points are in the
/// Arabic blocks. Every code point counts towards `l`, whitespace included.
pub fn script_filter(line: &str, beta: f64) -> bool {
    let (mut total, mut arabic) = (0usize, 0usize);
    for c in line.chars() {
        total += 1;
        arabic += is_arabic_block(c) as usize;
    }
    // Tolerance absorbs products such as 0.6 * 10 that land just above the
    // integer in binary floating point.
    arabic as f64 >= beta * total as f64 - 1e-9
}

/// Lines passing [`script_filter`], re-indexed from zero.
pub fn filter_corpus(lines: &[CorpusLine], beta: f64) -> Vec<CorpusLine> {
    let kept: Vec<String> = lines
        .par_iter()
        .filter(|l| script_filter(&l.text, beta))
        .map(|l| l.text.clone())
        .collect();
    to_corpus(kept)
}

/// Maximal runs of non-White_Space code points.
pub fn tokenize(line: &str) -> Vec<&str> {
    line.split_whitespace().collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffRecord {
    pub line: usize,
    /// Ordinal of the token within its line.
    pub token: usize,
    pub before: String,
    pub after: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DiffStats {
    pub n_lines: usize,
    pub n_types: usize,
    pub n_lines_changed: usize,
    pub n_types_changed: usize,
    pub ratio_lines: f64,
    pub ratio_types: f64,
}

fn percent(part: usize, whole: usize) -> f64 {
    if whole == 0 {
        0.0
    } else {
        100.0 * part as f64 / whole as f64
    }
}

impl DiffStats {
    pub fn new(n_lines: usize, n_types: usize, n_lines_changed: usize, n_types_changed: usize) -> Self {
        DiffStats {
            n_lines,
            n_types,
            n_lines_changed,
            n_types_changed,
            ratio_lines: percent(n_lines_changed, n_lines),
            ratio_types: percent(n_types_changed, n_types),
        }
    }

    /// The `# stats` block of the diff report.
    pub fn write_block<W: Write + ?Sized>(&self, out: &mut W) -> std::io::Result<()> {
        writeln!(out, "# stats")?;
        writeln!(out, "# N_l\t{}", self.n_lines)?;
        writeln!(out, "# N_w\t{}", self.n_types)?;
        writeln!(out, "# N_l^r\t{}", self.n_lines_changed)?;
        writeln!(out, "# R_l\t{:.2}", self.ratio_lines)?;
        writeln!(out, "# N_w^r\t{}", self.n_types_changed)?;
        writeln!(out, "# R_w\t{:.2}", self.ratio_types)
    }
}

#[derive(Clone, Debug)]
pub struct CorpusDiff {
    pub normalized: Vec<CorpusLine>,
    /// Sorted by line, then token ordinal.
    pub records: Vec<DiffRecord>,
    pub stats: DiffStats,
    /// Indices of lines whose text changed.
    pub changed: BTreeSet<usize>,
}

/// Type and line counts of an unnormalized corpus.
pub fn corpus_stats(lines: &[CorpusLine]) -> (usize, usize) {
    let types: BTreeSet<&str> = lines.iter().flat_map(|l| tokenize(&l.text)).collect();
    (lines.len(), types.len())
}

/// Normalizes every line and records which tokens and lines changed.
pub fn diff_corpus(lines: &[CorpusLine], grammar: &Grammar, mode: Mode) -> CorpusDiff {
    let normalized: Vec<CorpusLine> = lines
        .par_iter()
        .map(|l| CorpusLine {
            index: l.index,
            text: grammar.normalize_str(mode, &l.text),
        })
        .collect();

    // Each distinct token is normalized once.
    let mut types: HashMap<&str, Option<String>> = HashMap::new();
    for line in lines {
        for token in tokenize(&line.text) {
            types.entry(token).or_insert(None);
        }
    }
    let mut entries: Vec<(&str, Option<String>)> = types.into_iter().collect();
    entries.par_iter_mut().for_each(|(token, after)| {
        let out = grammar.normalize_str(mode, token);
        if out != *token {
            *after = Some(out);
        }
    });
    let n_types = entries.len();
    let changed_types: HashMap<&str, String> = entries
        .into_iter()
        .filter_map(|(token, after)| after.map(|a| (token, a)))
        .collect();

    let mut records = Vec::new();
    for line in lines {
        for (ordinal, token) in tokenize(&line.text).into_iter().enumerate() {
            if let Some(after) = changed_types.get(token) {
                records.push(DiffRecord {
                    line: line.index,
                    token: ordinal,
                    before: token.to_string(),
                    after: after.clone(),
                });
            }
        }
    }
    let changed: BTreeSet<usize> = lines
        .iter()
        .zip(&normalized)
        .filter(|(a, b)| a.text != b.text)
        .map(|(a, _)| a.index)
        .collect();
    let stats = DiffStats::new(lines.len(), n_types, changed.len(), changed_types.len());
    CorpusDiff {
        normalized,
        records,
        stats,
        changed,
    }
}

/// Writes the diff TSV followed by the `# stats` block.
pub fn write_diff_report<W: Write + ?Sized>(out: &mut W, diff: &CorpusDiff) -> std::io::Result<()> {
    writeln!(out, "line\ttoken\tbefore_hex\tafter_hex")?;
    for r in &diff.records {
        let before: Vec<char> = r.before.chars().collect();
        let after: Vec<char> = r.after.chars().collect();
        let after_hex = if after.is_empty() { "-".to_string() } else { hex(&after) };
        writeln!(out, "{}\t{}\t{}\t{}", r.line, r.token, hex(&before), after_hex)?;
    }
    diff.stats.write_block(out)
}
