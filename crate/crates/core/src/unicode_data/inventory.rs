use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use super::is_arabic_block;
use crate::error::{Error, Result};

/// Bundled letter inventories: code point, name, then one `1`/`0` column per
/// language in [`Language::INVENTORIED`] order.
pub const INVENTORY_TSV: &str = include_str!("../../data/inventories.tsv");

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Language {
    Azb,
    Ckb,
    Ks,
    Ms,
    Pnb,
    Sd,
    Ug,
    Ur,
    /// Arabic reference grammar. It has no bundled inventory.
    Ar,
}

impl Language {
    pub const INVENTORIED: [Language; 8] = [
        Language::Azb,
        Language::Ckb,
        Language::Ks,
        Language::Ms,
        Language::Pnb,
        Language::Sd,
        Language::Ug,
        Language::Ur,
    ];

    pub const ALL: [Language; 9] = [
        Language::Azb,
        Language::Ckb,
        Language::Ks,
        Language::Ms,
        Language::Pnb,
        Language::Sd,
        Language::Ug,
        Language::Ur,
        Language::Ar,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Language::Azb => "azb",
            Language::Ckb => "ckb",
            Language::Ks => "ks",
            Language::Ms => "ms",
            Language::Pnb => "pnb",
            Language::Sd => "sd",
            Language::Ug => "ug",
            Language::Ur => "ur",
            Language::Ar => "ar",
        }
    }

    /// Script-filter threshold used for the Wikipedia replication runs.
    pub fn default_beta(self) -> f64 {
        match self {
            Language::Ks => 0.6,
            Language::Ckb => 0.8,
            Language::Ms => 0.0,
            Language::Pnb => 0.8,
            Language::Sd => 0.8,
            Language::Azb => 0.8,
            Language::Ug => 0.1,
            Language::Ur => 0.9,
            Language::Ar => 0.8,
        }
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Language {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Language::ALL
            .into_iter()
            .find(|l| l.tag() == s)
            .ok_or_else(|| Error::UnknownLanguage(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LetterInventory {
    pub language: Language,
    pub members: BTreeSet<char>,
}

impl LetterInventory {
    pub fn contains(&self, c: char) -> bool {
        self.members.contains(&c)
    }
}

/// Parses the inventory TSV. Duplicate rows are accepted and collapse into a
/// single member.
pub fn parse_inventories(text: &str) -> Result<Vec<LetterInventory>> {
    let parse_err = |line: usize, column: usize, message: String| Error::Parse {
        source_name: "inventories.tsv".into(),
        line,
        column,
        message,
    };
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, 1, "empty file".into()))?;
    let expected: Vec<&str> = ["codepoint", "name"]
        .into_iter()
        .chain(Language::INVENTORIED.iter().map(|l| l.tag()))
        .collect();
    if header.split('\t').collect::<Vec<_>>() != expected {
        return Err(parse_err(1, 1, format!("expected header `{}`", expected.join("\\t"))));
    }

    let mut members: Vec<BTreeSet<char>> = vec![BTreeSet::new(); Language::INVENTORIED.len()];
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        if cols.len() != expected.len() {
            return Err(parse_err(
                lineno,
                1,
                format!("expected {} columns, found {}", expected.len(), cols.len()),
            ));
        }
        let c = u32::from_str_radix(cols[0], 16)
            .ok()
            .filter(|_| cols[0].chars().all(|ch| ch.is_ascii_digit() || ch.is_ascii_uppercase()))
            .and_then(char::from_u32)
            .ok_or_else(|| parse_err(lineno, 1, format!("bad code point `{}`", cols[0])))?;
        if !is_arabic_block(c) {
            return Err(parse_err(
                lineno,
                1,
                format!("U+{:04X} is outside the Arabic blocks", c as u32),
            ));
        }
        for (i, flag) in cols[2..].iter().enumerate() {
            match *flag {
                "1" => {
                    members[i].insert(c);
                }
                "0" => {}
                other => {
                    let column = cols[..2 + i].iter().map(|s| s.chars().count() + 1).sum::<usize>() + 1;
                    return Err(parse_err(lineno, column, format!("expected 1 or 0, found `{other}`")));
                }
            }
        }
    }
    Ok(Language::INVENTORIED
        .into_iter()
        .zip(members)
        .map(|(language, members)| LetterInventory { language, members })
        .collect())
}

fn bundled() -> &'static [LetterInventory] {
    static CELL: OnceLock<Vec<LetterInventory>> = OnceLock::new();
    CELL.get_or_init(|| parse_inventories(INVENTORY_TSV).expect("bundled inventory parses"))
}

pub fn inventory(language: Language) -> Result<&'static LetterInventory> {
    bundled()
        .iter()
        .find(|inv| inv.language == language)
        .ok_or_else(|| Error::NoInventory(language.tag().to_string()))
}
