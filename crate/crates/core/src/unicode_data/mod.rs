//! Static Unicode metadata for the Arabic blocks and the per-language letter
//! inventories.
//!
//! Everything here is generated from the Unicode Character Database 14.0.0
//! (see `tools/gen_unicode_tables.py`) so normalization output does not drift
//! with the host's Unicode library.

mod inventory;
#[rustfmt::skip]
mod tables;

pub use inventory::{inventory, parse_inventories, Language, LetterInventory, INVENTORY_TSV};
pub use tables::UNICODE_VERSION;

/// Ranges treated as Perso-Arabic script: Arabic, Arabic Supplement, Arabic
/// Extended-A and the two presentation-form blocks.
pub const ARABIC_RANGES: [(u32, u32); 5] = [
    (0x0600, 0x06FF),
    (0x0750, 0x077F),
    (0x08A0, 0x08FF),
    (0xFB50, 0xFDFF),
    (0xFE70, 0xFEFF),
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodepointRecord {
    pub codepoint: char,
    /// Empty, or exactly `[base, mark]`.
    pub canonical_decomposition: Vec<char>,
    pub combining_class: u8,
    /// Present only for presentation forms.
    pub compat_decomposition: Option<Vec<char>>,
    pub is_arabic_block: bool,
}

#[inline]
pub fn is_arabic_block(c: char) -> bool {
    let c = c as u32;
    ARABIC_RANGES.iter().any(|&(lo, hi)| (lo..=hi).contains(&c))
}

#[inline]
pub fn combining_class(c: char) -> u8 {
    let cp = c as u32;
    if !is_arabic_block(c) {
        return 0;
    }
    match tables::COMBINING_CLASSES.binary_search_by_key(&cp, |&(k, _)| k) {
        Ok(i) => tables::COMBINING_CLASSES[i].1,
        Err(_) => 0,
    }
}

/// Canonical `(base, mark)` pair for a precomposed Arabic letter.
pub fn canonical_pair(c: char) -> Option<(char, char)> {
    let cp = c as u32;
    tables::CANONICAL_PAIRS
        .binary_search_by_key(&cp, |&(k, _, _)| k)
        .ok()
        .map(|i| {
            let (_, base, mark) = tables::CANONICAL_PAIRS[i];
            (to_char(base), to_char(mark))
        })
}

/// Primary composite of `base` and `mark`, if one exists.
pub fn compose(base: char, mark: char) -> Option<char> {
    let (b, m) = (base as u32, mark as u32);
    tables::CANONICAL_PAIRS
        .iter()
        .find(|&&(_, tb, tm)| tb == b && tm == m)
        .map(|&(c, _, _)| to_char(c))
}

pub fn compat_mapping(c: char) -> Option<Vec<char>> {
    let cp = c as u32;
    tables::COMPAT_MAPPINGS
        .binary_search_by_key(&cp, |&(k, _)| k)
        .ok()
        .map(|i| tables::COMPAT_MAPPINGS[i].1.iter().map(|&v| to_char(v)).collect())
}

/// Never fails: code points missing from the bundled data get an empty
/// record with block membership computed from [`ARABIC_RANGES`].
pub fn lookup(c: char) -> CodepointRecord {
    CodepointRecord {
        codepoint: c,
        canonical_decomposition: canonical_pair(c).map(|(b, m)| vec![b, m]).unwrap_or_default(),
        combining_class: combining_class(c),
        compat_decomposition: compat_mapping(c),
        is_arabic_block: is_arabic_block(c),
    }
}

fn to_char(cp: u32) -> char {
    char::from_u32(cp).expect("generated tables hold scalar values")
}

/// Every precomposed Arabic letter with its canonical pair.
pub fn canonical_pairs() -> impl Iterator<Item = (char, char, char)> {
    tables::CANONICAL_PAIRS
        .iter()
        .map(|&(c, b, m)| (to_char(c), to_char(b), to_char(m)))
}
