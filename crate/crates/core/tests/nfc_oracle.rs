//! The library NFC against a reference built from UnicodeData.txt, on
//! every string of up to three code points from the main Arabic block plus
//! space.

mod common;

use common::nfc::load_ucd;
use perso_norm::rewrite::canonical_normalize;
use perso_norm::unicode_data::{canonical_pairs, combining_class};

#[test]
fn bundled_tables_match_unicode_data() {
    let ucd = load_ucd();
    for (&c, &class) in &ucd.ccc {
        assert_eq!(combining_class(c), class, "U+{:04X}", c as u32);
    }
    let mut pairs: Vec<_> = canonical_pairs().collect();
    pairs.sort();
    let mut expected: Vec<_> = ucd.comp.iter().map(|(&(a, b), &c)| (c, a, b)).collect();
    expected.sort();
    assert_eq!(pairs, expected);
}

#[test]
fn exhaustive_up_to_three_code_points() {
    let ucd = load_ucd();
    let mut alphabet: Vec<char> = (0x0600..=0x06FF).filter_map(char::from_u32).collect();
    alphabet.push(' ');
    let mut checked = 0usize;
    let mut buf = Vec::with_capacity(3);
    for len in 0..=3u32 {
        let total = alphabet.len().pow(len);
        for mut n in 0..total {
            buf.clear();
            for _ in 0..len {
                buf.push(alphabet[n % alphabet.len()]);
                n /= alphabet.len();
            }
            let got = canonical_normalize(&buf);
            let want = ucd.nfc(&buf);
            assert_eq!(got, want, "input {buf:?}");
            checked += 1;
        }
    }
    assert_eq!(checked, 1 + 257 + 257 * 257 + 257 * 257 * 257);
}

#[test]
fn oracle_reproduces_documented_examples() {
    let ucd = load_ucd();
    assert_eq!(ucd.nfc(&['\u{0627}', '\u{0653}']), ['\u{0622}']);
    assert_eq!(ucd.nfc(&['\u{0651}', '\u{0650}']), ['\u{0650}', '\u{0651}']);
    assert_eq!(ucd.nfc(&['\u{0627}', '\u{0670}', '\u{0653}']), ['\u{0622}', '\u{0670}']);
}
