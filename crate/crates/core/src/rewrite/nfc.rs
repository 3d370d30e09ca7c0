use crate::unicode_data::{canonical_pair, combining_class, compose, is_arabic_block};

/// NFC restricted to the bundled Arabic-block data.
///
/// Runs the three standard steps: full canonical decomposition, canonical
/// reordering (stable sort of every maximal run of non-zero combining
/// classes) and canonical composition with the usual blocking rule. Code
/// points outside the bundled data act as starters and pass through.
pub fn canonical_normalize(text: &[char]) -> Vec<char> {
    if !text.iter().copied().any(is_arabic_block) {
        return text.to_vec();
    }
    let mut buf = Vec::with_capacity(text.len() + 4);
    for &c in text {
        decompose_into(c, &mut buf);
    }
    reorder(&mut buf);
    compose_in_place(buf)
}

fn decompose_into(c: char, out: &mut Vec<char>) {
    match canonical_pair(c) {
        Some((base, mark)) => {
            decompose_into(base, out);
            decompose_into(mark, out);
        }
        None => out.push(c),
    }
}

fn reorder(buf: &mut [char]) {
    let mut i = 0;
    while i < buf.len() {
        if combining_class(buf[i]) == 0 {
            i += 1;
            continue;
        }
        let start = i;
        while i < buf.len() && combining_class(buf[i]) != 0 {
            i += 1;
        }
        buf[start..i].sort_by_key(|&c| combining_class(c));
    }
}

fn compose_in_place(buf: Vec<char>) -> Vec<char> {
    let mut out: Vec<char> = Vec::with_capacity(buf.len());
    let mut starter: Option<usize> = None;
    // Class of the last character appended after the current starter, if any.
    let mut last_class: Option<u8> = None;
    for c in buf {
        let class = combining_class(c);
        if let Some(si) = starter {
            let blocked = match last_class {
                None => false,
                Some(prev) => prev == 0 || prev >= class,
            };
            if !blocked {
                if let Some(composite) = compose(out[si], c) {
                    out[si] = composite;
                    continue;
                }
            }
        }
        if class == 0 {
            starter = Some(out.len());
            last_class = None;
        } else {
            last_class = Some(class);
        }
        out.push(c);
    }
    out
}
