use std::ops::Range;

use crate::unicode_data::is_arabic_block;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SegmentKind {
    Word,
    Separator,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Segment {
    pub span: Range<usize>,
    pub kind: SegmentKind,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Class {
    Arabic,
    Space,
    Other,
}

fn class(c: char) -> Class {
    if is_arabic_block(c) {
        Class::Arabic
    } else if c.is_whitespace() {
        Class::Space
    } else {
        Class::Other
    }
}

/// Splits `text` into words (maximal runs of Arabic-block code points) and
/// separators. Separators are further split into whitespace and
/// non-whitespace runs. Spans are contiguous and cover the input.
pub fn segment_words(text: &[char]) -> Vec<Segment> {
    let mut segments = Vec::new();
    let mut start = 0;
    while start < text.len() {
        let cls = class(text[start]);
        let mut end = start + 1;
        while end < text.len() && class(text[end]) == cls {
            end += 1;
        }
        let kind = if cls == Class::Arabic {
            SegmentKind::Word
        } else {
            SegmentKind::Separator
        };
        segments.push(Segment { span: start..end, kind });
        start = end;
    }
    segments
}
