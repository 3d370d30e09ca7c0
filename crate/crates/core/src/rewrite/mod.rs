//! Positional string rewriting.
//!
//! A [`RuleLayer`] holds four buckets of rules, one per [`PositionClass`],
//! applied in a fixed order. Each bucket is one left-to-right longest-match
//! pass over every word; replacement text is not rescanned in the same pass.

mod nfc;
mod segment;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

pub use nfc::canonical_normalize;
pub use segment::{segment_words, Segment, SegmentKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PositionClass {
    PositionIndependent,
    NonFinal,
    WordFinal,
    Isolated,
}

impl PositionClass {
    pub const ALL: [PositionClass; 4] = [
        PositionClass::PositionIndependent,
        PositionClass::NonFinal,
        PositionClass::WordFinal,
        PositionClass::Isolated,
    ];

    /// Order in which the sub-layers of a layer are applied.
    pub const APPLICATION_ORDER: [PositionClass; 4] = [
        PositionClass::Isolated,
        PositionClass::WordFinal,
        PositionClass::NonFinal,
        PositionClass::PositionIndependent,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PositionClass::PositionIndependent => "position_independent",
            PositionClass::NonFinal => "non_final",
            PositionClass::WordFinal => "word_final",
            PositionClass::Isolated => "isolated",
        }
    }

    /// Whether a match at `start..start + len` in a word of `word_len`
    /// code points satisfies this class.
    #[inline]
    pub fn admits(self, start: usize, len: usize, word_len: usize) -> bool {
        let end = start + len;
        match self {
            PositionClass::PositionIndependent => true,
            PositionClass::NonFinal => end < word_len,
            PositionClass::WordFinal => end == word_len && start > 0,
            PositionClass::Isolated => start == 0 && end == word_len,
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for PositionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PositionClass {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PositionClass::ALL
            .into_iter()
            .find(|p| p.as_str() == s)
            .ok_or_else(|| format!("unknown position `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LayerKind {
    Nfc,
    VisualCommon,
    VisualLang,
    ReadingLang,
}

impl LayerKind {
    pub fn as_str(self) -> &'static str {
        match self {
            LayerKind::Nfc => "nfc",
            LayerKind::VisualCommon => "visual_common",
            LayerKind::VisualLang => "visual_lang",
            LayerKind::ReadingLang => "reading_lang",
        }
    }

    /// Visual layers may only hold rules that change their input.
    pub fn is_visual(self) -> bool {
        matches!(self, LayerKind::VisualCommon | LayerKind::VisualLang)
    }
}

impl fmt::Display for LayerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for LayerKind {
    type Err = String;

    /// Parses the layer names allowed in rule files. `nfc` is implicit and
    /// never appears there.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "visual_common" => Ok(LayerKind::VisualCommon),
            "visual_lang" => Ok(LayerKind::VisualLang),
            "reading_lang" => Ok(LayerKind::ReadingLang),
            _ => Err(format!("unknown layer `{s}`")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub layer: LayerKind,
    pub position: PositionClass,
    pub input: Vec<char>,
    pub output: Vec<char>,
}

/// Why a rule could not be added to a layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RuleRejection {
    EmptyInput,
    NoChange,
    WrongLayer { expected: LayerKind, found: LayerKind },
    Duplicate,
}

impl fmt::Display for RuleRejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleRejection::EmptyInput => f.write_str("rule input is empty"),
            RuleRejection::NoChange => f.write_str("visual rule does not change its input"),
            RuleRejection::WrongLayer { expected, found } => {
                write!(f, "rule for layer {found} added to layer {expected}")
            }
            RuleRejection::Duplicate => f.write_str("duplicate rule input"),
        }
    }
}

#[derive(Clone, Debug, Default)]
struct Bucket {
    rules: HashMap<Vec<char>, Vec<char>>,
    first: HashSet<char>,
    max_len: usize,
}

impl Bucket {
    fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Longest rule matching `word[start..]` that `position` admits.
    fn longest_match(&self, word: &[char], start: usize, position: PositionClass) -> Option<(usize, &[char])> {
        if !self.first.contains(&word[start]) {
            return None;
        }
        let longest = self.max_len.min(word.len() - start);
        (1..=longest).rev().find_map(|len| {
            if !position.admits(start, len, word.len()) {
                return None;
            }
            self.rules
                .get(&word[start..start + len])
                .map(|out| (len, out.as_slice()))
        })
    }
}

#[derive(Clone, Debug)]
pub struct RuleLayer {
    kind: LayerKind,
    buckets: [Bucket; 4],
    rules: Vec<RewriteRule>,
}

impl RuleLayer {
    pub fn new(kind: LayerKind) -> Self {
        RuleLayer {
            kind,
            buckets: Default::default(),
            rules: Vec::new(),
        }
    }

    pub fn kind(&self) -> LayerKind {
        self.kind
    }

    /// Rules in insertion order.
    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn push(&mut self, rule: RewriteRule) -> Result<(), RuleRejection> {
        if rule.layer != self.kind {
            return Err(RuleRejection::WrongLayer {
                expected: self.kind,
                found: rule.layer,
            });
        }
        if rule.input.is_empty() {
            return Err(RuleRejection::EmptyInput);
        }
        if rule.layer.is_visual() && rule.input == rule.output {
            return Err(RuleRejection::NoChange);
        }
        let bucket = &mut self.buckets[rule.position.slot()];
        if bucket.rules.contains_key(&rule.input) {
            return Err(RuleRejection::Duplicate);
        }
        bucket.first.insert(rule.input[0]);
        bucket.max_len = bucket.max_len.max(rule.input.len());
        bucket.rules.insert(rule.input.clone(), rule.output.clone());
        self.rules.push(rule);
        Ok(())
    }

    fn apply_bucket(&self, text: &[char], position: PositionClass) -> Option<Vec<char>> {
        let bucket = &self.buckets[position.slot()];
        if bucket.is_empty() {
            return None;
        }
        let mut out = Vec::with_capacity(text.len());
        for seg in segment_words(text) {
            let word = &text[seg.span];
            if seg.kind == SegmentKind::Separator {
                out.extend_from_slice(word);
                continue;
            }
            let mut i = 0;
            while i < word.len() {
                match bucket.longest_match(word, i, position) {
                    Some((len, replacement)) => {
                        out.extend_from_slice(replacement);
                        i += len;
                    }
                    None => {
                        out.push(word[i]);
                        i += 1;
                    }
                }
            }
        }
        Some(out)
    }
}

/// Applies one layer. The `Nfc` layer is canonical normalization; rule
/// layers run their sub-layers in [`PositionClass::APPLICATION_ORDER`],
/// re-segmenting between passes.
pub fn apply_layer(text: &[char], layer: &RuleLayer) -> Vec<char> {
    if layer.kind == LayerKind::Nfc {
        return canonical_normalize(text);
    }
    let mut current: Option<Vec<char>> = None;
    for position in PositionClass::APPLICATION_ORDER {
        let input = current.as_deref().unwrap_or(text);
        if let Some(next) = layer.apply_bucket(input, position) {
            current = Some(next);
        }
    }
    current.unwrap_or_else(|| text.to_vec())
}

/// Applies each layer once, in order.
pub fn apply_pipeline(text: &[char], layers: &[&RuleLayer]) -> Vec<char> {
    let mut current = text.to_vec();
    for layer in layers {
        current = apply_layer(&current, layer);
    }
    current
}
