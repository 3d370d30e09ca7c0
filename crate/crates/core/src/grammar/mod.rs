//! Per-language rule data, the `.rules` loader and grammar validation.

mod parse;

use std::fmt;
use std::path::Path;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use crate::unicode_data::Language;
pub use parse::{parse_rules, SourcedRule};

use crate::error::{Error, Result};
use crate::rewrite::{apply_layer, LayerKind, RuleLayer, RuleRejection};
use crate::unicode_data::{combining_class, inventory, UNICODE_VERSION};

pub const VISUAL_COMMON_RULES: &str = include_str!("../../data/grammars/visual_common.rules");

const GRAMMAR_DATA_VERSION: &str = "1";

/// Bundled rule file for `language`.
pub fn bundled_rules(language: Language) -> &'static str {
    match language {
        Language::Azb => include_str!("../../data/grammars/azb.rules"),
        Language::Ckb => include_str!("../../data/grammars/ckb.rules"),
        Language::Ks => include_str!("../../data/grammars/ks.rules"),
        Language::Ms => include_str!("../../data/grammars/ms.rules"),
        Language::Pnb => include_str!("../../data/grammars/pnb.rules"),
        Language::Sd => include_str!("../../data/grammars/sd.rules"),
        Language::Ug => include_str!("../../data/grammars/ug.rules"),
        Language::Ur => include_str!("../../data/grammars/ur.rules"),
        Language::Ar => include_str!("../../data/grammars/ar.rules"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Nfc,
    Visual,
    Reading,
}

impl Mode {
    pub const ALL: [Mode; 3] = [Mode::Nfc, Mode::Visual, Mode::Reading];

    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Nfc => "nfc",
            Mode::Visual => "visual",
            Mode::Reading => "reading",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Mode::ALL
            .into_iter()
            .find(|m| m.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown mode `{s}` (expected nfc, visual or reading)")))
    }
}

/// A validated set of rewrite layers for one language.
#[derive(Clone, Debug)]
pub struct Grammar {
    language: Language,
    version: String,
    nfc: RuleLayer,
    visual_common: Arc<RuleLayer>,
    visual_lang: RuleLayer,
    reading_lang: RuleLayer,
}

fn bundled_visual_common() -> Arc<RuleLayer> {
    static LAYER: OnceLock<Arc<RuleLayer>> = OnceLock::new();
    LAYER
        .get_or_init(|| {
            let layer = build_visual_common("visual_common.rules", VISUAL_COMMON_RULES)
                .expect("bundled visual_common rules are valid");
            Arc::new(layer)
        })
        .clone()
}

fn build_visual_common(source_name: &str, text: &str) -> Result<RuleLayer> {
    let mut layer = RuleLayer::new(LayerKind::VisualCommon);
    for sourced in parse_rules(source_name, text)? {
        if sourced.rule.layer != LayerKind::VisualCommon {
            return Err(Error::InvalidRule {
                source_name: source_name.to_string(),
                line: sourced.line,
                message: format!("{} rule in the shared visual_common file", sourced.rule.layer),
            });
        }
        push_rule(&mut layer, source_name, sourced)?;
    }
    Ok(layer)
}

fn push_rule(layer: &mut RuleLayer, source_name: &str, sourced: SourcedRule) -> Result<()> {
    let SourcedRule { line, rule } = sourced;
    let layer_name = rule.layer.to_string();
    let position = rule.position.to_string();
    let input = hex(&rule.input);
    layer.push(rule).map_err(|rejection| match rejection {
        RuleRejection::Duplicate => Error::DuplicateRule {
            source_name: source_name.to_string(),
            line,
            layer: layer_name,
            position,
            input,
        },
        other => Error::InvalidRule {
            source_name: source_name.to_string(),
            line,
            message: other.to_string(),
        },
    })
}

/// Space-separated uppercase hex, the notation used by rule files.
pub fn hex(text: &[char]) -> String {
    text.iter()
        .map(|&c| format!("{:04X}", c as u32))
        .collect::<Vec<_>>()
        .join(" ")
}

const YEH: char = '\u{064A}';
const FARSI_YEH: char = '\u{06CC}';

impl Grammar {
    /// The bundled grammar for `language`.
    pub fn bundled(language: Language) -> Result<Grammar> {
        let name = format!("{}.rules", language.tag());
        let mut grammar = Grammar::build(language, &name, bundled_rules(language), bundled_visual_common())?;
        grammar.version = format!("{GRAMMAR_DATA_VERSION}+ucd{UNICODE_VERSION}");
        Ok(grammar)
    }

    /// Builds a grammar from rule text. `visual_common` is `(name, text)` of
    /// a replacement shared file; `None` uses the bundled one.
    pub fn from_sources(
        language: Language,
        source_name: &str,
        text: &str,
        visual_common: Option<(&str, &str)>,
    ) -> Result<Grammar> {
        let common = match visual_common {
            Some((name, text)) => Arc::new(build_visual_common(name, text)?),
            None => bundled_visual_common(),
        };
        Grammar::build(language, source_name, text, common)
    }

    /// Loads `language` from `dir` when it contains `<tag>.rules` and/or
    /// `visual_common.rules`, falling back to bundled data for the rest.
    pub fn from_dir(language: Language, dir: &Path) -> Result<Grammar> {
        let read = |path: &Path| -> Result<Option<String>> {
            match std::fs::read_to_string(path) {
                Ok(text) => Ok(Some(text)),
                Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
                Err(source) => Err(Error::Io {
                    path: path.to_path_buf(),
                    source,
                }),
            }
        };
        let lang_path = dir.join(format!("{}.rules", language.tag()));
        let common_path = dir.join("visual_common.rules");
        let lang_text = read(&lang_path)?;
        let common_text = read(&common_path)?;
        if lang_text.is_none() && common_text.is_none() {
            log::warn!("{}: no rule files for {language}, using bundled grammar", dir.display());
            return Grammar::bundled(language);
        }
        let lang_name = lang_path.display().to_string();
        let common_name = common_path.display().to_string();
        let (name, text) = match &lang_text {
            Some(text) => (lang_name.as_str(), text.as_str()),
            None => ("<bundled>", bundled_rules(language)),
        };
        let mut grammar = Grammar::from_sources(
            language,
            name,
            text,
            common_text.as_deref().map(|t| (common_name.as_str(), t)),
        )?;
        grammar.version = format!("custom:{}", dir.display());
        Ok(grammar)
    }

    /// Resolves a language tag and loads it, from `dir` when given.
    pub fn load(tag: &str, dir: Option<&Path>) -> Result<Grammar> {
        let language: Language = tag.parse()?;
        match dir {
            Some(dir) => Grammar::from_dir(language, dir),
            None => Grammar::bundled(language),
        }
    }

    fn build(language: Language, source_name: &str, text: &str, visual_common: Arc<RuleLayer>) -> Result<Grammar> {
        let mut visual_lang = RuleLayer::new(LayerKind::VisualLang);
        let mut reading_lang = RuleLayer::new(LayerKind::ReadingLang);
        let letters = match language {
            Language::Ar => None,
            other => Some(inventory(other)?),
        };
        let mut yeh_lines: [Option<usize>; 2] = [None, None];
        for sourced in parse_rules(source_name, text)? {
            let line = sourced.line;
            let rule = &sourced.rule;
            let target = match rule.layer {
                LayerKind::VisualLang => &mut visual_lang,
                LayerKind::ReadingLang => &mut reading_lang,
                other => {
                    return Err(Error::InvalidRule {
                        source_name: source_name.to_string(),
                        line,
                        message: format!("{other} rules belong in the shared visual_common file"),
                    })
                }
            };
            if let Some(letters) = letters {
                if let Some(&bad) = rule
                    .output
                    .iter()
                    .find(|&&c| !(letters.contains(c) || combining_class(c) > 0 || c.is_whitespace()))
                {
                    return Err(Error::InventoryViolation {
                        source_name: source_name.to_string(),
                        line,
                        language: language.tag().to_string(),
                        codepoint: bad as u32,
                    });
                }
            }
            match (rule.input.as_slice(), rule.output.as_slice()) {
                ([YEH], [FARSI_YEH]) => yeh_lines[0] = Some(line),
                ([FARSI_YEH], [YEH]) if rule.layer == LayerKind::ReadingLang => yeh_lines[1] = Some(line),
                _ => {}
            }
            if yeh_lines.iter().all(Option::is_some) {
                return Err(Error::InvalidRule {
                    source_name: source_name.to_string(),
                    line,
                    message: "grammar maps yeh and farsi yeh in both directions".into(),
                });
            }
            push_rule(target, source_name, sourced)?;
        }
        Ok(Grammar {
            language,
            version: String::new(),
            nfc: RuleLayer::new(LayerKind::Nfc),
            visual_common,
            visual_lang,
            reading_lang,
        })
    }

    pub fn language(&self) -> Language {
        self.language
    }

    pub fn version(&self) -> &str {
        &self.version
    }

    pub fn visual_common(&self) -> &RuleLayer {
        &self.visual_common
    }

    pub fn visual_lang(&self) -> &RuleLayer {
        &self.visual_lang
    }

    pub fn reading_lang(&self) -> &RuleLayer {
        &self.reading_lang
    }

    /// The layer stack for `mode`. Canonical normalization is re-run after
    /// every rule layer so each stage hands NFC text to the next and the
    /// result is a fixed point.
    pub fn layers(&self, mode: Mode) -> Vec<&RuleLayer> {
        let nfc = &self.nfc;
        let mut layers = vec![nfc];
        if mode == Mode::Nfc {
            return layers;
        }
        layers.extend([&*self.visual_common, nfc, &self.visual_lang, nfc]);
        if mode == Mode::Reading {
            layers.extend([&self.reading_lang, nfc]);
        }
        layers
    }

    pub fn normalize(&self, mode: Mode, text: &[char]) -> Vec<char> {
        let mut current = text.to_vec();
        for layer in self.layers(mode) {
            if layer.kind() != LayerKind::Nfc && layer.is_empty() {
                continue;
            }
            current = apply_layer(&current, layer);
        }
        current
    }

    pub fn normalize_str(&self, mode: Mode, text: &str) -> String {
        let chars: Vec<char> = text.chars().collect();
        self.normalize(mode, &chars).into_iter().collect()
    }

    /// Checks `normalize(normalize(s)) == normalize(s)` in every mode over
    /// `cases` random strings built from the grammar's own alphabet.
    pub fn check_idempotence(&self, cases: usize, seed: u64) -> Result<()> {
        let alphabet = self.fuzz_alphabet();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..cases {
            let len = rng.random_range(0..=8);
            let sample: Vec<char> = (0..len)
                .map(|_| *alphabet.choose(&mut rng).expect("non-empty alphabet"))
                .collect();
            for mode in Mode::ALL {
                let once = self.normalize(mode, &sample);
                let twice = self.normalize(mode, &once);
                if once != twice {
                    return Err(Error::Invariant(format!(
                        "{} {mode} normalization is not idempotent on [{}]: [{}] then [{}]",
                        self.language,
                        hex(&sample),
                        hex(&once),
                        hex(&twice)
                    )));
                }
            }
        }
        Ok(())
    }

    fn fuzz_alphabet(&self) -> Vec<char> {
        let mut set = std::collections::BTreeSet::new();
        for layer in [&self.visual_lang, &self.reading_lang] {
            for rule in layer.rules() {
                set.extend(rule.input.iter().chain(&rule.output));
            }
        }
        if let Ok(letters) = inventory(self.language) {
            set.extend(letters.members.iter());
        }
        // Waw-damma and the hamza/madda composition inputs.
        set.extend([
            '\u{0648}', '\u{064F}', '\u{0619}', '\u{0627}', '\u{0653}', '\u{0654}', '\u{0655}',
        ]);
        set.extend(['\u{064A}', '\u{06CC}', '\u{0649}', '\u{06C1}', '\u{06D2}', '\u{06D5}']);
        set.extend(['\u{0650}', '\u{0651}', '\u{0670}', '\u{0640}']);
        set.extend(['\u{FB52}', '\u{FEFB}', '\u{FEED}', '\u{FBEF}', '\u{FE70}', '\u{FDF2}']);
        set.extend([' ', 'a']);
        set.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cps(v: &[u32]) -> Vec<char> {
        v.iter().map(|&c| char::from_u32(c).unwrap()).collect()
    }

    #[test]
    fn all_bundled_grammars_load() {
        for language in Language::ALL {
            let g = Grammar::bundled(language).unwrap();
            assert_eq!(g.language(), language);
            assert!(g.version().contains("ucd14.0.0"));
        }
    }

    #[test]
    fn urdu_has_four_visual_rules() {
        let g = Grammar::bundled(Language::Ur).unwrap();
        assert_eq!(g.visual_lang().rules().len(), 4);
        assert_eq!(g.normalize(Mode::Visual, &cps(&[0x0647])), cps(&[0x06C1]));
    }

    #[test]
    fn mode_parsing() {
        assert_eq!("reading".parse::<Mode>().unwrap(), Mode::Reading);
        assert!("fold".parse::<Mode>().is_err());
    }

    #[test]
    fn rejects_visual_common_in_language_file() {
        let err = Grammar::from_sources(
            Language::Ur,
            "x",
            "visual_common\tposition_independent\t0648 064F\t06C7\n",
            None,
        )
        .unwrap_err();
        assert!(matches!(err, Error::InvalidRule { line: 1, .. }), "{err}");
    }

    #[test]
    fn rejects_both_yeh_directions() {
        let text = "reading_lang\tposition_independent\t064A\t06CC\nreading_lang\tnon_final\t06CC\t064A\n";
        let err = Grammar::from_sources(Language::Ar, "x", text, None).unwrap_err();
        assert!(matches!(err, Error::InvalidRule { line: 2, .. }), "{err}");
    }

    #[test]
    fn layer_stack_shapes() {
        let g = Grammar::bundled(Language::Sd).unwrap();
        assert_eq!(g.layers(Mode::Nfc).len(), 1);
        assert_eq!(g.layers(Mode::Visual).len(), 5);
        assert_eq!(g.layers(Mode::Reading).len(), 7);
    }

    #[test]
    fn hex_notation() {
        assert_eq!(hex(&cps(&[0x0648, 0x1F600])), "0648 1F600");
        assert_eq!(hex(&[]), "");
    }
}
