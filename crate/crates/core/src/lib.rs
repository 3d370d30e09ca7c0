//! Normalization of Perso-Arabic text and the tooling used to measure its
//! effect on n-gram language models.
//!
//! The normalization side is a stack of rewrite layers:
//!
//! * `nfc` – canonical composition and mark reordering restricted to the
//!   Arabic blocks ([`rewrite::canonical_normalize`]);
//! * `visual_common` – language-independent folds that never change how a
//!   word looks (presentation forms, waw + damma);
//! * `visual_lang` – per-language visually invariant rewrites, split by the
//!   position of the match inside the word;
//! * `reading_lang` – per-language rewrites that may change the appearance of
//!   a word to match the local orthography.
//!
//! The evaluation side covers corpus filtering and diffing ([`corpus`]),
//! modified Kneser-Ney models ([`lm`]), significance tests ([`stats`]) and the
//! k-fold driver that ties them together ([`experiment`]).

pub mod corpus;
pub mod error;
pub mod experiment;
pub mod grammar;
pub mod lm;
pub mod rewrite;
pub mod stats;
pub mod unicode_data;

pub use error::{Error, Result};
pub use grammar::{Grammar, Language, Mode};
