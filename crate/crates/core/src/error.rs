use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("unknown language tag `{0}`")]
    UnknownLanguage(String),

    #[error("no letter inventory is bundled for `{0}`")]
    NoInventory(String),

    #[error("{source_name}:{line}:{column}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        column: usize,
        message: String,
    },

    #[error("{source_name}:{line}: duplicate rule input [{input}] in {layer}/{position}")]
    DuplicateRule {
        source_name: String,
        line: usize,
        layer: String,
        position: String,
        input: String,
    },

    #[error("{source_name}:{line}: {language} rule outputs U+{codepoint:04X}, which is not in its letter inventory")]
    InventoryViolation {
        source_name: String,
        line: usize,
        language: String,
        codepoint: u32,
    },

    #[error("{source_name}:{line}: {message}")]
    InvalidRule {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("order {order}: cannot estimate discounts ({statistic})")]
    DegenerateCounts { order: usize, statistic: String },

    #[error("{0}")]
    Precondition(String),

    #[error("sample lengths differ: {0} vs {1}")]
    LengthMismatch(usize, usize),

    #[error("test statistic undefined: {0}")]
    ZeroVariance(&'static str),

    #[error("cannot draw {required} test lines from {available} lines outside the diff set")]
    InfeasibleSplit { required: usize, available: usize },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("line {line}: input is not valid UTF-8")]
    Encoding { line: usize },

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
