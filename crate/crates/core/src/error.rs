use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a formal context needs at least one {0}")]
    EmptyUniverse(&'static str),

    #[error("duplicate {kind} label `{label}`")]
    DuplicateLabel { kind: &'static str, label: String },

    #[error("incidence row {row} has {found} entries, expected {expected}")]
    ShapeMismatch {
        row: usize,
        found: usize,
        expected: usize,
    },

    #[error("unknown {kind} `{label}`")]
    UnknownLabel { kind: &'static str, label: String },

    #[error("refusing to enumerate 2^{count} attribute subsets (limit is {limit} attributes)")]
    TooManyAttributes { count: usize, limit: usize },

    #[error("phase 1 would leave no {0}")]
    Degenerate(&'static str),

    #[error("context is not clarified: `{0}` and `{1}` have the same extent")]
    NotClarified(String, String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
