use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("weight table is not normalized: {0}")]
    Normalization(String),
    #[error("index {index} out of range for length {len}")]
    Index { index: usize, len: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("malformed shape: {0}")]
    Shape(String),
    #[error("range error: {0}")]
    Range(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),
    #[error("matrix contains an infinite entry")]
    InfiniteEntry,
    #[error("input too large: {0}")]
    Size(String),
    #[error("pieces do not fit: {0}")]
    Fit(String),
    #[error("threshold exceeds ⌊Δ/2⌋ − torsion ({0})")]
    Torsion(String),
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(char),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
