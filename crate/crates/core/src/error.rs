use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty structure: n must be at least 1")]
    Empty,
    #[error("not a bijection: {0}")]
    NotABijection(String),
    #[error("invalid tree: {0}")]
    InvalidTree(String),
    #[error("cycle detected")]
    CycleDetected,
    #[error("invalid dag: {0}")]
    InvalidDag(String),
    #[error("index out of range: {what} = {value} not in [1, {n}]")]
    OutOfRange {
        what: &'static str,
        value: usize,
        n: usize,
    },
    #[error("invalid interval [{0}, {1}]")]
    InvalidInterval(usize, usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid generator: {0}")]
    InvalidGenerator(String),
    #[error("family {kind} expects a {expected} input")]
    KindMismatch {
        kind: crate::FamilyKind,
        expected: &'static str,
    },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("{0}")]
    Argument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
