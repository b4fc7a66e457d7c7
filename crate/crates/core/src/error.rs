use thiserror::Error;

/// Errors raised by invalid input. Internal inconsistencies panic instead.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition {0:?}: {1}")]
    InvalidPartition(Vec<i64>, &'static str),
    #[error("size mismatch: expected {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("painting uses symbol outside {{•, s, r}}")]
    NotTypeA,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("malformed coordinate {0:?}: {1}")]
    MalformedCoordinate(String, &'static str),
    #[error("arity mismatch: group rank {rank}, got {got} coordinates")]
    Arity { rank: usize, got: usize },
    #[error("{0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
