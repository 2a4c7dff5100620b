use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at the evaluation point")]
    Pole,
    #[error("size mismatch: expected n = {expected}, found n = {found}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("index {index} out of range for n = {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("generators {i} and {j} are not adjacent")]
    NotAdjacent { i: usize, j: usize },
    #[error("invalid set partition: {0}")]
    InvalidPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unsupported size n = {n}: {reason}")]
    Unsupported { n: usize, reason: String },
    #[error("trace functional does not exist at n = {0}")]
    NoTrace(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
