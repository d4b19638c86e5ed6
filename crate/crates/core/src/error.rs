use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("quantum integer of negative argument {0}")]
    NegativeArgument(i64),
    #[error("not divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial involves variables other than s: {0}")]
    NotUnivariate(String),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("cell ({row},{col}) is not in the diagram")]
    CellOutside { row: usize, col: usize },
    #[error("cell ({row},{col}) is not an extreme cell")]
    NotExtreme { row: usize, col: usize },
    #[error("index {index} is outside 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("{what} needs {size} strands/cells, above the guard of {limit}")]
    GuardExceeded {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid braid word: {0}")]
    InvalidBraid(String),
    #[error("embedding {m} strands at offset {offset} does not fit in {n}")]
    EmbedRange { m: usize, offset: usize, n: usize },
    #[error("unexpected dependence on x: {0}")]
    UnexpectedX(String),
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
