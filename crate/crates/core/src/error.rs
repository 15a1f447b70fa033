use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("n must be at least 1")]
    ZeroN,

    #[error("nested-sum evaluators need beta >= 2, got {0}")]
    BetaTooSmall(usize),

    #[error("n = {n} exceeds the enumeration ceiling {ceiling}")]
    EnumerationCeiling { n: usize, ceiling: usize },

    #[error("naive evaluation of A_{n}^{beta} visits more than {ceiling} tuples")]
    NaiveTooLarge { n: usize, beta: usize, ceiling: u64 },

    #[error("invalid range {lo}..={hi}")]
    InvalidRange { lo: usize, hi: usize },
}

pub type Result<T> = std::result::Result<T, PartitionError>;
