use thiserror::Error;

/// Errors reported by the counting engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition class: n={n}, k={k} (need 0 <= k <= n)")]
    InvalidClass { n: usize, k: usize },

    #[error("closed form requires 1 <= k <= n, got n={n}, k={k}")]
    InvalidArguments { n: usize, k: usize },

    #[error("letter {letter} at position {position} is outside the alphabet [1, {bound}]")]
    LetterOutOfRange {
        letter: u32,
        position: usize,
        bound: u32,
    },

    #[error("cannot parse word {input:?}: {reason}")]
    ParseWord { input: String, reason: String },

    #[error("word is not a restricted growth string: {0}")]
    NotRgs(String),

    #[error("prefix {prefix:?} cannot be extended to a partition of class (n={n}, k={k})")]
    InvalidPrefix {
        prefix: Vec<u32>,
        n: usize,
        k: usize,
    },

    #[error("Stirling table built to n={max_n} cannot answer n={n}")]
    TableTooSmall { n: usize, max_n: usize },

    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },

    #[error("series divisor must have constant term exactly 1")]
    NonUnitConstant,

    #[error("coefficient index {index} exceeds truncation order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
