use thiserror::Error;

/// Errors raised by the combinatorial and algebraic operations of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("composition parts must be positive, got {0:?}")]
    InvalidComposition(Vec<usize>),

    #[error("invalid descent set {set:?} for weight {n}")]
    InvalidDescentSet { set: Vec<usize>, n: usize },

    #[error("{0} is undefined on empty compositions")]
    UndefinedOperation(&'static str),

    #[error("split weight {m} out of range for a composition of weight {weight}")]
    OutOfRange { m: usize, weight: usize },

    #[error("degree {requested} exceeds the configured cap of {cap}")]
    ResourceLimit { requested: usize, cap: usize },

    #[error("operation requires a nonempty word")]
    EmptyWord,

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("weight mismatch: {0}")]
    WeightMismatch(String),

    #[error("element is not homogeneous")]
    NotHomogeneous,

    #[error("unsupported target basis: {0}")]
    UnsupportedBasis(String),

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("semantic error: {0}")]
    Semantic(String),
}

pub type Result<T> = std::result::Result<T, Error>;
