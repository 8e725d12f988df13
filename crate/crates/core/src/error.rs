use thiserror::Error;

/// Errors raised by the algebra kernel, the analyses and the document layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },
    #[error("zero denominator at column {column}")]
    ZeroDenominator { column: usize },
    #[error("invalid variable list: {0}")]
    InvalidVariables(String),
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("arity mismatch: expected {expected} coordinates, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("matrix is not rectangular")]
    NotRectangular,
    #[error("operator is not row-homogeneous")]
    NotHomogeneous,
    #[error("containment violated: {0}")]
    NotContained(String),
    #[error("division by zero polynomial")]
    ZeroPolynomial,
    #[error("{0}")]
    NotDivisible(String),
    #[error("A*S is not identically zero")]
    NotAComplex,
    #[error("exponent search exceeded cap {0}")]
    ExponentCap(u32),
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("invalid document: {0}")]
    Document(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
