use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("singular matrix")]
    Singular,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("zero right-hand side in monomial equation {0}")]
    ZeroRhs(usize),
    #[error("algebra is not a member of the family: {0}")]
    NotInFamily(String),
    #[error("inconsistent exponents: {0}")]
    InconsistentExponents(String),
    #[error("not representable in Q(i): {0}")]
    NotRepresentable(String),
}

pub type Result<T> = std::result::Result<T, Error>;
