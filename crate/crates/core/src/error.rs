use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported type: {0}")]
    UnsupportedType(String),
    #[error("scan budget exceeded: {needed} elements needed, budget is {budget}")]
    BudgetExceeded { needed: usize, budget: usize },
    #[error("size bound exceeded: {size} > {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("invalid subsystem basis: {0}")]
    InvalidBasis(String),
    #[error("basis is not linearly independent")]
    LinearlyDependent,
    #[error("Gram matrix is not of finite type")]
    NotFiniteType,
    #[error("element is not an involution")]
    NotAnInvolution,
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid orbit label: {0}")]
    InvalidOrbit(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("lemma violation: {0}")]
    LemmaViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
