use thiserror::Error;

/// Errors produced by algebra construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("parity vector must be even (|alpha| = {weight} is odd)")]
    OddParityVector { weight: usize },

    #[error("ordered index set is invalid: {0}")]
    BadIndexSet(String),

    #[error("element does not belong to this algebra: {0}")]
    ConfigMismatch(String),

    #[error("invalid cyclotomic polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("malformed partition: {0}")]
    BadPartition(String),

    #[error("malformed multipartition: {0}")]
    BadMultipartition(String),

    #[error("{0} is not a member of the required indexing set: {1}")]
    NotInIndexingSet(String, String),

    #[error("no odd skew cycle exists when l = {l} and |A| = {a} are both odd")]
    NoOddSkewCycle { l: usize, a: usize },

    #[error("graded image requested at degree {requested} below filtration degree {actual}")]
    GradedDegreeTooLow { requested: usize, actual: usize },

    #[error("ambient dimension {dim} exceeds the guard {guard}; refusing to run")]
    DimensionGuard { dim: usize, guard: usize },

    #[error("cannot mix elements of different algebras: {0}")]
    CrossAlgebra(String),

    #[error("serialization error: {0}")]
    Serialization(String),

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;
