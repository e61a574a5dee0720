use thiserror::Error;

/// Errors raised by the combinatorics, degree and table routines.
///
/// `Precondition`-style variants describe bad input; `Internal` and
/// `InexactDivision` mean an identity that must hold was violated and point
/// at a bug rather than at the caller.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("node ({row}, {col}) is not in the diagram")]
    NodeOutOfDiagram { row: usize, col: usize },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("n = {n} exceeds the partition scan bound {bound}")]
    ScanBoundExceeded { n: usize, bound: usize },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("non-integral value: {0}")]
    NonIntegral(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("schema violation: {0}")]
    Schema(String),

    #[error("sum of squared degrees is {actual}, group order is {expected}")]
    SumOfSquares { expected: String, actual: String },

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Short machine-readable tag used in structured CLI error records.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidPartition(_) => "invalid_partition",
            Error::NodeOutOfDiagram { .. } => "node_out_of_diagram",
            Error::NotPrime(_) => "not_prime",
            Error::NotPrimePower(_) => "not_prime_power",
            Error::ScanBoundExceeded { .. } => "scan_bound_exceeded",
            Error::OutOfRange(_) => "out_of_range",
            Error::InexactDivision(_) => "inexact_division",
            Error::NonIntegral(_) => "non_integral",
            Error::Unsupported(_) => "unsupported",
            Error::Schema(_) => "schema",
            Error::SumOfSquares { .. } => "sum_of_squares",
            Error::Internal(_) => "internal",
        }
    }

    /// True for errors that indicate a broken invariant rather than bad input.
    pub fn is_invariant_violation(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::InexactDivision(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
