use thiserror::Error;

/// Failures raised by ring, polynomial and matrix operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact division had a nonzero remainder.
    #[error("exact division failed: dividend is not a multiple of the divisor")]
    NotDivisible,
    /// A polynomial with zero trailing coefficient was passed where a full one is required.
    #[error("polynomial is not full (its trailing coefficient is zero)")]
    NotFull,
    #[error("zero operand not allowed: {0}")]
    ZeroOperand(&'static str),
    #[error("degree precondition violated: {0}")]
    Degree(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
