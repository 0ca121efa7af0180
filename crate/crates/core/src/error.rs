use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library. Channel noise beyond the decoding radius is
/// not an error; it is reported through [`crate::decoder::DecodeOutcome`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime in [2, 2^61)")]
    NotPrime(u64),

    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("division by the zero polynomial")]
    DivisionByZeroPolynomial,

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid code parameters: {0}")]
    InvalidParams(String),

    #[error("message polynomial has degree {degree}, but the code admits at most t - 1 = {max}")]
    DegreeTooHigh { degree: usize, max: usize },

    #[error("enumeration of {required} candidates exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("precondition violated: {0}")]
    Precondition(String),
}
