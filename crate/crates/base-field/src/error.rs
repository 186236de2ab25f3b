//! Error type shared by the base-field layer.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BaseError {
    #[error("residue characteristic 2 is not supported (got p = {0})")]
    EvenResidue(u64),
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("zero has no valuation")]
    ZeroValuation,
    #[error("element is not integral at p = {p}: {what}")]
    NotIntegral { p: u64, what: String },
    #[error("operation requires a p-adic place, got the real place")]
    RealPlace,
    #[error("operation requires the real place, got a p-adic place")]
    NotRealPlace,
    #[error("element is zero or not invertible")]
    NotInvertible,
    #[error("malformed rational literal {0:?} (expected \"a\" or \"a/b\")")]
    BadRational(String),
    #[error("polynomial is not irreducible over F_{p}: {what}")]
    NotIrreducible { p: u64, what: String },
    #[error("ramified-stage polynomial is not Eisenstein: {0}")]
    NotEisenstein(String),
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dim(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, BaseError>;

impl BaseError {
    /// Convenience constructor for ad-hoc precondition failures.
    pub fn invalid(msg: impl Into<String>) -> Self {
        BaseError::Invalid(msg.into())
    }
}
