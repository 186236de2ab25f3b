//! Error type for lattice-model character computations.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WeilError {
    #[error("{0}")]
    Base(#[from] base_field::BaseError),
    #[error("{0}")]
    Cyc(#[from] cyclotomic::CycError),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, WeilError>;

impl WeilError {
    /// Convenience constructor for ad-hoc precondition failures.
    pub fn invalid(msg: impl Into<String>) -> Self {
        WeilError::Invalid(msg.into())
    }
}
