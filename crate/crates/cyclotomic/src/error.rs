//! Errors for cyclotomic arithmetic.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CycError {
    #[error("cyclotomic level {0} exceeds the supported bound {1}")]
    LevelCap(u64, u64),
    #[error("cyclotomic level must be ≥ 1")]
    ZeroLevel,
    #[error("level {level} is not divisible by {needed} as required here")]
    BadLevel { level: u64, needed: u64 },
    #[error("expected an eighth root of unity, found a different value")]
    NotMu8,
    #[error("{0}")]
    Base(#[from] base_field::BaseError),
    #[error("{0}")]
    Invalid(String),
}

impl CycError {
    pub fn invalid(msg: impl Into<String>) -> CycError {
        CycError::Invalid(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, CycError>;
