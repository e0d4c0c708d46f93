//! Error type shared by all modules.

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("flavor mismatch: {0}")]
    FlavorMismatch(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("symmetrization guard exceeded: {needed} summands, limit {limit}")]
    GuardExceeded { needed: u128, limit: u128 },
    #[error("non-exact division: {0}")]
    NonExact(String),
    #[error("not supported: {0}")]
    Unsupported(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = core::result::Result<T, Error>;
