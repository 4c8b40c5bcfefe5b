//! Error type shared by every module.
//!
//! Two failure classes are distinguished because they map to different
//! process exit codes: invalid caller input (`Domain`) and broken internal
//! invariants (`Internal`, e.g. a root-of-unity sum that fails to collapse
//! to a scalar, or a rational coefficient that should have cleared).

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A precondition on caller-supplied data was violated.
    #[error("domain error: {0}")]
    Domain(String),
    /// An invariant that the library itself guarantees was violated.
    #[error("internal invariant violation: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
