//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by constructors and operations in this crate.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Two values that must share a universe do not.
    #[error("universe mismatch: {0}")]
    UniverseMismatch(String),

    /// An element identifier is not part of the universe in play.
    #[error("unknown element `{0}`")]
    UnknownElement(String),

    /// An attribute name is not part of the information system in play.
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),

    /// A value fails its construction-time validation.
    #[error("invalid {kind}: {reason}")]
    Invalid {
        /// What was being constructed (partition, map, table, ...).
        kind: &'static str,
        /// Why it was rejected.
        reason: String,
    },

    /// An operation would materialize more state than its documented limit.
    #[error("capacity exceeded: {what} ({actual} > limit {limit})")]
    Capacity {
        /// The operation or structure that is bounded.
        what: &'static str,
        /// The documented limit.
        limit: u64,
        /// What the input would require.
        actual: u64,
    },

    /// A precondition on verified structure does not hold (for example an
    /// operator that has not been verified as a rough closure operator).
    #[error("{0}")]
    Domain(String),

    /// An invariant the mathematics guarantees was observed to fail; this
    /// indicates a bug in this crate, not in the input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(kind: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            kind,
            reason: reason.into(),
        }
    }
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
