//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by circuit construction, simulation and verification.
#[derive(Debug, Error)]
pub enum Error {
    /// A value or parameter is outside its documented domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A circuit, layout or plan violates a structural invariant.
    #[error("structural error: {0}")]
    Structural(String),

    /// A dense simulation would exceed the configured qubit cap.
    #[error(
        "capacity error: {required} qubits exceed the dense limit of {limit} \
         (set QMUL_DENSE_LIMIT or use hybrid mode)"
    )]
    Capacity { required: usize, limit: usize },

    /// A serialized circuit or report could not be encoded or decoded.
    #[error("serialization error: {0}")]
    Serialization(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}
