use thiserror::Error;

/// Errors raised by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input: dimension mismatch, negative exponent,
    /// nonpositive direction and the like.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    /// The Newton polyhedron does not meet every coordinate axis, so the
    /// requested quantity (covolume, residual mass, ...) is undefined.
    #[error("not primary: {0}")]
    NotPrimary(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
