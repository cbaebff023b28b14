use thiserror::Error;

/// Errors raised by the covariance-matrix, channel and steering routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The steering party's block cannot be inverted.
    #[error("singular block: {0}")]
    SingularBlock(String),

    /// A determinant or eigenvalue left the domain where the formula is defined.
    #[error("numerical degeneracy: {0}")]
    NumericalDegeneracy(String),

    /// A bracketing search found no sign change.
    #[error("not found: {0}")]
    NotFound(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidArgument(msg.into()))
}
