use thiserror::Error;

/// Errors produced by the library.
///
/// The variants map onto the process exit codes used by the command-line
/// front end: malformed input is `2`, an exhausted search cap is `3`, and a
/// failed internal consistency check is `1`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// A bounded search ran out of budget before it could decide.
    #[error("search cap exceeded: {0}")]
    CapExceeded(String),

    /// An identity that must hold by construction failed to verify.
    #[error("internal check failed: {0}")]
    InvariantViolation(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn cap(msg: impl Into<String>) -> Self {
        Error::CapExceeded(msg.into())
    }

    pub fn violation(msg: impl Into<String>) -> Self {
        Error::InvariantViolation(msg.into())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) | Error::Unsupported(_) => 2,
            Error::CapExceeded(_) => 3,
            Error::InvariantViolation(_) => 1,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
