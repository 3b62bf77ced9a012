use thiserror::Error;

/// Failure modes shared by every module.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input.
    #[error("bad input: {0}")]
    BadInput(String),
    /// A configured size, iteration or time cap was hit.
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    /// The operation's mathematical hypothesis does not hold for the input.
    #[error("hypothesis not met: {0}")]
    Hypothesis(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BadInput(_) => 2,
            Error::ResourceLimit(_) => 3,
            Error::Hypothesis(_) => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
