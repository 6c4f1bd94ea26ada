use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("oracle configuration: {0}")]
    Config(String),

    /// Two independent computations of the same quantity disagreed.
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}
