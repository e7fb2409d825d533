use thiserror::Error;

/// Errors raised by the library.
///
/// The CLI maps `Schema`/`Parse` to exit code 2 and `Resource` to exit code 3.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("schema error: {0}")]
    Schema(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("internal consistency error: {0}")]
    Consistency(String),
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("axiom violated: {0}")]
    Axiom(String),
}

pub type Result<T> = std::result::Result<T, Error>;
