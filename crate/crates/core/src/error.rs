use thiserror::Error;

use crate::extension::Violation;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the library.
///
/// `Parameter`, `Admissibility` and `Index` are caller errors. `Consistency`
/// means a mathematical identity that must hold did not, which always points
/// at a bug rather than bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parameter error: {0}")]
    Parameter(String),
    #[error("inadmissible extension: {}", join_violations(.0))]
    Admissibility(Vec<Violation>),
    #[error("index error: {0}")]
    Index(String),
    #[error("internal consistency failure: {0}")]
    Consistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub fn consistency(msg: impl Into<String>) -> Self {
        Error::Consistency(msg.into())
    }

    /// True for errors caused by the caller's input.
    pub fn is_user_error(&self) -> bool {
        !matches!(self, Error::Consistency(_))
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
