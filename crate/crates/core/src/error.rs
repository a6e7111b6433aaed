use thiserror::Error;

/// Errors produced by the solvers, constructions and text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid arguments: {0}")]
    InvalidArguments(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("invalid election: {0}")]
    InvalidElection(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    /// An exact search gave up after exhausting its state budget.
    #[error("resource limit: {what} exceeded budget of {budget} states")]
    ResourceLimit { what: String, budget: usize },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An internal consistency check failed; this signals a solver bug.
    #[error("integrity violation: {0}")]
    Integrity(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
