use thiserror::Error;

use crate::model::{Solution, Violation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{}", join_violations(.0))]
    Validation(Vec<Violation>),

    /// Item heavier than the bin it must go into.
    #[error("item {index}: weight {weight} exceeds capacity {capacity}")]
    InfeasibleItem {
        index: usize,
        weight: u64,
        capacity: u64,
    },

    /// The exact search gave up. Carries the best solution seen so far, if any.
    #[error("resource limit: {reason}")]
    ResourceLimit {
        reason: String,
        incumbent: Option<Box<Solution>>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: msg.into(),
        }
    }
}

fn join_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
