use thiserror::Error;

use crate::scoring::ScoringError;
use crate::slp::SlpError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Scoring(#[from] ScoringError),

    #[error(transparent)]
    Slp(#[from] SlpError),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("x out of range: {x} (must be in 1..={max})")]
    XOutOfRange { x: usize, max: usize },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("empty input")]
    EmptyInput,

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Overflow(_) => 3,
            Error::Slp(SlpError::ExpansionGuard { .. }) => 3,
            Error::Slp(SlpError::Invalid(issues))
                if issues
                    .iter()
                    .any(|i| matches!(i, crate::slp::ValidationIssue::ExpansionOverflow { .. })) =>
            {
                3
            }
            _ => 2,
        }
    }
}
