use thiserror::Error;

/// Failure modes shared by every numeric routine in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// An adaptive routine exhausted its budget before meeting its tolerance.
    #[error(
        "no convergence after {evaluations} evaluations \
         (value {value:e}, error estimate {abs_error:e}): {reason}"
    )]
    NonConvergence {
        evaluations: usize,
        value: f64,
        abs_error: f64,
        reason: &'static str,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
