use thiserror::Error;

/// Errors raised by complex construction, matrix assembly and the numeric routines.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or inconsistent user input (bad generator sets, unknown ids, non-closed set lists).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A parameter outside the domain of the operation, e.g. `t = 0` for `L_t`.
    #[error("domain error: {0}")]
    Domain(String),

    /// The operation is defined for simplicial complexes only.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// An exact-arithmetic consistency check failed; this indicates a bug, not bad input.
    #[error("exactness violation: {0}")]
    Exactness(String),

    #[error("matrix is singular")]
    Singular,

    /// An entry does not fit into an `f64`; only exact routines can be used.
    #[error("entry {entry} does not fit into a float; use the exact routines instead")]
    FloatOverflow { entry: String },

    #[error("{op} refused for n = {n} (limit {limit})")]
    TooLarge { op: &'static str, n: usize, limit: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// True for errors caused by the caller's data rather than by a failed computation.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::InvalidInput(_)
                | Error::Domain(_)
                | Error::Unsupported(_)
                | Error::Json(_)
                | Error::Io(_)
                | Error::Csv(_)
                | Error::TooLarge { .. }
                | Error::FloatOverflow { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
