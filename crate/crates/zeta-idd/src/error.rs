//! Crate-wide error type.

use thiserror::Error;

/// Errors surfaced by library operations.
#[derive(Debug, Error)]
pub enum Error {
    /// Input outside an operation's mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A table or resource is too small (or a guard limit was exceeded).
    #[error("capacity error: {0}")]
    Capacity(String),

    /// Malformed input data, with the 1-based line it was found on.
    #[error("format error at line {line}: {message}")]
    Format { line: usize, message: String },

    /// Structurally well-formed input violating a validity contract.
    #[error("validation error: {0}")]
    Validation(String),

    /// Evaluation point too close to a pole of the target function.
    #[error("pole proximity: z = {re}+{im}i is within {distance:e} of a zero ordinate")]
    PoleProximity { re: f64, im: f64, distance: f64 },

    /// Two inputs that must share a parameter (e.g. truncation height) do not.
    #[error("consistency error: {0}")]
    Consistency(String),

    /// An error from a batch operation, tagged with the offending index.
    #[error("element {index}: {source}")]
    Element {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short machine-readable code, used by the CLI error JSON.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Domain(_) => "DOMAIN",
            Error::Capacity(_) => "CAPACITY",
            Error::Format { .. } => "FORMAT",
            Error::Validation(_) => "VALIDATION",
            Error::PoleProximity { .. } => "POLE_PROXIMITY",
            Error::Consistency(_) => "CONSISTENCY",
            Error::Element { source, .. } => source.code(),
            Error::Io(_) => "IO_ERROR",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
