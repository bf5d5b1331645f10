//! Error type shared by every module of the crate.

use thiserror::Error;

/// Failures reported by the numerical kernels, the model operators and the
/// combinatorial machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A matrix that must be square was not.
    #[error("matrix is not square: {rows} rows, row {row} has {cols} entries")]
    NonSquare { rows: usize, row: usize, cols: usize },

    /// A matrix that must be symmetric was not.
    #[error("matrix is not symmetric at ({i}, {j})")]
    NonSymmetric { i: usize, j: usize },

    /// A non-finite number appeared where finite input is required.
    #[error("non-finite value in {what}")]
    NonFinite { what: String },

    /// A parameter lies outside the domain of the operation.
    #[error("{what}: {detail}")]
    Domain { what: String, detail: String },

    /// An integral diverges at the origin.
    #[error("divergent integral: exponent {exponent} must exceed {bound} ({context})")]
    Divergent {
        exponent: f64,
        bound: f64,
        context: String,
    },

    /// A recurrence computed from moments broke down.
    #[error("recurrence breakdown at index {index}: computed coefficient is not positive")]
    Instability { index: usize },

    /// The requested size exceeds what double precision can represent reliably.
    #[error("precision budget exceeded: {detail}")]
    Precision { detail: String },

    /// An operator variant or table row is not defined at the given parameters.
    #[error("undefined: {detail}")]
    Undefined { detail: String },

    /// The requested self-adjoint realization is not described by the tables.
    #[error("realization not determined: {detail}")]
    UnknownAssignment { detail: String },

    /// Two inputs that must have matching lengths do not.
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// Malformed structured input (documents, perversities, rationals).
    #[error("invalid input: {detail}")]
    Invalid { detail: String },
}

impl Error {
    pub(crate) fn domain(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Domain {
            what: what.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn invalid(detail: impl Into<String>) -> Self {
        Error::Invalid {
            detail: detail.into(),
        }
    }

    pub(crate) fn undefined(detail: impl Into<String>) -> Self {
        Error::Undefined {
            detail: detail.into(),
        }
    }
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
