//! Error type shared by every module.

use thiserror::Error;

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors. Every variant names the invariant that was violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A weight system violates `0 ≤ α_1 < … < α_r < 1` or has the wrong shape.
    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    /// A parabolic type is not a 0/1 matrix with constant row sum.
    #[error("invalid parabolic type: {0}")]
    InvalidType(String),

    /// Two objects that must share `(n, r)` (or a size) do not.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A numeric parameter lies outside its documented range.
    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    /// A transformation is malformed (bad permutation, Hecke entry out of range, …).
    #[error("invalid transformation: {0}")]
    InvalidTransform(String),

    /// Curve data violates its invariants (identity missing, zero multiplicity, …).
    #[error("invalid curve data: {0}")]
    InvalidCurve(String),

    /// A wall-crossing query had an endpoint lying on a wall.
    #[error("endpoint lies on a wall: {0}")]
    OnWall(String),

    /// A genus bound that needs a parabolic type was requested without one.
    #[error("missing parabolic type: {0}")]
    MissingType(String),

    /// A matrix is not invertible over the required ring.
    #[error("matrix not invertible: {0}")]
    NotInvertible(String),

    /// A truncated power-series computation ran past its precision budget.
    #[error("precision exhausted: {0}")]
    PrecisionExhausted(String),

    /// Text that should describe an exact value could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidWeights(_) => "invalid_weights",
            Error::InvalidType(_) => "invalid_type",
            Error::ShapeMismatch(_) => "shape_mismatch",
            Error::OutOfRange(_) => "out_of_range",
            Error::InvalidTransform(_) => "invalid_transform",
            Error::InvalidCurve(_) => "invalid_curve",
            Error::OnWall(_) => "on_wall",
            Error::MissingType(_) => "missing_type",
            Error::NotInvertible(_) => "not_invertible",
            Error::PrecisionExhausted(_) => "precision_exhausted",
            Error::Parse(_) => "parse",
        }
    }
}
