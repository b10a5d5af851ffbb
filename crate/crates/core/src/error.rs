//! Error conditions shared across the crate.

use thiserror::Error;

/// Errors reported by the numerical and certification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A p-norm exponent outside `[1, inf]` (or NaN) was supplied.
    #[error("invalid exponent: p = {0} is not in [1, inf]")]
    InvalidExponent(f64),

    /// A guess vector has coinciding components (or a zero denominator
    /// entry appeared where a positive one is required).
    #[error("degenerate guess: {0}")]
    DegenerateGuess(&'static str),

    /// A non-finite value appeared during the Weierstrass correction.
    #[error("non-finite arithmetic in {0}")]
    NonfiniteArithmetic(&'static str),

    /// A Braess-Hadeler weight was zero or negative.
    #[error("invalid weights: all weights must be strictly positive")]
    InvalidWeights,

    /// An argument fell outside the domain of the requested formula.
    #[error("domain error: {0}")]
    Domain(String),

    /// A first- or second-type condition check was requested without the
    /// reference root-vector it needs.
    #[error("missing reference root-vector for {0} condition check")]
    MissingReference(&'static str),

    /// A ground-truth instance could not be built from the given roots.
    #[error("invalid instance: {0}")]
    InvalidInstance(&'static str),

    /// Randomized instance generation exhausted its retry budget.
    #[error("instance generation failed: {0}")]
    InstanceGeneration(&'static str),

    /// Vector lengths do not agree.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Coefficient list does not describe a degree >= 2 polynomial with a
    /// nonzero leading coefficient.
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(&'static str),
}

/// Convenience alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
