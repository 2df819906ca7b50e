//! Shared error type.

use core::fmt;

/// Errors produced by the library.
///
/// Numerical *quality* problems (non-convergence, detected divergence of an
/// integral) are not errors: they are reported through
/// [`crate::quadrature::IntegralResult`] flags so callers can audit partial
/// results. `Error` is reserved for contract violations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A point was required to lie in the open domain but does not.
    OutsideDomain,
    /// Kernel evaluation too close to the singular set `t = 1` or `t = s^k`.
    SingularEvaluation,
    /// Exponent pair outside the monomial basis set (the norm integral diverges).
    ExponentOutsideBasis,
    /// A scalar parameter violated its documented range.
    InvalidParameter(&'static str),
    /// An operation that needs a finite integral hit a divergent one.
    DivergentIntegral,
    /// A sampler produced no admissible points.
    EmptySample,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::OutsideDomain => write!(f, "point lies outside the open domain"),
            Error::SingularEvaluation => {
                write!(f, "kernel evaluation within 1e-12 of the singular set")
            }
            Error::ExponentOutsideBasis => {
                write!(f, "exponent pair is outside the monomial basis set")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::DivergentIntegral => write!(f, "integral flagged as divergent"),
            Error::EmptySample => write!(f, "sampler produced no admissible points"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
