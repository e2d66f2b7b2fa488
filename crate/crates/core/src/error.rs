use thiserror::Error;

/// Errors raised by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(&'static str),
    /// The dimension is outside the supported range.
    #[error("dimension n = {n} outside supported range [{min}, {max}]")]
    Dimension {
        /// Offending dimension.
        n: u32,
        /// Smallest supported dimension.
        min: u32,
        /// Largest supported dimension.
        max: u32,
    },
    /// The result does not fit in an `f64`; use the log-domain variant.
    #[error("overflow: {0} is not representable as f64")]
    Overflow(&'static str),
    /// Division of a log-domain scalar by zero.
    #[error("division by zero")]
    DivisionByZero,
    /// `alpha * ell - 1` must be positive for a positive gap.
    #[error("non-positive gap numerator: alpha * ell - 1 = {0} <= 0")]
    NonPositiveGap(f64),
    /// The function has no sign change on the bracket.
    #[error("no sign change on bracket [{lo}, {hi}]")]
    NoSignChange {
        /// Lower end of the bracket.
        lo: f64,
        /// Upper end of the bracket.
        hi: f64,
    },
    /// The function returned NaN.
    #[error("function evaluated to NaN at x = {0}")]
    NotANumber(f64),
    /// Bracket expansion failed to find a critical point.
    #[error("no critical point found for n = {n}, ell = {ell}")]
    NoCriticalPoint {
        /// Dimension.
        n: u32,
        /// Codimension.
        ell: u32,
    },
    /// The critical point found is not a local maximum.
    #[error("critical point at {0} is not a local maximum")]
    NotAMaximum(f64),
}

/// Crate result alias.
pub type Result<T, E = Error> = core::result::Result<T, E>;
