//! Critical points of the tuning objective.
//!
//! Both searches bisect a normalized form of the numerator of `f1'`: dividing
//! by `n C_n e^{alpha n C_n} > 0` keeps the sign and leaves a residual of
//! order one whose roots can be located to absolute tolerance.

use crate::log_scalar::{log_add, log_div, LogScalar, Sign};
use crate::math;
use crate::special::scaled_cly_constant_log;
use crate::{Error, Result};

use super::bisect::{bisect, Residual, RootResult};

/// Default absolute tolerance on the parameter.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Upper bracket doublings before giving up.
pub const MAX_BRACKET_DOUBLINGS: u32 = 60;

/// Endpoint values this close to zero are treated as ties and nudged outward.
const TIE: f64 = 1e-15;
const NUDGE: f64 = 1e-12;

/// `(1 + c e^{-alpha n C_n}) / (n C_n)`.
fn tail(n: u32, alpha: f64, c: f64) -> Result<LogScalar> {
    let nc = scaled_cly_constant_log(n)?;
    let x = alpha * nc.to_real();
    log_div(LogScalar::from_real(1.0 + c * math::exp(-x)), nc)
}

/// `f1'` numerator divided by `n C_n e^{alpha n C_n}`:
/// `alpha (1 - ell alpha) + (1 + (n + 1 + ell) e^{-alpha n C_n}) / (n C_n)`.
pub fn optimal_alpha_residual(alpha: f64, n: u32, ell: u32) -> Result<LogScalar> {
    let ellf = f64::from(ell);
    let quadratic = LogScalar::from_real(alpha * (1.0 - ellf * alpha));
    Ok(log_add(quadratic, tail(n, alpha, f64::from(n) + 1.0 + ellf)?))
}

/// `gamma (gamma - 1) - (1 + (n + 2) e^{-gamma n C_n}) / (n C_n)`: the
/// critical-point equation `n + 2 = (gamma^2 n C_n - gamma n C_n - 1) e^{gamma n C_n}`
/// divided by `n C_n e^{gamma n C_n}`. Increasing in `gamma` for `gamma > 1/2`.
pub fn gamma_equation_residual(n: u32, gamma: f64) -> Result<LogScalar> {
    let quadratic = LogScalar::from_real(gamma * (gamma - 1.0));
    Ok(log_add(quadratic, -tail(n, gamma, f64::from(n) + 2.0)?))
}

fn validate(n: u32, tol: f64) -> Result<()> {
    if n < 2 {
        return Err(Error::Dimension {
            n,
            min: 2,
            max: u32::MAX,
        });
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("tolerance must be positive"));
    }
    Ok(())
}

/// Moves `x` by `step` when `f(x)` is within [`TIE`] of zero without the
/// wanted sign.
fn settle<F>(f: &F, x: f64, want: Sign, step: f64) -> Result<(f64, Sign)>
where
    F: Fn(f64) -> Result<LogScalar>,
{
    let v = f(x)?;
    let s = Residual::sign(v).ok_or(Error::NotANumber(x))?;
    if s != want && math::abs(v.to_real()) <= TIE {
        let y = x + step;
        let s2 = Residual::sign(f(y)?).ok_or(Error::NotANumber(y))?;
        return Ok((y, s2));
    }
    Ok((x, s))
}

/// Doubles `hi` until `f(hi)` has sign `want`.
fn expand_upward<F>(f: &F, start: f64, want: Sign) -> Result<Option<f64>>
where
    F: Fn(f64) -> Result<LogScalar>,
{
    let mut hi = start;
    for _ in 0..=MAX_BRACKET_DOUBLINGS {
        let (x, s) = settle(f, hi, want, NUDGE)?;
        if s == want {
            return Ok(Some(x));
        }
        hi *= 2.0;
    }
    Ok(None)
}

fn bisect_log<F>(f: &F, lo: f64, hi: f64, tol: f64) -> Result<RootResult>
where
    F: Fn(f64) -> Result<LogScalar>,
{
    // Residuals are computed fallibly; a failure surfaces as NaN and is
    // reported by the bisection.
    bisect(
        |x| f(x).unwrap_or(LogScalar::from_real(f64::NAN)),
        lo,
        hi,
        tol,
    )
}

/// Maximizer of `f1(alpha) = (alpha ell - 1) / B_{n,alpha}`.
///
/// Starts from `[1.01, 3]`. If `f1'` is not positive at 1.01 the lower end
/// drops to `1/ell`, where `f1` vanishes and `f1'` is positive; the upper end
/// doubles until `f1'` turns negative. The result is checked to be a local
/// maximum by the derivative signs at `root ± 10 tol`.
pub fn optimal_alpha(n: u32, ell: u32, tol: f64) -> Result<RootResult> {
    validate(n, tol)?;
    if ell == 0 {
        return Err(Error::Domain("codimension must be at least 1"));
    }
    let f = |a: f64| optimal_alpha_residual(a, n, ell);
    let no_point = Error::NoCriticalPoint { n, ell };

    let (mut lo, mut s_lo) = settle(&f, 1.01, Sign::Positive, -NUDGE)?;
    if s_lo != Sign::Positive {
        (lo, s_lo) = settle(&f, 1.0 / f64::from(ell), Sign::Positive, -NUDGE)?;
    }
    if s_lo != Sign::Positive {
        return Err(no_point);
    }
    let hi = expand_upward(&f, 3.0, Sign::Negative)?.ok_or(no_point)?;
    let result = bisect_log(&f, lo, hi, tol)?;

    let before = f(result.root - 10.0 * tol)?.sign();
    let after = f(result.root + 10.0 * tol)?.sign();
    if before != Sign::Positive || after != Sign::Negative {
        return Err(Error::NotAMaximum(result.root));
    }
    Ok(result)
}

/// The critical point `gamma_n > 1` of `f2`, from the equation
/// `n + 2 = (gamma^2 n C_n - gamma n C_n - 1) e^{gamma n C_n}`.
///
/// Brackets `[1, 3]`: the residual at 1 is `-(1 + (n+2) e^{-n C_n}) / (n C_n) < 0`,
/// whose sign the log domain resolves for every `n`.
pub fn gamma_n(n: u32, tol: f64) -> Result<RootResult> {
    validate(n, tol)?;
    let f = |g: f64| gamma_equation_residual(n, g);
    let (lo, s_lo) = settle(&f, 1.0, Sign::Negative, -NUDGE)?;
    if s_lo != Sign::Negative {
        return Err(Error::NoSignChange { lo, hi: 3.0 });
    }
    let hi = expand_upward(&f, 3.0, Sign::Positive)?.ok_or(Error::NoCriticalPoint { n, ell: 1 })?;
    bisect_log(&f, lo, hi, tol)
}
