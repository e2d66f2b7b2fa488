use crate::log_scalar::{LogScalar, Sign};
use crate::{Error, Result};

/// A function value whose sign drives bisection.
pub trait Residual: Copy {
    /// Sign of the value, `None` for NaN.
    fn sign(self) -> Option<Sign>;
    /// The value as `f64` for reporting (may saturate).
    fn value(self) -> f64;
}

impl Residual for f64 {
    fn sign(self) -> Option<Sign> {
        Sign::of(self)
    }

    fn value(self) -> f64 {
        self
    }
}

impl Residual for LogScalar {
    fn sign(self) -> Option<Sign> {
        if self.is_nan() {
            None
        } else {
            Some(LogScalar::sign(self))
        }
    }

    fn value(self) -> f64 {
        self.to_real()
    }
}

/// A bracketed root of a scalar function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootResult {
    /// Lower end of the final bracket.
    pub bracket_lo: f64,
    /// Upper end of the final bracket.
    pub bracket_hi: f64,
    /// Midpoint of the final bracket.
    pub root: f64,
    /// Function value at `root`.
    pub residual: f64,
    /// Number of halvings performed.
    pub iterations: u32,
    /// Lower end of the starting bracket.
    pub initial_lo: f64,
    /// Upper end of the starting bracket.
    pub initial_hi: f64,
}

fn sign_at<F, R>(f: &mut F, x: f64) -> Result<Sign>
where
    F: FnMut(f64) -> R,
    R: Residual,
{
    f(x).sign().ok_or(Error::NotANumber(x))
}

/// Bisection on `[lo, hi]` until the bracket is at most `tol` wide.
///
/// Requires `f(lo)` and `f(hi)` to be nonzero with opposite signs. Performs at
/// most `ceil(log2((hi - lo) / tol))` halvings.
pub fn bisect<F, R>(mut f: F, lo: f64, hi: f64, tol: f64) -> Result<RootResult>
where
    F: FnMut(f64) -> R,
    R: Residual,
{
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain("bisection needs a finite bracket with lo < hi"));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("bisection tolerance must be positive"));
    }
    let s_lo = sign_at(&mut f, lo)?;
    let s_hi = sign_at(&mut f, hi)?;
    if s_lo * s_hi != Sign::Negative {
        return Err(Error::NoSignChange { lo, hi });
    }
    let (initial_lo, initial_hi) = (lo, hi);
    let (mut a, mut b) = (lo, hi);
    let mut iterations = 0;
    while b - a > tol {
        let mid = a + 0.5 * (b - a);
        if mid <= a || mid >= b {
            break;
        }
        iterations += 1;
        match sign_at(&mut f, mid)? {
            Sign::Zero => {
                let half = 0.5 * tol.min(b - a);
                a = mid - half;
                b = mid + half;
                break;
            }
            s if s == s_lo => a = mid,
            _ => b = mid,
        }
    }
    let root = a + 0.5 * (b - a);
    Ok(RootResult {
        bracket_lo: a,
        bracket_hi: b,
        root,
        residual: f(root).value(),
        iterations,
        initial_lo,
        initial_hi,
    })
}
