//! The tuning objectives and the closed-form derivatives used to analyse them.

use alloc::vec::Vec;

use crate::bounds::b_alpha;
use crate::log_scalar::{log_add, log_div, log_mul, LogScalar, Sign};
use crate::math;
use crate::special::scaled_cly_constant_log;
use crate::{Error, Result};

fn check_positive(x: f64, what: &'static str) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(what))
    }
}

/// `f1(alpha) = (alpha ell - 1) / (alpha n + alpha + 1 + alpha e^{alpha n C_n})`.
pub fn f1(alpha: f64, n: u32, ell: u32) -> Result<LogScalar> {
    check_positive(alpha, "alpha must be positive")?;
    let numerator = LogScalar::from_real(alpha * f64::from(ell) - 1.0);
    log_div(numerator, b_alpha(n, alpha)?)
}

/// `f2(beta) = f1(beta)` with `ell = 1`.
pub fn f2(beta: f64, n: u32) -> Result<LogScalar> {
    f1(beta, n, 1)
}

/// Numerator of `f1'`:
/// `-ell (alpha^2 n C_n e^x - 1) + n + 1 + (1 + alpha n C_n) e^x` with `x = alpha n C_n`.
pub fn f1_prime_numerator(alpha: f64, n: u32, ell: u32) -> Result<LogScalar> {
    check_positive(alpha, "alpha must be positive")?;
    let nc = scaled_cly_constant_log(n)?;
    let ex = LogScalar::exp(alpha * nc.to_real());
    let ellf = f64::from(ell);
    let pull = -log_mul(nc.scale(ellf * alpha * alpha), ex);
    let push = log_mul(log_add(LogScalar::ONE, nc.scale(alpha)), ex);
    let constant = LogScalar::from_real(ellf + f64::from(n) + 1.0);
    Ok(log_add(log_add(pull, push), constant))
}

/// `f1'(alpha)`, the closed-form derivative divided by `B_{n,alpha}^2`.
pub fn f1_prime(alpha: f64, n: u32, ell: u32) -> Result<LogScalar> {
    let b = b_alpha(n, alpha)?;
    log_div(f1_prime_numerator(alpha, n, ell)?, log_mul(b, b))
}

/// `h(alpha) = 4 + (1 + 2 alpha - 2 alpha^2) e^{2 alpha}`, the numerator of
/// `f1'` at `(n, ell) = (2, 1)`.
pub fn h(alpha: f64) -> f64 {
    4.0 + (1.0 + 2.0 * alpha - 2.0 * alpha * alpha) * math::exp(2.0 * alpha)
}

/// `g(beta) = (n + 1 + (1 + beta n C_n) e^x) / (beta^2 n C_n e^x - 1)`, the
/// codimension at which `beta` is critical for `f1`.
pub fn g(beta: f64, n: u32) -> Result<LogScalar> {
    check_positive(beta, "beta must be positive")?;
    let nc = scaled_cly_constant_log(n)?;
    let ex = LogScalar::exp(beta * nc.to_real());
    let top = log_add(
        LogScalar::from_real(f64::from(n) + 1.0),
        log_mul(log_add(LogScalar::ONE, nc.scale(beta)), ex),
    );
    let bottom = log_add(log_mul(nc.scale(beta * beta), ex), -LogScalar::ONE);
    if !bottom.is_positive() {
        return Err(Error::Domain("g needs beta^2 n C_n e^{beta n C_n} > 1"));
    }
    log_div(top, bottom)
}

/// Numerator of `g'`:
/// `-a e^{2x} (2 beta + beta^2 a) - a e^x [beta a (1 + beta (n+1)) + 2 (beta n + beta + 1)]`
/// with `a = n C_n`, `x = beta a`.
pub fn g_prime_numerator(beta: f64, n: u32) -> Result<LogScalar> {
    check_positive(beta, "beta must be positive")?;
    let a = scaled_cly_constant_log(n)?;
    let x = beta * a.to_real();
    let nf = f64::from(n);
    let first = log_mul(
        log_mul(a, LogScalar::exp(2.0 * x)),
        log_add(LogScalar::from_real(2.0 * beta), a.scale(beta * beta)),
    );
    let inner = log_add(
        a.scale(beta * (1.0 + beta * (nf + 1.0))),
        LogScalar::from_real(2.0 * (beta * nf + beta + 1.0)),
    );
    let second = log_mul(log_mul(a, LogScalar::exp(x)), inner);
    Ok(-log_add(first, second))
}

/// One point of a `g'` sign scan.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GPrimeSample {
    /// Grid point.
    pub beta: f64,
    /// Sign of `g'`, or `None` when `g` is undefined there.
    pub sign: Option<Sign>,
    /// Value of the numerator of `g'`.
    pub numerator: LogScalar,
}

/// Sign of `g'` at every grid point. Points where the denominator of `g`
/// is not positive are flagged with `sign: None` rather than failing.
pub fn g_prime_sign_scan(n: u32, beta_grid: &[f64]) -> Result<Vec<GPrimeSample>> {
    let a = scaled_cly_constant_log(n)?;
    let log_a = a.log_mag();
    let a_real = a.to_real();
    beta_grid
        .iter()
        .map(|&beta| {
            let defined = beta > 0.0 && 2.0 * math::ln(beta) + log_a + beta * a_real > 0.0;
            if !defined {
                return Ok(GPrimeSample {
                    beta,
                    sign: None,
                    numerator: LogScalar::ZERO,
                });
            }
            let numerator = g_prime_numerator(beta, n)?;
            Ok(GPrimeSample {
                beta,
                sign: Some(numerator.sign()),
                numerator,
            })
        })
        .collect()
}

/// Samples of `f1` over an increasing parameter grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ObjectiveProfile {
    /// Dimension.
    pub n: u32,
    /// Codimension.
    pub ell: u32,
    /// `(alpha, f1(alpha))` pairs, `alpha` strictly increasing.
    pub samples: Vec<(f64, LogScalar)>,
}

impl ObjectiveProfile {
    /// Evaluates `f1` on `grid`, which must be strictly increasing.
    pub fn sample(n: u32, ell: u32, grid: &[f64]) -> Result<ObjectiveProfile> {
        if grid.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Domain("profile grid must be strictly increasing"));
        }
        let samples = grid
            .iter()
            .map(|&alpha| Ok((alpha, f1(alpha, n, ell)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(ObjectiveProfile { n, ell, samples })
    }

    /// The sample with the largest objective value.
    pub fn argmax(&self) -> Option<(f64, LogScalar)> {
        self.samples
            .iter()
            .copied()
            .max_by(|a, b| a.1.cmp_value(b.1))
    }
}
