//! Upper incomplete gamma at 1 and the Cheng–Li–Yau constant.
//!
//! Everything here goes through the scaled quantity `U(s) = e * Γ(s, 1)`,
//! which satisfies `U(s + 1) = s * U(s) + 1`. For integer `s = m` this is the
//! closed form `(m - 1)! * Σ_{j<m} 1/j!` evaluated in Horner order; for
//! half-odd `s` the recurrence is seeded at
//! `U(1/2) = e * sqrt(pi) * (1 - erf(1))`.

use core::f64::consts::{E, FRAC_2_SQRT_PI};

use crate::log_scalar::{log_add, log_div, log_mul, LogScalar};
use crate::math;
use crate::{Error, Result};

/// A positive half-integer `s = twice_value / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger {
    twice_value: u32,
}

impl HalfInteger {
    /// `s = twice_value / 2`; `twice_value` must be at least 1.
    pub fn new(twice_value: u32) -> Result<HalfInteger> {
        if twice_value == 0 {
            return Err(Error::Domain("half-integer argument must be positive"));
        }
        Ok(HalfInteger { twice_value })
    }

    /// The half-integer `n / 2` used for dimension `n`.
    pub fn half_of(n: u32) -> Result<HalfInteger> {
        HalfInteger::new(n)
    }

    /// Parses a real value that must be a positive multiple of 1/2.
    pub fn from_f64(s: f64) -> Result<HalfInteger> {
        let twice = 2.0 * s;
        if !(twice >= 1.0) || twice > f64::from(u32::MAX) || twice != libm::round(twice) {
            return Err(Error::Domain("argument is not a positive half-integer"));
        }
        HalfInteger::new(twice as u32)
    }

    /// Twice the represented value.
    pub fn twice_value(self) -> u32 {
        self.twice_value
    }

    /// The represented value as `f64`.
    pub fn value(self) -> f64 {
        f64::from(self.twice_value) / 2.0
    }

    /// True for whole numbers.
    pub fn is_integer(self) -> bool {
        self.twice_value.is_multiple_of(2)
    }
}

/// `erf(x)` by its Maclaurin series, summed until a term drops below 1e-17.
///
/// Restricted to `|x| <= 2`, where the alternating series loses at most a
/// couple of digits to cancellation.
pub fn erf_series(x: f64) -> Result<f64> {
    if !(math::abs(x) <= 2.0) {
        return Err(Error::Domain("erf series is only used for |x| <= 2"));
    }
    let x2 = x * x;
    // a_k = x^(2k+1) / k!
    let mut a = x;
    let mut sum = 0.0;
    let mut k = 0u32;
    loop {
        let term = a / f64::from(2 * k + 1);
        if k.is_multiple_of(2) {
            sum += term;
        } else {
            sum -= term;
        }
        if math::abs(term) < 1e-17 {
            break;
        }
        k += 1;
        a *= x2 / f64::from(k);
    }
    Ok(FRAC_2_SQRT_PI * sum)
}

/// `e * Γ(s, 1)` as a log scalar.
pub fn scaled_gamma_at_one_log(s: HalfInteger) -> LogScalar {
    let (mut u, mut current) = if s.is_integer() {
        // U(1) = 1
        (LogScalar::ONE, 2u32)
    } else {
        let erfc1 = 1.0 - erf_series(1.0).expect("1 is inside the series domain");
        let sqrt_pi = 2.0 / FRAC_2_SQRT_PI;
        (LogScalar::from_real(E * sqrt_pi * erfc1), 1u32)
    };
    while current < s.twice_value() {
        let a = f64::from(current) / 2.0;
        u = log_add(log_mul(LogScalar::from_real(a), u), LogScalar::ONE);
        current += 2;
    }
    u
}

/// `Γ(s, 1) = ∫_1^∞ e^{-t} t^{s-1} dt` as a log scalar.
pub fn upper_incomplete_gamma_at_one_log(s: HalfInteger) -> LogScalar {
    log_mul(scaled_gamma_at_one_log(s), LogScalar::exp(-1.0))
}

/// `Γ(s, 1)`; fails with [`Error::Overflow`] once the value leaves the `f64` range.
pub fn upper_incomplete_gamma_at_one(s: HalfInteger) -> Result<f64> {
    let v = upper_incomplete_gamma_at_one_log(s).to_real();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("incomplete gamma"))
    }
}

fn check_dimension(n: u32) -> Result<()> {
    if n < 2 {
        Err(Error::Dimension {
            n,
            min: 2,
            max: u32::MAX,
        })
    } else {
        Ok(())
    }
}

/// `C_n = n^{n/2} e Γ(n/2, 1) / 2` as a log scalar; valid for every `n >= 2`.
pub fn cly_constant_log(n: u32) -> Result<LogScalar> {
    check_dimension(n)?;
    let nf = f64::from(n);
    let power = LogScalar::exp(0.5 * nf * math::ln(nf));
    let u = scaled_gamma_at_one_log(HalfInteger::half_of(n)?);
    log_div(log_mul(power, u), LogScalar::from_real(2.0))
}

/// `C_n` as `f64`. Overflows (and errors) for `n` above roughly 165.
pub fn cly_constant(n: u32) -> Result<f64> {
    let v = cly_constant_log(n)?.to_real();
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Overflow("C_n"))
    }
}

/// `n * C_n`, the exponent scale that appears throughout the bounds.
pub fn scaled_cly_constant_log(n: u32) -> Result<LogScalar> {
    Ok(log_mul(cly_constant_log(n)?, LogScalar::from_real(f64::from(n))))
}
