//! Signed scalars stored as `(sign, ln|x|)`.
//!
//! The log magnitude is kept as an unevaluated sum `hi + lo` of two `f64`s.
//! The low word carries the rounding error of `hi`, which lets
//! [`LogScalar::from_real`] followed by [`LogScalar::to_real`] reproduce the
//! input to within one ulp and keeps products and quotients exact to roughly
//! twice working precision.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::math;
use crate::{Error, Result};

/// Sign of a [`LogScalar`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(i8)]
pub enum Sign {
    /// Strictly negative.
    Negative = -1,
    /// Exactly zero.
    Zero = 0,
    /// Strictly positive.
    Positive = 1,
}

impl Sign {
    /// Sign of a real number; NaN maps to `None`.
    pub fn of(x: f64) -> Option<Sign> {
        if x > 0.0 {
            Some(Sign::Positive)
        } else if x < 0.0 {
            Some(Sign::Negative)
        } else if x == 0.0 {
            Some(Sign::Zero)
        } else {
            None
        }
    }

    /// `-1`, `0` or `+1`.
    pub fn as_i8(self) -> i8 {
        self as i8
    }

    /// `-1.0`, `0.0` or `+1.0`.
    pub fn as_f64(self) -> f64 {
        f64::from(self as i8)
    }

    fn from_i8(v: i8) -> Sign {
        match v {
            v if v > 0 => Sign::Positive,
            v if v < 0 => Sign::Negative,
            _ => Sign::Zero,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_i8(self.as_i8() * rhs.as_i8())
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        Sign::from_i8(-self.as_i8())
    }
}

/// A real number represented by its sign and the natural log of its magnitude.
#[derive(Clone, Copy)]
pub struct LogScalar {
    sign: Sign,
    hi: f64,
    lo: f64,
}

/// Error-free transformation `a + b = s + err`.
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    if !s.is_finite() {
        return (s, 0.0);
    }
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

/// A deterministic approximation of `e^hi` that avoids premature overflow.
///
/// The shift by 700 is exact for every `hi` in the shifted branches, so the
/// same anchor is recovered from the same `hi` in both conversion directions.
#[inline]
fn anchor(hi: f64) -> f64 {
    if hi > 700.0 {
        math::exp(hi - 700.0) * math::exp(700.0)
    } else if hi < -700.0 {
        math::exp(hi + 700.0) * math::exp(-700.0)
    } else {
        math::exp(hi)
    }
}

impl LogScalar {
    /// Exactly zero.
    pub const ZERO: LogScalar = LogScalar {
        sign: Sign::Zero,
        hi: f64::NEG_INFINITY,
        lo: 0.0,
    };

    /// Exactly one.
    pub const ONE: LogScalar = LogScalar {
        sign: Sign::Positive,
        hi: 0.0,
        lo: 0.0,
    };

    /// Builds `sign * e^log_mag`. A zero sign yields zero whatever `log_mag` is.
    pub fn new(sign: Sign, log_mag: f64) -> LogScalar {
        if sign == Sign::Zero {
            LogScalar::ZERO
        } else {
            LogScalar {
                sign,
                hi: log_mag,
                lo: 0.0,
            }
        }
    }

    /// `e^x` for any real `x`, including values far outside the `f64` range of `e^x`.
    pub fn exp(x: f64) -> LogScalar {
        LogScalar::new(Sign::Positive, x)
    }

    /// Converts a real number. NaN yields a positive scalar with NaN magnitude.
    pub fn from_real(x: f64) -> LogScalar {
        let sign = match Sign::of(x) {
            Some(Sign::Zero) => return LogScalar::ZERO,
            Some(s) => s,
            None => {
                return LogScalar {
                    sign: Sign::Positive,
                    hi: f64::NAN,
                    lo: 0.0,
                }
            }
        };
        let m = math::abs(x);
        let hi = math::ln(m);
        let e = anchor(hi);
        let lo = if e.is_finite() && e > 0.0 && m.is_finite() {
            math::ln_1p(m / e - 1.0)
        } else {
            0.0
        };
        LogScalar { sign, hi, lo }
    }

    /// Converts back to `f64`; magnitudes outside the `f64` range saturate to
    /// `0` or `±inf`.
    pub fn to_real(self) -> f64 {
        if self.sign == Sign::Zero {
            return 0.0;
        }
        let e = anchor(self.hi);
        let v = if e == 0.0 || !e.is_finite() || self.lo == 0.0 {
            e
        } else {
            e * (1.0 + math::exp_m1(self.lo))
        };
        self.sign.as_f64() * v
    }

    /// Sign of the value.
    pub fn sign(self) -> Sign {
        self.sign
    }

    /// Natural log of the magnitude; `-inf` for zero.
    pub fn log_mag(self) -> f64 {
        if self.sign == Sign::Zero {
            f64::NEG_INFINITY
        } else {
            self.hi + self.lo
        }
    }

    /// Base-10 log of the magnitude.
    pub fn log10_mag(self) -> f64 {
        if self.sign == Sign::Zero {
            f64::NEG_INFINITY
        } else {
            self.hi / math::LN_10 + self.lo / math::LN_10
        }
    }

    /// Signed base-10 log: `sign * log10|x|`, the rendering used in reports.
    pub fn signed_log10(self) -> (Sign, f64) {
        (self.sign, self.log10_mag())
    }

    /// True for exact zero.
    pub fn is_zero(self) -> bool {
        self.sign == Sign::Zero
    }

    /// True for strictly positive values.
    pub fn is_positive(self) -> bool {
        self.sign == Sign::Positive
    }

    /// True when the magnitude is NaN.
    pub fn is_nan(self) -> bool {
        self.sign != Sign::Zero && (self.hi.is_nan() || self.lo.is_nan())
    }

    /// True when the log magnitude is finite (or the value is zero).
    pub fn is_finite_log(self) -> bool {
        self.sign == Sign::Zero || (self.hi + self.lo).is_finite()
    }

    /// Absolute value.
    pub fn abs(self) -> LogScalar {
        if self.sign == Sign::Zero {
            self
        } else {
            LogScalar {
                sign: Sign::Positive,
                ..self
            }
        }
    }

    /// Reciprocal.
    pub fn recip(self) -> Result<LogScalar> {
        log_div(LogScalar::ONE, self)
    }

    /// `x^p` for non-negative `x`.
    pub fn powf(self, p: f64) -> Result<LogScalar> {
        match self.sign {
            Sign::Negative => Err(Error::Domain("power of a negative log scalar")),
            Sign::Zero if p > 0.0 => Ok(LogScalar::ZERO),
            Sign::Zero => Err(Error::Domain("non-positive power of zero")),
            Sign::Positive => {
                let hi = self.hi * p;
                let lo = libm::fma(self.hi, p, -hi) + self.lo * p;
                Ok(LogScalar::normalized(Sign::Positive, hi, lo))
            }
        }
    }

    /// Multiplies by a real factor.
    pub fn scale(self, factor: f64) -> LogScalar {
        log_mul(self, LogScalar::from_real(factor))
    }

    /// Total order on the represented values. NaN magnitudes compare equal.
    pub fn cmp_value(self, other: LogScalar) -> Ordering {
        match self.sign.cmp(&other.sign) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let mag = compare_mag(self, other);
        match self.sign {
            Sign::Zero => Ordering::Equal,
            Sign::Positive => mag,
            Sign::Negative => mag.reverse(),
        }
    }

    fn normalized(sign: Sign, hi: f64, lo: f64) -> LogScalar {
        let (hi, lo) = two_sum(hi, lo);
        LogScalar { sign, hi, lo }
    }
}

fn compare_mag(a: LogScalar, b: LogScalar) -> Ordering {
    if a.hi == b.hi {
        return a.lo.partial_cmp(&b.lo).unwrap_or(Ordering::Equal);
    }
    let d = (a.hi - b.hi) + (a.lo - b.lo);
    d.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
}

/// `a + b` in sign/log representation.
///
/// Uses `max + ln(1 ± e^(min - max))`; exact cancellation yields zero.
pub fn log_add(a: LogScalar, b: LogScalar) -> LogScalar {
    if a.sign == Sign::Zero {
        return b;
    }
    if b.sign == Sign::Zero {
        return a;
    }
    let (big, small) = if compare_mag(a, b) == Ordering::Less {
        (b, a)
    } else {
        (a, b)
    };
    if big.hi.is_infinite() && small.hi.is_infinite() && big.hi > 0.0 {
        let hi = if big.sign == small.sign {
            f64::INFINITY
        } else {
            f64::NAN
        };
        return LogScalar {
            sign: big.sign,
            hi,
            lo: 0.0,
        };
    }
    let d = (small.hi - big.hi) + (small.lo - big.lo);
    let t = if big.sign == small.sign {
        math::ln_1p(math::exp(d))
    } else {
        if d == 0.0 {
            return LogScalar::ZERO;
        }
        math::ln(-math::exp_m1(d))
    };
    let (hi, lo) = two_sum(big.hi, t);
    LogScalar::normalized(big.sign, hi, lo + big.lo)
}

/// `a - b`.
pub fn log_sub(a: LogScalar, b: LogScalar) -> LogScalar {
    log_add(a, -b)
}

/// `a * b`.
pub fn log_mul(a: LogScalar, b: LogScalar) -> LogScalar {
    let sign = a.sign * b.sign;
    if sign == Sign::Zero {
        return LogScalar::ZERO;
    }
    let (hi, lo) = two_sum(a.hi, b.hi);
    LogScalar::normalized(sign, hi, lo + (a.lo + b.lo))
}

/// `a / b`; fails when `b` is zero.
pub fn log_div(a: LogScalar, b: LogScalar) -> Result<LogScalar> {
    if b.sign == Sign::Zero {
        return Err(Error::DivisionByZero);
    }
    let sign = a.sign * b.sign;
    if sign == Sign::Zero {
        return Ok(LogScalar::ZERO);
    }
    let (hi, lo) = two_sum(a.hi, -b.hi);
    Ok(LogScalar::normalized(sign, hi, lo + (a.lo - b.lo)))
}

/// `e^x`.
pub fn log_exp(x: f64) -> LogScalar {
    LogScalar::exp(x)
}

/// Sums a sequence of log scalars.
pub fn log_sum<I: IntoIterator<Item = LogScalar>>(terms: I) -> LogScalar {
    terms.into_iter().fold(LogScalar::ZERO, log_add)
}

impl Default for LogScalar {
    fn default() -> Self {
        LogScalar::ZERO
    }
}

impl From<f64> for LogScalar {
    fn from(x: f64) -> Self {
        LogScalar::from_real(x)
    }
}

impl PartialEq for LogScalar {
    fn eq(&self, other: &Self) -> bool {
        self.cmp_value(*other) == Ordering::Equal
    }
}

impl PartialOrd for LogScalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.is_nan() || other.is_nan() {
            None
        } else {
            Some(self.cmp_value(*other))
        }
    }
}

impl Add for LogScalar {
    type Output = LogScalar;

    fn add(self, rhs: LogScalar) -> LogScalar {
        log_add(self, rhs)
    }
}

impl Sub for LogScalar {
    type Output = LogScalar;

    fn sub(self, rhs: LogScalar) -> LogScalar {
        log_sub(self, rhs)
    }
}

impl Mul for LogScalar {
    type Output = LogScalar;

    fn mul(self, rhs: LogScalar) -> LogScalar {
        log_mul(self, rhs)
    }
}

impl Neg for LogScalar {
    type Output = LogScalar;

    fn neg(self) -> LogScalar {
        LogScalar {
            sign: -self.sign,
            ..self
        }
    }
}

impl fmt::Debug for LogScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Zero => f.write_str("LogScalar(0)"),
            s => write!(f, "LogScalar({}e^{:?}{:+e})", if s == Sign::Negative { "-" } else { "+" }, self.hi, self.lo),
        }
    }
}

/// Renders as `±10^x`.
impl fmt::Display for LogScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.sign {
            Sign::Zero => f.write_str("0"),
            Sign::Positive => write!(f, "10^{}", self.log10_mag()),
            Sign::Negative => write!(f, "-10^{}", self.log10_mag()),
        }
    }
}
