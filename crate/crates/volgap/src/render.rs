//! Number formatting shared by every output format.
//!
//! All numbers are printed with 12 significant digits in the style of C's
//! `%.12g`, except that exponents are written Rust-style (`1.5e300`,
//! `2.25e-7`). Values that only exist in the log domain are printed in
//! scientific notation built from their base-10 logarithm.

use volgap_core::{LogScalar, Sign};

/// Significant digits used everywhere.
pub const SIG_DIGITS: usize = 12;

/// Largest `|log10|` printed through an `f64` round trip.
const PLAIN_LOG10_LIMIT: f64 = 300.0;

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn scientific(mantissa: &str, exponent: i64) -> String {
    format!("{}e{exponent}", trim_fraction(mantissa))
}

/// `%.12g` with Rust exponent syntax.
pub fn sig(x: f64) -> String {
    if x == 0.0 {
        return "0".to_owned();
    }
    if x.is_nan() {
        return "nan".to_owned();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_owned();
    }
    // the exponent after rounding to SIG_DIGITS
    let sci = format!("{:.*e}", SIG_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("`{:e}` always has an exponent");
    let exp: i64 = exp.parse().expect("`{:e}` exponent is an integer");
    if exp < -4 || exp >= SIG_DIGITS as i64 {
        return scientific(mantissa, exp);
    }
    let decimals = (SIG_DIGITS as i64 - 1 - exp) as usize;
    trim_fraction(&format!("{x:.decimals$}")).to_owned()
}

/// `sign * 10^log10` in scientific notation, for magnitudes beyond `f64`.
pub fn from_log10(sign: Sign, log10: f64) -> String {
    let prefix = match sign {
        Sign::Zero => return "0".to_owned(),
        Sign::Negative => "-",
        Sign::Positive => "",
    };
    if !log10.is_finite() {
        return format!("{prefix}{}", if log10 > 0.0 { "inf" } else { "0" });
    }
    let mut exp = log10.floor();
    let mut mantissa = 10f64.powf(log10 - exp);
    let mut text = format!("{:.*}", SIG_DIGITS - 1, mantissa);
    if text.starts_with("10") {
        exp += 1.0;
        mantissa /= 10.0;
        text = format!("{:.*}", SIG_DIGITS - 1, mantissa);
    }
    format!("{prefix}{}", scientific(&text, exp as i64))
}

/// A log scalar as a plain number when it fits comfortably in `f64`.
pub fn log_scalar(v: LogScalar) -> String {
    let (sign, log10) = v.signed_log10();
    if sign == Sign::Zero {
        return "0".to_owned();
    }
    if log10.abs() <= PLAIN_LOG10_LIMIT {
        sig(v.to_real())
    } else {
        from_log10(sign, log10)
    }
}

/// `log10 |v|` rendered with [`sig`]; `-inf` for zero.
pub fn log10_of(v: LogScalar) -> String {
    sig(v.log10_mag())
}

/// `sign 10^x` with `x` at 12 significant digits, e.g. `+10^55.8906896`.
pub fn signed_power(v: LogScalar) -> String {
    match v.sign() {
        Sign::Zero => "0".to_owned(),
        Sign::Positive => format!("10^{}", sig(v.log10_mag())),
        Sign::Negative => format!("-10^{}", sig(v.log10_mag())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use volgap_core::log_scalar::log_exp;

    #[test]
    fn matches_percent_g() {
        assert_eq!(sig(1.0), "1");
        assert_eq!(sig(1.43), "1.43");
        assert_eq!(sig(-0.5), "-0.5");
        assert_eq!(sig(1.0 / 3.0), "0.333333333333");
        assert_eq!(sig(123456789012.0), "123456789012");
        assert_eq!(sig(1234567890123.0), "1.23456789012e12");
        assert_eq!(sig(0.0001), "0.0001");
        assert_eq!(sig(0.00001234), "1.234e-5");
        assert_eq!(sig(55.890689642), "55.890689642");
        assert_eq!(sig(9.9999999999999), "10");
        assert_eq!(sig(f64::NEG_INFINITY), "-inf");
    }

    #[test]
    fn huge_values_from_logs() {
        assert_eq!(from_log10(Sign::Positive, 500.0), "1e500");
        assert_eq!(from_log10(Sign::Negative, 2.5), "-3.16227766017e2");
        assert_eq!(from_log10(Sign::Positive, -0.0000000000001), "1e0");
        let v = log_exp(2000.0);
        assert!(log_scalar(v).ends_with("e868"));
        assert_eq!(log_scalar(LogScalar::from_real(1.25)), "1.25");
        assert_eq!(log_scalar(LogScalar::ZERO), "0");
    }

    #[test]
    fn powers() {
        assert_eq!(signed_power(LogScalar::from_real(100.0)), "10^2");
        assert_eq!(signed_power(LogScalar::from_real(-0.01)), "-10^-2");
    }
}
