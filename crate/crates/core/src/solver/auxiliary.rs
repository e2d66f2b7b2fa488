//! Numeric facts used to locate `gamma_n`.

use core::ops::RangeInclusive;

use crate::math;
use crate::special::{cly_constant, scaled_cly_constant_log};
use crate::{Error, Result};

/// Positive root of `phi(gamma) = a gamma^2 - a gamma - 1`: `(1 + sqrt(1 + 4/a)) / 2`.
pub fn tilde_gamma_with(a: f64) -> f64 {
    0.5 * (1.0 + math::sqrt(1.0 + 4.0 / a))
}

/// [`tilde_gamma_with`] at `a = n C_n`.
pub fn tilde_gamma(n: u32) -> Result<f64> {
    Ok(tilde_gamma_with(scaled_cly_constant_log(n)?.to_real()))
}

/// The root of `phi_3(gamma) = 3 C_3 gamma^2 - 3 C_3 gamma - 1` above 1.
pub fn aux_root_tilde_gamma3() -> f64 {
    tilde_gamma(3).expect("C_3 is finite")
}

/// `phi_3(1.3) = 3 C_3 * 1.3 * 0.3 - 1 = 1.17 C_3 - 1` for a given `C_3`.
pub fn phi3_threshold_with(c3: f64) -> f64 {
    3.0 * c3 * 1.3 * 0.3 - 1.0
}

/// `phi_3(1.3)` with the computed `C_3`.
pub fn phi3_threshold() -> f64 {
    phi3_threshold_with(cly_constant(3).expect("C_3 is finite"))
}

/// `4 C_4 * 1.3 * 0.3 - 1`, the lower bound of `n C_n gamma (gamma - 1) - 1`
/// for `n >= 4`, `gamma > 1.3`.
pub fn lemn_rhs_lower_bound(c4: f64) -> f64 {
    4.0 * c4 * 1.3 * 0.3 - 1.0
}

/// `ln psi(n) = ln(n + 2) - 20 n`.
pub fn psi_log(n: u32) -> f64 {
    math::ln(f64::from(n) + 2.0) - 20.0 * f64::from(n)
}

/// Outcome of checking that `psi(n) = (n + 2) e^{-20 n}` decreases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PsiCheck {
    /// First dimension checked.
    pub n_lo: u32,
    /// Last dimension checked.
    pub n_hi: u32,
    /// Strictly decreasing on the whole range.
    pub decreasing: bool,
    /// First `n` with `psi(n) >= psi(n - 1)`, if any.
    pub first_violation: Option<u32>,
    /// `log10 psi(4)`.
    pub psi4_log10: f64,
}

/// Checks strict decrease of `psi` on `range`, which must lie in `[4, 200]`.
pub fn psi_decreasing_check(range: RangeInclusive<u32>) -> Result<PsiCheck> {
    let (lo, hi) = (*range.start(), *range.end());
    if lo < 4 || hi > 200 || lo > hi {
        return Err(Error::Domain("psi range must be a non-empty subrange of [4, 200]"));
    }
    let first_violation = (lo + 1..=hi).find(|&n| psi_log(n) >= psi_log(n - 1));
    Ok(PsiCheck {
        n_lo: lo,
        n_hi: hi,
        decreasing: first_violation.is_none(),
        first_violation,
        psi4_log10: psi_log(4) / math::LN_10,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tilde_gamma3_value() {
        let c3 = cly_constant(3).unwrap();
        let t = aux_root_tilde_gamma3();
        assert!(t < 1.1);
        // phi_3 vanishes there
        let a = 3.0 * c3;
        assert!(math::abs(a * t * t - a * t - 1.0) < 1e-13);
    }

    #[test]
    fn phi3_above_two() {
        let c3 = cly_constant(3).unwrap();
        assert!(math::abs(phi3_threshold() - (1.17 * c3 - 1.0)) < 1e-13);
        assert!(phi3_threshold() > 2.0);
    }

    #[test]
    fn rhs_bound() {
        assert!(math::abs(lemn_rhs_lower_bound(16.0) - 23.96) < 1e-12);
    }

    #[test]
    fn psi() {
        let c = psi_decreasing_check(4..=200).unwrap();
        assert!(c.decreasing);
        assert!(c.psi4_log10 < -30.0);
        assert!(psi_log(5) < psi_log(4));
        assert!(psi_decreasing_check(3..=10).is_err());
        assert!(psi_decreasing_check(4..=201).is_err());
    }
}
