//! Closed-form volume-gap bounds.
//!
//! For a compact minimal submanifold `M^n` of `S^{n+ell}` of maximal
//! dimension, each [`Variant`] yields `vol(M) / vol(S^n) >= 1 + excess`.
//! Denominators are of the form `alpha*n + alpha + 1 + alpha*e^{alpha n C_n}`,
//! which overflows `f64` already at `n = 4`, so every value here is a
//! [`LogScalar`].
//!
//! The denominators are the displayed upper bounds on the constants, so every
//! reported excess is a lower bound on the true one.

use core::cmp::Ordering;
use core::fmt;

use crate::log_scalar::{log_add, log_div, log_mul, LogScalar};
use crate::math;
use crate::special::{cly_constant_log, scaled_cly_constant_log};
use crate::{Error, Result};

/// Largest dimension for which every exponent `alpha n C_n` (with `alpha <= 2`)
/// and the correction exponent stay finite in `f64`.
pub const MAX_DIMENSION: u32 = 160;

/// Tuning parameter used throughout unless overridden.
pub const DEFAULT_ALPHA: f64 = 1.43;

/// The baseline bound is the `alpha = 2` specialization.
pub const CLY_ALPHA: f64 = 2.0;

/// Which gap statement to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// Baseline: `(2 ell - 1) / B_n`.
    Cly,
    /// Tuned: `(alpha ell - 1) / B_{n,alpha}`.
    Thm1,
    /// Eigenvalue-enhanced, multiplicity `n+ell+1 <= k <= n+2ell`.
    Thm2Case1,
    /// Eigenvalue-enhanced, multiplicity `k >= n+2ell+1`.
    Thm2Case2,
}

impl Variant {
    /// All variants in table order.
    pub const ALL: [Variant; 4] = [
        Variant::Cly,
        Variant::Thm1,
        Variant::Thm2Case1,
        Variant::Thm2Case2,
    ];

    /// Stable upper-case name used in tables.
    pub fn name(self) -> &'static str {
        match self {
            Variant::Cly => "CLY",
            Variant::Thm1 => "THM1",
            Variant::Thm2Case1 => "THM2_CASE1",
            Variant::Thm2Case2 => "THM2_CASE2",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_dimension(n: u32) -> Result<()> {
    if (2..=MAX_DIMENSION).contains(&n) {
        Ok(())
    } else {
        Err(Error::Dimension {
            n,
            min: 2,
            max: MAX_DIMENSION,
        })
    }
}

fn check_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 && alpha.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("alpha must be positive and finite"))
    }
}

/// Dimension, codimension and tuning parameter of a gap evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapParams {
    n: u32,
    ell: u32,
    alpha: f64,
}

impl GapParams {
    /// Validates `2 <= n <= MAX_DIMENSION`, `ell >= 1`, `alpha > 0` and
    /// `alpha * ell > 1`.
    pub fn new(n: u32, ell: u32, alpha: f64) -> Result<GapParams> {
        check_dimension(n)?;
        if ell == 0 {
            return Err(Error::Domain("codimension must be at least 1"));
        }
        check_alpha(alpha)?;
        let numerator = alpha * f64::from(ell) - 1.0;
        if !(numerator > 0.0) {
            return Err(Error::NonPositiveGap(numerator));
        }
        Ok(GapParams { n, ell, alpha })
    }

    /// Dimension `n`.
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Codimension `ell`.
    pub fn ell(&self) -> u32 {
        self.ell
    }

    /// Tuning parameter `alpha`.
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    fn with_alpha(self, alpha: f64) -> GapParams {
        GapParams { alpha, ..self }
    }
}

/// A computed volume-gap excess.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapBound {
    /// Parameters actually used (`alpha = 2` for [`Variant::Cly`]).
    pub params: GapParams,
    /// Which statement.
    pub variant: Variant,
    /// The denominator `B_n` or `B_{n,alpha}`.
    pub denominator_log: LogScalar,
    /// `vol(M)/vol(S^n) >= 1 + excess`.
    pub excess: LogScalar,
    /// `excess / excess(CLY)` at the same `(n, ell)`.
    pub ratio_vs_cly: LogScalar,
}

/// `alpha n C_n` as `f64`.
pub fn tuned_exponent(n: u32, alpha: f64) -> Result<f64> {
    check_dimension(n)?;
    check_alpha(alpha)?;
    Ok(alpha * scaled_cly_constant_log(n)?.to_real())
}

/// `B_{n,alpha} = alpha n + alpha + 1 + alpha e^{alpha n C_n}`.
pub fn b_alpha(n: u32, alpha: f64) -> Result<LogScalar> {
    let x = tuned_exponent(n, alpha)?;
    let linear = LogScalar::from_real(alpha * (f64::from(n) + 1.0) + 1.0);
    Ok(log_add(linear, log_mul(LogScalar::from_real(alpha), LogScalar::exp(x))))
}

/// `B_n = 2n + 3 + 2 e^{2 n C_n}`.
pub fn b_cly(n: u32) -> Result<LogScalar> {
    b_alpha(n, CLY_ALPHA)
}

/// Inputs of the Cheng–Yang eigenvalue estimate `λ_{k+1} <= D_n k^{2/n} λ_1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenvalueInputs {
    /// The constant `D_n`; `n + 4` by default.
    pub d_n: f64,
    /// First nonzero eigenvalue; `n` by default (the largest admissible value).
    pub lambda1: f64,
}

impl EigenvalueInputs {
    /// `D_n = n + 4`, `λ_1 = n`.
    pub fn default_for(n: u32) -> EigenvalueInputs {
        let nf = f64::from(n);
        EigenvalueInputs {
            d_n: nf + 4.0,
            lambda1: nf,
        }
    }

    fn validate(&self, n: u32) -> Result<()> {
        if !(self.d_n > 0.0 && self.d_n.is_finite()) {
            return Err(Error::Domain("D_n must be positive"));
        }
        if !(self.lambda1 > 0.0 && self.lambda1 <= f64::from(n)) {
            return Err(Error::Domain("lambda_1 must lie in (0, n]"));
        }
        Ok(())
    }
}

/// `E_{n,ell} = alpha n C_n - alpha n C_n (n+4) (n+2 ell)^{2/n} 4^{1/n}`.
pub fn correction_exponent(n: u32, ell: u32, alpha: f64) -> Result<f64> {
    correction_exponent_with(n, ell, alpha, EigenvalueInputs::default_for(n))
}

/// The correction exponent before substituting `D_n = n + 4` and `λ_1 = n`:
/// `alpha n C_n - alpha C_n D_n (n + 2 ell)^{2/n} λ_1 4^{1/n}`.
pub fn correction_exponent_with(
    n: u32,
    ell: u32,
    alpha: f64,
    inputs: EigenvalueInputs,
) -> Result<f64> {
    check_dimension(n)?;
    check_alpha(alpha)?;
    if ell == 0 {
        return Err(Error::Domain("codimension must be at least 1"));
    }
    inputs.validate(n)?;
    let nf = f64::from(n);
    let c = cly_constant_log(n)?.to_real();
    let spread = math::powf(nf + 2.0 * f64::from(ell), 2.0 / nf) * math::powf(4.0, 1.0 / nf);
    Ok(alpha * c * (nf - inputs.d_n * inputs.lambda1 * spread))
}

/// `(2 ell - 1) / B_n`.
fn cly_excess(n: u32, ell: u32) -> Result<(LogScalar, LogScalar)> {
    let b = b_cly(n)?;
    let numerator = LogScalar::from_real(2.0 * f64::from(ell) - 1.0);
    Ok((b, log_div(numerator, b)?))
}

/// `alpha (n + ell + 2) e^{E_{n,ell}}`, the extra numerator of case (i).
fn case1_extra_numerator(params: GapParams) -> Result<LogScalar> {
    let e = correction_exponent(params.n, params.ell, params.alpha)?;
    let factor = params.alpha * (f64::from(params.n) + f64::from(params.ell) + 2.0);
    Ok(log_mul(LogScalar::from_real(factor), LogScalar::exp(e)))
}

/// Evaluates one gap statement.
pub fn gap_excess(params: GapParams, variant: Variant) -> Result<GapBound> {
    let (n, ell) = (params.n, params.ell);
    let (cly_b, cly) = cly_excess(n, ell)?;
    let ellf = f64::from(ell);
    let (params, denominator, excess) = match variant {
        Variant::Cly => (params.with_alpha(CLY_ALPHA), cly_b, cly),
        _ => {
            let alpha = params.alpha;
            let b = b_alpha(n, alpha)?;
            let numerator = match variant {
                Variant::Thm1 => LogScalar::from_real(alpha * ellf - 1.0),
                Variant::Thm2Case1 => log_add(
                    LogScalar::from_real(alpha * ellf - 1.0),
                    case1_extra_numerator(params)?,
                ),
                Variant::Thm2Case2 => LogScalar::from_real(2.0 * alpha * ellf - 1.0),
                Variant::Cly => unreachable!(),
            };
            (params, b, log_div(numerator, b)?)
        }
    };
    Ok(GapBound {
        params,
        variant,
        denominator_log: denominator,
        excess,
        ratio_vs_cly: log_div(excess, cly)?,
    })
}

/// All four variants in table order.
pub fn gap_all(params: GapParams) -> Result<[GapBound; 4]> {
    Ok([
        gap_excess(params, Variant::Cly)?,
        gap_excess(params, Variant::Thm1)?,
        gap_excess(params, Variant::Thm2Case1)?,
        gap_excess(params, Variant::Thm2Case2)?,
    ])
}

/// The smaller of the two multiplicity cases: the gap that holds without
/// knowing the multiplicity of the eigenvalue `n`.
pub fn thm2_unconditional(params: GapParams) -> Result<GapBound> {
    let a = gap_excess(params, Variant::Thm2Case1)?;
    let b = gap_excess(params, Variant::Thm2Case2)?;
    Ok(if b.excess.cmp_value(a.excess) == Ordering::Less {
        b
    } else {
        a
    })
}

/// `excess(THM2_CASE1) - excess(THM1) = alpha (n+ell+2) e^{E} / B_{n,alpha}`,
/// computed directly since it is far below the rounding level of either excess.
pub fn case1_correction(params: GapParams) -> Result<LogScalar> {
    log_div(case1_extra_numerator(params)?, b_alpha(params.n, params.alpha)?)
}

/// Lower bound on `vol(M)/vol(S^n)` implied by eigenvalue `n` having index
/// `k` in the ordered spectrum: `(k + e^t) / (e^t + n + 1 + n C_n / t)`.
pub fn min_volume_ratio_from_multiplicity(n: u32, k: u64, t: f64) -> Result<LogScalar> {
    if n < 2 {
        return Err(Error::Dimension {
            n,
            min: 2,
            max: MAX_DIMENSION,
        });
    }
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain("t must be positive"));
    }
    let et = LogScalar::exp(t);
    let nc_over_t = log_div(scaled_cly_constant_log(n)?, LogScalar::from_real(t))?;
    let numerator = log_add(LogScalar::from_real(k as f64), et);
    let denominator = log_add(
        log_add(et, LogScalar::from_real(f64::from(n) + 1.0)),
        nc_over_t,
    );
    log_div(numerator, denominator)
}

/// `(n + 4) k^{2/n} λ_1`, the upper bound on `λ_{k+1}` with `D_n = n + 4`.
pub fn cheng_yang_bound(n: u32, k: u64, lambda1: f64) -> Result<f64> {
    cheng_yang_bound_with(n, k, lambda1, f64::from(n) + 4.0)
}

/// `D_n k^{2/n} λ_1` with an explicit `D_n`.
pub fn cheng_yang_bound_with(n: u32, k: u64, lambda1: f64, d_n: f64) -> Result<f64> {
    if n < 2 {
        return Err(Error::Dimension {
            n,
            min: 2,
            max: u32::MAX,
        });
    }
    if k == 0 {
        return Err(Error::Domain("k must be at least 1"));
    }
    EigenvalueInputs { d_n, lambda1 }.validate(n)?;
    Ok(d_n * math::powf(k as f64, 2.0 / f64::from(n)) * lambda1)
}

/// Ratios of the two eigenvalue-enhanced excesses to the tuned excess.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImprovementRatios {
    /// `(n + ell + 2) e^{E_{n,ell}}`.
    pub correction: LogScalar,
    /// `alpha / (alpha ell - 1)`.
    pub case_i_coefficient: f64,
    /// Case (i) ratio minus one: `case_i_coefficient * correction`.
    pub case_i_extra: LogScalar,
    /// Case (ii) ratio `(2 alpha ell - 1) / (alpha ell - 1)`.
    pub case_ii: f64,
}

impl ImprovementRatios {
    /// Case (i) ratio as `f64`; rounds to exactly 1 whenever the correction is tiny.
    pub fn case_i(&self) -> f64 {
        1.0 + self.case_i_extra.to_real()
    }

    /// True when case (i) exceeds `1 + correction / ell`. The shared factor
    /// `correction` is positive, so only the coefficients are compared.
    pub fn case_i_beats_remark_bound(&self, ell: u32) -> bool {
        self.correction.is_positive() && self.case_i_coefficient > 1.0 / f64::from(ell)
    }
}

/// `(case (i) ratio, case (ii) ratio)` of the enhanced excesses to the tuned one.
pub fn improvement_ratio_thm2(params: GapParams) -> Result<ImprovementRatios> {
    let (n, ell, alpha) = (f64::from(params.n), f64::from(params.ell), params.alpha);
    let e = correction_exponent(params.n, params.ell, params.alpha)?;
    let correction = log_mul(LogScalar::from_real(n + ell + 2.0), LogScalar::exp(e));
    let case_i_coefficient = alpha / (alpha * ell - 1.0);
    Ok(ImprovementRatios {
        correction,
        case_i_coefficient,
        case_i_extra: correction.scale(case_i_coefficient),
        case_ii: (2.0 * alpha * ell - 1.0) / (alpha * ell - 1.0),
    })
}

/// Both factors of `excess(THM1) / excess(CLY)`:
/// `(alpha ell - 1)/(2 ell - 1)` and `B_n / B_{n,alpha}`.
pub fn improvement_factors(params: GapParams) -> Result<(f64, LogScalar)> {
    let ell = f64::from(params.ell);
    let codim = (params.alpha * ell - 1.0) / (2.0 * ell - 1.0);
    let dim = log_div(b_cly(params.n)?, b_alpha(params.n, params.alpha)?)?;
    Ok((codim, dim))
}

/// Both sides of `e^{-alpha n (n+3) C_n} < ell / (n + ell + 3)` in log form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FinalInequality {
    /// `-alpha n (n+3) C_n`.
    pub lhs_log: f64,
    /// `ln(ell / (n + ell + 3))`.
    pub rhs_log: f64,
    /// `ln((n + ell + 2) e^{E_{n,ell}})`.
    pub correction_log: f64,
    /// `ln ell`.
    pub ell_log: f64,
}

impl FinalInequality {
    /// `e^{-alpha n (n+3) C_n} < ell / (n + ell + 3)`.
    pub fn holds(&self) -> bool {
        self.lhs_log < self.rhs_log
    }

    /// `(n + ell + 2) e^{E_{n,ell}} < ell`, which makes case (i) the smaller case.
    pub fn correction_below_ell(&self) -> bool {
        self.correction_log < self.ell_log
    }
}

/// Evaluates [`FinalInequality`] at the given parameters.
pub fn final_inequality(params: GapParams) -> Result<FinalInequality> {
    let (n, ell) = (f64::from(params.n), f64::from(params.ell));
    let nc = scaled_cly_constant_log(params.n)?.to_real();
    let e = correction_exponent(params.n, params.ell, params.alpha)?;
    Ok(FinalInequality {
        lhs_log: -params.alpha * (n + 3.0) * nc,
        rhs_log: math::ln(ell / (n + ell + 3.0)),
        correction_log: math::ln(n + ell + 2.0) + e,
        ell_log: math::ln(ell),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        math::abs(a - b) / math::abs(b)
    }

    #[test]
    fn params_validation() {
        assert!(GapParams::new(1, 1, 1.43).is_err());
        assert!(GapParams::new(MAX_DIMENSION + 1, 1, 1.43).is_err());
        assert!(GapParams::new(2, 0, 1.43).is_err());
        assert!(matches!(GapParams::new(2, 1, 1.0), Err(Error::NonPositiveGap(_))));
        assert!(GapParams::new(2, 1, -1.0).is_err());
        assert!(GapParams::new(2, 1, 1.43).is_ok());
        assert!(GapParams::new(3, 2, 0.6).is_ok());
    }

    #[test]
    fn b_values_for_two_sphere() {
        let e = core::f64::consts::E;
        let cly = b_cly(2).unwrap().to_real();
        assert!(rel(cly, 7.0 + 2.0 * e.powi(4)) < 1e-14);
        assert!(math::abs(cly - 116.196) < 1e-3);
        let tuned = b_alpha(2, 1.43).unwrap().to_real();
        assert!(rel(tuned, 5.29 + 1.43 * math::exp(2.86)) < 1e-14);
        assert!(math::abs(tuned - 30.26) < 0.01);
    }

    #[test]
    fn b_cly_is_alpha_two() {
        for n in 2..=40 {
            assert_eq!(b_cly(n).unwrap(), b_alpha(n, 2.0).unwrap());
        }
    }

    #[test]
    fn b_cly_four_is_overflow_free() {
        let b = b_cly(4).unwrap();
        assert!(math::abs(b.log_mag() - (128.0 + math::ln(2.0))) < 1e-12);
    }

    #[test]
    fn correction_exponent_examples() {
        assert!(math::abs(correction_exponent(2, 1, 1.43).unwrap() + 134.42) < 1e-9);
        assert!(math::abs(correction_exponent(2, 2, 1.43).unwrap() + 203.06) < 1e-9);
    }

    #[test]
    fn cheng_yang_examples() {
        assert_eq!(cheng_yang_bound(2, 1, 2.0).unwrap(), 12.0);
        assert_eq!(cheng_yang_bound(2, 8, 2.0).unwrap(), 96.0);
        let v = cheng_yang_bound(4, 12, 4.0).unwrap();
        assert!(rel(v, 8.0 * math::sqrt(12.0) * 4.0) < 1e-15);
        assert!(cheng_yang_bound(2, 1, 2.5).is_err());
        assert!(cheng_yang_bound(2, 0, 1.0).is_err());
        assert_eq!(cheng_yang_bound_with(2, 1, 2.0, 3.0).unwrap(), 6.0);
    }

    #[test]
    fn case_two_ratio_for_two_sphere() {
        let p = GapParams::new(2, 1, 1.43).unwrap();
        let r = improvement_ratio_thm2(p).unwrap();
        assert!(math::abs(r.case_ii - 1.86 / 0.43) < 1e-12);
        assert!(r.case_i_extra.is_positive());
        assert!(math::abs(r.case_i_extra.log_mag() - (math::ln(1.43 * 5.0 / 0.43) - 134.42)) < 1e-9);
        assert_eq!(r.case_i(), 1.0);
        assert!(r.case_i_beats_remark_bound(1));
    }

    #[test]
    fn unconditional_is_case_one() {
        let p = GapParams::new(3, 2, 1.43).unwrap();
        let u = thm2_unconditional(p).unwrap();
        assert_eq!(u.variant, Variant::Thm2Case1);
    }

    #[test]
    fn cly_variant_forces_alpha_two() {
        let p = GapParams::new(5, 3, 1.43).unwrap();
        let g = gap_excess(p, Variant::Cly).unwrap();
        assert_eq!(g.params.alpha(), 2.0);
        assert_eq!(g.ratio_vs_cly, LogScalar::ONE);
    }

    #[test]
    fn degenerate_multiplicity_ratio() {
        let r = min_volume_ratio_from_multiplicity(2, 0, 1.0).unwrap().to_real();
        let e = core::f64::consts::E;
        assert!(rel(r, e / (e + 3.0 + 2.0)) < 1e-14);
        assert!(r < 1.0);
    }
}
