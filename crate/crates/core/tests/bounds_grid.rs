use std::f64::consts::E;

use volgap_core::bounds::{
    b_alpha, b_cly, case1_correction, cheng_yang_bound, correction_exponent, final_inequality,
    gap_all, gap_excess, improvement_factors, improvement_ratio_thm2,
    min_volume_ratio_from_multiplicity, tuned_exponent, GapParams, Variant, DEFAULT_ALPHA,
};
use volgap_core::log_scalar::{log_div, log_mul, LogScalar};
use volgap_core::special::cly_constant;

fn params(n: u32, ell: u32) -> GapParams {
    GapParams::new(n, ell, DEFAULT_ALPHA).unwrap()
}

fn grid() -> impl Iterator<Item = (u32, u32)> {
    (2..=30).flat_map(|n| (1..=30).map(move |ell| (n, ell)))
}

#[test]
fn denominators_in_plain_arithmetic() {
    let b = b_cly(2).unwrap().to_real();
    assert!((b - (7.0 + 2.0 * E.powi(4))).abs() < 1e-12);
    assert!((b - 116.196).abs() < 1e-3);
    let b = b_alpha(2, 1.43).unwrap().to_real();
    assert!((b - (5.29 + 1.43 * 2.86f64.exp())).abs() < 1e-12);
    assert!((b - 30.26).abs() < 0.01);
    let c3 = cly_constant(3).unwrap();
    let b = b_alpha(3, 1.0).unwrap().to_real();
    assert!((b - (5.0 + (3.0 * c3).exp())).abs() / b < 1e-13);
    let b = b_cly(3).unwrap().to_real();
    assert!((b - (9.0 + 2.0 * (6.0 * c3).exp())).abs() / b < 1e-13);
    // rounding C_3 to 3.58 moves e^{6 C_3} by 1.6%, so compare log magnitudes
    let approx = (9.0 + 2.0 * (6.0 * 3.58f64).exp()).ln();
    assert!((b.ln() - approx).abs() / approx < 0.01, "{b} vs {approx}");
}

#[test]
fn cly_denominator_at_four_is_log_only() {
    let b = b_cly(4).unwrap();
    assert!((b.log_mag() - (2f64.ln() + 128.0)).abs() < 1e-12);
}

#[test]
fn cly_is_alpha_two() {
    for n in 2..=160 {
        assert_eq!(b_alpha(n, 2.0).unwrap(), b_cly(n).unwrap());
    }
}

#[test]
fn correction_exponent_values() {
    assert!((correction_exponent(2, 1, 1.43).unwrap() + 134.42).abs() < 1e-10);
    assert!((correction_exponent(2, 2, 1.43).unwrap() + 203.06).abs() < 1e-10);
    for (n, ell) in grid() {
        let e = correction_exponent(n, ell, DEFAULT_ALPHA).unwrap();
        let c = cly_constant(n).unwrap();
        let nf = f64::from(n);
        assert!(e < -DEFAULT_ALPHA * nf * (nf + 3.0) * c, "n = {n}, ell = {ell}");
    }
}

#[test]
fn two_sphere_excesses() {
    let [cly, thm1, case1, case2] = gap_all(params(2, 1)).unwrap();
    assert!((cly.excess.to_real() - 1.0 / (7.0 + 2.0 * E.powi(4))).abs() < 1e-15);
    assert!((cly.excess.to_real() - 0.008_606_2).abs() < 1e-7);
    assert!((thm1.excess.to_real() - 0.43 / (5.29 + 1.43 * 2.86f64.exp())).abs() < 1e-15);
    assert!((thm1.excess.to_real() - 0.014_211).abs() < 1e-6);
    assert_eq!(cly.params.alpha(), 2.0);
    let ratio = thm1.ratio_vs_cly.to_real();
    let plain = 0.43 * (7.0 + 2.0 * E.powi(4)) / (5.29 + 1.43 * 2.86f64.exp());
    assert!((ratio - plain).abs() < 1e-12);
    assert!((ratio - 1.651_171).abs() < 1e-6);
    assert!(ratio > 1.65);
    assert!(case1_correction(params(2, 1)).unwrap().is_positive());
    assert!(case1.excess.to_real() >= thm1.excess.to_real());
    assert!((case2.excess.to_real() - 1.86 / (5.29 + 1.43 * 2.86f64.exp())).abs() < 1e-15);
}

#[test]
fn gap_orderings_on_grid() {
    let factor = LogScalar::from_real(1.65);
    let two = LogScalar::from_real(2.0);
    for (n, ell) in grid() {
        let [cly, thm1, case1, case2] = gap_all(params(n, ell)).unwrap();
        for b in [&cly, &thm1, &case1, &case2] {
            assert!(b.excess.is_positive() && b.excess.is_finite_log());
            assert!(b.denominator_log.is_finite_log());
        }
        assert!(thm1.excess > log_mul(factor, cly.excess), "n = {n}, ell = {ell}");
        // case (i) adds a positive term that is often far below one ulp of THM1
        let extra = case1_correction(params(n, ell)).unwrap();
        assert!(extra.is_positive() && extra.is_finite_log());
        let drift = log_div(case1.excess - thm1.excess, thm1.excess).unwrap().to_real();
        assert!(drift.abs() <= f64::EPSILON || drift > 0.0);
        assert!(case2.excess > log_mul(two, thm1.excess), "n = {n}, ell = {ell}");
        assert!(case1.excess <= case2.excess);
    }
}

#[test]
fn final_inequality_on_grid() {
    for (n, ell) in grid() {
        let f = final_inequality(params(n, ell)).unwrap();
        assert!(f.holds(), "n = {n}, ell = {ell}: {f:?}");
        assert!(f.correction_below_ell(), "n = {n}, ell = {ell}");
        // the exponent comparison above is what carries the bound
        let nc = f64::from(n) * cly_constant(n).unwrap();
        let lhs = -DEFAULT_ALPHA * (f64::from(n) + 3.0) * nc;
        assert!((f.lhs_log - lhs).abs() <= 1e-13 * lhs.abs());
    }
}

#[test]
fn improvement_is_monotone() {
    let ratio = |n, ell| gap_excess(params(n, ell), Variant::Thm1).unwrap().ratio_vs_cly;
    for ell in 1..=30 {
        for n in 2..30 {
            assert!(ratio(n + 1, ell) >= ratio(n, ell), "n = {n}, ell = {ell}");
        }
    }
    for n in 2..=30 {
        for ell in 1..30 {
            assert!(ratio(n, ell + 1) >= ratio(n, ell), "n = {n}, ell = {ell}");
        }
    }
}

#[test]
fn improvement_factors_multiply_to_ratio() {
    for (n, ell) in grid() {
        let (codim, dim) = improvement_factors(params(n, ell)).unwrap();
        let product = dim.scale(codim);
        let ratio = gap_excess(params(n, ell), Variant::Thm1).unwrap().ratio_vs_cly;
        let gap = log_div(product - ratio, ratio).unwrap().to_real().abs();
        assert!(gap < 1e-12, "n = {n}, ell = {ell}");
    }
}

#[test]
fn multiplicity_identity() {
    for n in 2..=30 {
        for ell in 1..=30 {
            let t = tuned_exponent(n, DEFAULT_ALPHA).unwrap();
            let k = u64::from(n + ell + 1);
            let lhs = min_volume_ratio_from_multiplicity(n, k, t).unwrap();
            let thm1 = gap_excess(params(n, ell), Variant::Thm1).unwrap();
            let rhs = LogScalar::ONE + thm1.excess;
            let gap = log_div(lhs - rhs, rhs).unwrap().to_real().abs();
            assert!(gap <= 1e-12, "n = {n}, ell = {ell}: {gap:e}");
        }
    }
    let t = tuned_exponent(2, 1.43).unwrap();
    assert!((t - 2.86).abs() < 1e-14);
    let five = min_volume_ratio_from_multiplicity(2, 5, t).unwrap().to_real();
    assert!((five - (1.0 + 1.86 / (5.29 + 1.43 * 2.86f64.exp()))).abs() < 1e-14);
    let degenerate = min_volume_ratio_from_multiplicity(2, 0, 1.0).unwrap().to_real();
    assert!((degenerate - E / (E + 3.0 + 2.0)).abs() < 1e-15);
    assert!(degenerate < 1.0);
}

#[test]
fn cheng_yang_values() {
    assert_eq!(cheng_yang_bound(2, 1, 2.0).unwrap(), 12.0);
    assert!((cheng_yang_bound(2, 8, 2.0).unwrap() - 96.0).abs() < 1e-12);
    assert!((cheng_yang_bound(4, 12, 4.0).unwrap() - 8.0 * 12f64.sqrt() * 4.0).abs() < 1e-12);
    assert!(cheng_yang_bound(2, 1, 3.0).is_err());
    assert!(cheng_yang_bound(2, 0, 1.0).is_err());
}

#[test]
fn improvement_ratios() {
    let r = improvement_ratio_thm2(params(2, 1)).unwrap();
    assert!((r.case_ii - 1.86 / 0.43).abs() < 1e-12);
    assert!((r.case_ii - 4.326).abs() < 1e-3);
    let want = (1.43f64 * 5.0 / 0.43).ln() - 134.42;
    assert!((r.case_i_extra.log_mag() - want).abs() < 1e-10);
    for (n, ell) in grid() {
        let r = improvement_ratio_thm2(params(n, ell)).unwrap();
        assert!(r.case_ii > 2.0);
        assert!(r.case_i_extra.is_positive());
        assert!(r.case_i_beats_remark_bound(ell), "n = {n}, ell = {ell}");
        assert!(r.case_i_extra > r.correction.scale(1.0 / f64::from(ell)));
    }
}
