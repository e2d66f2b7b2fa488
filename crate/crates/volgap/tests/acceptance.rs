//! Acceptance criteria 1 to 8, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so that every criterion reports even when
//! an earlier one fails. Exits nonzero if any criterion fails.

#![allow(clippy::needless_range_loop)]

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use volgap::claims::{run_claim_suite, SuiteConfig};
use volgap::table::{gap_table, render_csv, AlphaChoice};
use volgap_core::bounds::{
    case1_correction, final_inequality, gap_all, gap_excess, improvement_ratio_thm2, GapParams,
    Variant,
};
use volgap_core::log_scalar::{log_add, log_div, log_mul, LogScalar};
use volgap_core::solver::{
    bisect, f1, f1_prime, g_prime_sign_scan, gamma_equation_residual, gamma_n, h, DEFAULT_TOL,
};
use volgap_core::special::{cly_constant, upper_incomplete_gamma_at_one, HalfInteger};
use volgap_core::spectral::{harmonic_dimension, heat_trace, trace_bound, trace_bound_excess};
use volgap_core::Sign;

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let c3 = cly_constant(3).map_err(|e| e.to_string())?;
    let c4 = cly_constant(4).map_err(|e| e.to_string())?;
    ensure((c3 - 3.58).abs() <= 0.01, || format!("C_3 = {c3}"))?;
    let rel = (c4 - 16.0).abs() / 16.0;
    ensure(rel <= 1e-9, || format!("C_4 = {c4}, relative error {rel:e}"))?;
    Ok(format!("C_3 = {c3:.12}, C_4 = {c4} (relative error {rel:.1e})"))
}

fn criterion_2() -> Outcome {
    let direct = |a: f64| 4.0 + (1.0 + 2.0 * a - 2.0 * a * a) * (2.0 * a).exp();
    let (lo, hi) = (h(1.42), h(1.44));
    ensure(lo > 0.0 && hi < 0.0, || format!("h(1.42) = {lo}, h(1.44) = {hi}"))?;
    for (a, v, want) in [(1.42, lo, 0.699), (1.44, hi, -0.760)] {
        ensure((v - want).abs() <= 0.01 && (direct(a) - want).abs() <= 0.01, || {
            format!("h({a}) = {v}, direct {} vs {want}", direct(a))
        })?;
    }
    let r = bisect(h, 1.42, 1.44, DEFAULT_TOL).map_err(|e| e.to_string())?;
    ensure(r.root > 1.42 && r.root < 1.44, || format!("root {}", r.root))?;
    ensure(r.residual.abs() <= 1e-9 && direct(r.root).abs() <= 1e-9, || {
        format!("residual {:e}", r.residual)
    })?;
    Ok(format!(
        "h(1.42) = {lo:.4}, h(1.44) = {hi:.4}, root {:.10} with residual {:.1e}",
        r.root, r.residual
    ))
}

fn criterion_3() -> Outcome {
    let p = GapParams::new(2, 1, 1.43).map_err(|e| e.to_string())?;
    let ratio = gap_excess(p, Variant::Thm1)
        .map_err(|e| e.to_string())?
        .ratio_vs_cly
        .to_real();
    let plain = 0.43 * (7.0 + 2.0 * 4f64.exp()) / (5.29 + 1.43 * 2.86f64.exp());
    ensure(ratio > 1.65, || format!("ratio {ratio}"))?;
    ensure((ratio - plain).abs() <= 1e-4, || format!("ratio {ratio} vs plain {plain}"))?;
    Ok(format!(
        "ratio {ratio:.10} > 1.65, plain arithmetic {plain:.10}, difference {:.1e}",
        (ratio - plain).abs()
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let mut points = 0;
    for n in 2..=10 {
        for i in 0..=36 {
            let t = 1.0 + 0.25 * f64::from(i);
            let r = heat_trace(n, t, 1e-300).map_err(|e| e.to_string())?;
            let excess = trace_bound_excess(n, t).map_err(|e| e.to_string())?;
            let bound = trace_bound(n, t).map_err(|e| e.to_string())?;
            ensure(r.nonconstant + r.tail_bound <= excess && r.value <= bound, || {
                format!("n = {n}, t = {t}: {} + tail {} vs {}", r.value, r.tail_bound, bound)
            })?;
            points += 1;
        }
    }
    Ok(format!(
        "{points} points (n = 2..10, t = 1..10 step 0.25), truncation tail included, {:.0?}",
        start.elapsed()
    ))
}

fn criterion_5() -> Outcome {
    let g2 = gamma_n(2, DEFAULT_TOL).map_err(|e| e.to_string())?;
    ensure(g2.root > 1.3, || format!("gamma_2 = {}", g2.root))?;
    let mut worst = 0f64;
    for n in 2..=30 {
        let g = gamma_n(n, DEFAULT_TOL).map_err(|e| e.to_string())?;
        if n >= 3 {
            ensure(g.root > 1.0 && g.root <= 1.3, || format!("gamma_{n} = {}", g.root))?;
        }
        let res = gamma_equation_residual(n, g.root).map_err(|e| e.to_string())?.to_real();
        ensure(res.abs() <= 1e-9, || format!("n = {n}: residual {res:e}"))?;
        worst = worst.max(res.abs());
    }
    Ok(format!(
        "gamma_2 = {:.10}, 1 < gamma_n <= 1.3 on 3..30, max residual {worst:.1e}",
        g2.root
    ))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let alpha = 1.43;
    let (k165, two) = (LogScalar::from_real(1.65), LogScalar::from_real(2.0));
    let mut points = 0;
    let mut max_drift = 0f64;
    let mut min_gain: Option<LogScalar> = None;
    for n in 2..=30 {
        for ell in 1..=30 {
            let at = || format!("n = {n}, ell = {ell}");
            let p = GapParams::new(n, ell, alpha).map_err(|e| e.to_string())?;
            let [cly, thm1, case1, case2] = gap_all(p).map_err(|e| e.to_string())?;
            for b in [cly, thm1, case1, case2] {
                ensure(b.excess.is_finite_log() && b.denominator_log.is_finite_log(), || {
                    format!("{}: {} not finite", at(), b.variant.name())
                })?;
            }
            ensure(thm1.excess > log_mul(k165, cly.excess), || format!("{}: THM1 vs 1.65 CLY", at()))?;
            // The case (i) gain is far below the resolution of the stored
            // excess, so strictness comes from the ratio minus one, computed
            // on its own; the stored values only have to agree to rounding.
            let extra = case1_correction(p).map_err(|e| e.to_string())?;
            let ratios = improvement_ratio_thm2(p).map_err(|e| e.to_string())?;
            let drift = rel_gap(thm1.excess, case1.excess);
            max_drift = max_drift.max(drift);
            if min_gain.is_none_or(|m| ratios.case_i_extra < m) {
                min_gain = Some(ratios.case_i_extra);
            }
            ensure(
                extra.is_positive() && ratios.case_i_extra.is_positive() && drift <= 4.0 * f64::EPSILON,
                || format!("{}: THM2_CASE1 vs THM1, drift {drift:e}", at()),
            )?;
            ensure(case2.excess > log_mul(two, thm1.excess), || format!("{}: THM2_CASE2 vs 2 THM1", at()))?;
            let f = final_inequality(p).map_err(|e| e.to_string())?;
            ensure(f.holds(), || format!("{}: final inequality", at()))?;
            points += 1;
        }
    }
    Ok(format!(
        "{points} grid points, all four orderings hold; THM2_CASE1 / THM1 - 1 >= {}, stored drift <= {max_drift:.1e}, {:.0?}",
        volgap::render::signed_power(min_gain.unwrap_or(LogScalar::ZERO)),
        start.elapsed()
    ))
}

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn rel_gap(a: LogScalar, b: LogScalar) -> f64 {
    if a == b {
        return 0.0;
    }
    log_div(a - b, a).map_or(f64::INFINITY, |r| r.to_real().abs())
}

fn criterion_7() -> Outcome {
    // Incomplete gamma recurrence: Gamma(s+1, 1) = s Gamma(s, 1) + 1/e.
    for twice in 1..=98 {
        let s = HalfInteger::new(twice).map_err(|e| e.to_string())?;
        let next = HalfInteger::new(twice + 2).map_err(|e| e.to_string())?;
        let lhs = upper_incomplete_gamma_at_one(next).map_err(|e| e.to_string())?;
        let rhs = s.value() * upper_incomplete_gamma_at_one(s).map_err(|e| e.to_string())?
            + (-1f64).exp();
        ensure((lhs - rhs).abs() <= 1e-10 * lhs, || format!("recurrence at s = {}", s.value()))?;
    }

    // f1' against central differences.
    let step = 1e-6;
    for a in [1.1, 1.43, 1.8] {
        let exact = f1_prime(a, 2, 1).map_err(|e| e.to_string())?.to_real();
        let up = f1(a + step, 2, 1).map_err(|e| e.to_string())?.to_real();
        let down = f1(a - step, 2, 1).map_err(|e| e.to_string())?.to_real();
        let fd = (up - down) / (2.0 * step);
        ensure((fd - exact).abs() <= 1e-6 * exact.abs(), || format!("f1' at {a}: {fd} vs {exact}"))?;
    }

    // g' sign scan.
    let grid: Vec<f64> = (0..=40).map(|i| 1.0 + 0.05 * f64::from(i)).collect();
    for n in 2..=30 {
        for s in g_prime_sign_scan(n, &grid).map_err(|e| e.to_string())? {
            ensure(s.sign == Some(Sign::Negative), || format!("g' at n = {n}, beta = {}", s.beta))?;
        }
    }

    // Multiplicities against the monomial-count recurrence.
    let (n_max, k_max) = (8usize, 20usize);
    let mut m = vec![vec![0u128; k_max + 1]; n_max + 1];
    m[1][0] = 1;
    for k in 1..=k_max {
        m[1][k] = 2;
    }
    for n in 2..=n_max {
        m[n][0] = 1;
        for k in 1..=k_max {
            m[n][k] = m[n - 1][k] + m[n][k - 1];
        }
    }
    for n in 2..=n_max {
        for k in 0..=k_max {
            let got = harmonic_dimension(n as u32, k as u32);
            ensure(got == m[n][k].into(), || format!("multiplicity n = {n}, k = {k}: {got}"))?;
        }
    }

    // LogScalar round trip and field laws.
    runner(2000)
        .run(&(1e-300f64..1e300, any::<bool>()), |(x, neg)| {
            let x = if neg { -x } else { x };
            let y = LogScalar::from_real(x).to_real();
            let ulp = f64::from_bits(x.abs().to_bits() + 1) - x.abs();
            prop_assert!((y - x).abs() <= ulp, "{x:e} -> {y:e}");
            Ok(())
        })
        .map_err(|e| format!("round trip: {e}"))?;
    let scalar = (-700f64..700.0, any::<bool>()).prop_map(|(l, neg)| {
        LogScalar::new(if neg { Sign::Negative } else { Sign::Positive }, l)
    });
    let positive = (-700f64..700.0).prop_map(|l| LogScalar::new(Sign::Positive, l));
    runner(500)
        .run(&(scalar.clone(), scalar.clone(), scalar), |(a, b, c)| {
            prop_assert_eq!(log_mul(a, b), log_mul(b, a));
            prop_assert_eq!(log_add(a, b), log_add(b, a));
            let left = log_mul(log_mul(a, b), c);
            let right = log_mul(a, log_mul(b, c));
            prop_assert!(rel_gap(left, right) <= f64::EPSILON);
            let dist = log_add(log_mul(a, b), log_mul(a, c));
            let fact = log_mul(a, log_add(b, c));
            let scale = log_mul(a.abs(), log_add(b.abs(), c.abs()));
            let gap = log_div((dist - fact).abs(), scale).map_or(0.0, |r| r.to_real());
            prop_assert!(gap <= 4.0 * f64::EPSILON, "distributivity gap {gap:e}");
            Ok(())
        })
        .map_err(|e| format!("field laws: {e}"))?;
    runner(500)
        .run(&(positive.clone(), positive.clone(), positive), |(a, b, c)| {
            let left = log_add(log_add(a, b), c);
            let right = log_add(a, log_add(b, c));
            prop_assert!(rel_gap(left, right) <= f64::EPSILON);
            Ok(())
        })
        .map_err(|e| format!("additive associativity: {e}"))?;

    // Deterministic outputs.
    let cfg = SuiteConfig::default();
    let a = serde_json::to_string(&run_claim_suite(&cfg).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let b = serde_json::to_string(&run_claim_suite(&cfg).map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    ensure(a == b, || "claim suite output differs between runs".into())?;
    let table = || gap_table((2, 12), (1, 12), AlphaChoice::Auto, DEFAULT_TOL).map(|r| render_csv(&r));
    ensure(table().map_err(|e| e.to_string())? == table().map_err(|e| e.to_string())?, || {
        "table output differs between runs".into()
    })?;

    Ok("recurrence, f1', g' scan, multiplicities, LogScalar laws, determinism".into())
}

fn criterion_8() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_volgap");
    let clean = Command::new(bin).arg("verify").output().map_err(|e| e.to_string())?;
    ensure(clean.status.code() == Some(0), || format!("default verify exited {:?}", clean.status.code()))?;
    let bad = Command::new(bin)
        .args(["verify", "--perturb-cn", "1.1"])
        .output()
        .map_err(|e| e.to_string())?;
    let stdout = String::from_utf8_lossy(&bad.stdout);
    let failed: Vec<&str> = stdout
        .lines()
        .filter_map(|l| l.strip_prefix("FAIL"))
        .map(str::trim)
        .collect();
    ensure(bad.status.code().is_some_and(|c| c != 0), || "perturbed verify exited 0".into())?;
    ensure(failed.contains(&"C4_EXACT"), || format!("perturbed run failed {failed:?}"))?;
    Ok(format!("default exits 0; C_n scaled by 1.1 exits {} with FAIL {}", bad.status.code().unwrap_or(-1), failed.join(", ")))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 8] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
    ];
    let mut failures = 0;
    for (id, run) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|_| Err("panicked".to_owned()));
        match outcome {
            Ok(detail) => println!("criterion {id}: PASS  {detail}"),
            Err(detail) => {
                failures += 1;
                println!("criterion {id}: FAIL  {detail}");
            }
        }
    }
    println!("{} of 8 criteria passed", 8 - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
