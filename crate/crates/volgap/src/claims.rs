//! The claim suite: every numeric assertion behind the gap bounds, checked
//! on explicit finite grids.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use volgap_core::bounds::{
    case1_correction, correction_exponent, final_inequality, gap_all, gap_excess,
    improvement_ratio_thm2, min_volume_ratio_from_multiplicity, tuned_exponent, GapParams,
    Variant, DEFAULT_ALPHA, MAX_DIMENSION,
};
use volgap_core::log_scalar::{log_div, log_mul};
use volgap_core::solver::{
    g, g_prime_sign_scan, gamma_n, h, lemn_rhs_lower_bound, optimal_alpha, phi3_threshold_with,
    psi_decreasing_check, tilde_gamma_with,
};
use volgap_core::special::{cly_constant, cly_constant_log};
use volgap_core::spectral::{heat_trace, trace_bound_excess};
use volgap_core::{LogScalar, Sign};

use crate::error::CliError;
use crate::render;

/// Largest codimension accepted by the suite and the table.
pub const MAX_CODIMENSION: u32 = 200;

/// Residual threshold for every root the suite reports.
pub const ROOT_RESIDUAL_TOL: f64 = 1e-9;

/// Truncation tolerance for heat traces compared against `e^{-nt}`-sized bounds.
const TRACE_EPS: f64 = 1e-300;

/// Outcome of one claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    /// The claim holds on the tested grid.
    Pass,
    /// The claim fails somewhere; see the witnesses.
    Fail,
    /// The configured grid leaves nothing to test.
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

/// A named number; log-domain values are kept as a signed base-10 logarithm.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    /// Name of the quantity.
    pub name: String,
    /// Its value.
    #[serde(flatten)]
    pub value: WitnessValue,
}

/// Payload of a [`Witness`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(untagged)]
pub enum WitnessValue {
    /// An ordinary real number.
    Real {
        /// The number.
        value: f64,
    },
    /// `sign * 10^log10`.
    Log {
        /// -1, 0 or 1.
        sign: i8,
        /// Base-10 logarithm of the magnitude.
        log10: f64,
    },
}

impl Witness {
    /// A plain real witness.
    pub fn real(name: impl Into<String>, value: f64) -> Witness {
        Witness {
            name: name.into(),
            value: WitnessValue::Real { value },
        }
    }

    /// A log-domain witness.
    pub fn log(name: impl Into<String>, v: LogScalar) -> Witness {
        let (sign, log10) = v.signed_log10();
        Witness {
            name: name.into(),
            value: WitnessValue::Log {
                sign: sign.as_i8(),
                log10,
            },
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value {
            WitnessValue::Real { value } => write!(f, "{} = {}", self.name, render::sig(value)),
            WitnessValue::Log { sign, log10 } => {
                let s = match sign {
                    0 => return write!(f, "{} = 0", self.name),
                    s if s < 0 => "-",
                    _ => "",
                };
                write!(f, "{} = {s}10^{}", self.name, render::sig(log10))
            }
        }
    }
}

/// Verdict for one claim.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClaimVerdict {
    /// Stable key, e.g. `RATIO_165`.
    pub claim_id: &'static str,
    /// What is being asserted.
    pub anchor: &'static str,
    /// Outcome.
    pub status: Status,
    /// Computed values backing the outcome.
    pub witnesses: Vec<Witness>,
    /// Numerical tolerance of the comparison (0 for sign checks).
    pub tolerance: f64,
    /// The finite grid the claim was checked on.
    pub grid_note: String,
    /// Evaluation error, if one stopped the check.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// Grid bounds and tolerances for [`run_claim_suite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SuiteConfig {
    /// Dimensions for the grid claims, inclusive.
    pub n_range: (u32, u32),
    /// Codimensions for the grid claims, inclusive.
    pub ell_range: (u32, u32),
    /// Tuning parameter of the tuned and enhanced gaps.
    pub alpha: f64,
    /// Absolute tolerance of the root finders.
    pub tol: f64,
    /// Factor applied to every `C_n` the suite reads directly. Always 1
    /// outside negative-path tests.
    pub cn_scale: f64,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            n_range: (2, 30),
            ell_range: (1, 30),
            alpha: DEFAULT_ALPHA,
            tol: 1e-12,
            cn_scale: 1.0,
        }
    }
}

impl SuiteConfig {
    /// Rejects grids and tolerances the suite cannot evaluate.
    pub fn validate(&self) -> Result<(), CliError> {
        let (n_lo, n_hi) = self.n_range;
        let (l_lo, l_hi) = self.ell_range;
        if n_lo > n_hi || l_lo > l_hi {
            return Err(CliError::usage("empty range"));
        }
        if n_lo < 2 || n_hi > MAX_DIMENSION {
            return Err(CliError::usage(format!(
                "n range must lie in [2, {MAX_DIMENSION}]; exp(alpha n C_n) leaves the log-domain range beyond"
            )));
        }
        if l_lo < 1 || l_hi > MAX_CODIMENSION {
            return Err(CliError::usage(format!("ell range must lie in [1, {MAX_CODIMENSION}]")));
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return Err(CliError::usage("alpha must be a positive number"));
        }
        if self.alpha * f64::from(l_lo) <= 1.0 {
            return Err(CliError::usage("alpha * ell must exceed 1 on the whole ell range"));
        }
        if !(self.tol > 0.0 && self.tol <= 1e-6) {
            return Err(CliError::usage("tolerance must lie in (0, 1e-6]"));
        }
        if !(self.cn_scale > 0.0 && self.cn_scale.is_finite()) {
            return Err(CliError::usage("C_n perturbation factor must be positive"));
        }
        Ok(())
    }

    fn grid(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let (l_lo, l_hi) = self.ell_range;
        (self.n_range.0..=self.n_range.1).flat_map(move |n| (l_lo..=l_hi).map(move |ell| (n, ell)))
    }

    fn grid_size(&self) -> u64 {
        u64::from(self.n_range.1 - self.n_range.0 + 1) * u64::from(self.ell_range.1 - self.ell_range.0 + 1)
    }

    fn grid_note(&self) -> String {
        format!(
            "n = {}..{}, ell = {}..{}, alpha = {} ({} points); asserted for every n >= 2, ell >= 1",
            self.n_range.0,
            self.n_range.1,
            self.ell_range.0,
            self.ell_range.1,
            render::sig(self.alpha),
            self.grid_size()
        )
    }

    fn params(&self, n: u32, ell: u32) -> volgap_core::Result<GapParams> {
        GapParams::new(n, ell, self.alpha)
    }

    fn cn(&self, n: u32) -> volgap_core::Result<f64> {
        Ok(self.cn_scale * cly_constant(n)?)
    }
}

struct Check {
    /// `None` means nothing was tested.
    pass: Option<bool>,
    witnesses: Vec<Witness>,
}

impl Check {
    fn new(pass: bool, witnesses: Vec<Witness>) -> Check {
        Check {
            pass: Some(pass),
            witnesses,
        }
    }
}

struct Claim {
    id: &'static str,
    anchor: &'static str,
    tolerance: f64,
    grid_note: String,
}

impl Claim {
    fn new(id: &'static str, anchor: &'static str, tolerance: f64, grid_note: impl Into<String>) -> Claim {
        Claim {
            id,
            anchor,
            tolerance,
            grid_note: grid_note.into(),
        }
    }

    fn run(self, body: impl FnOnce() -> volgap_core::Result<Check>) -> ClaimVerdict {
        let (status, mut witnesses, error) = match body() {
            Ok(Check { pass: Some(true), witnesses }) => (Status::Pass, witnesses, None),
            Ok(Check { pass: Some(false), witnesses }) => (Status::Fail, witnesses, None),
            Ok(Check { pass: None, witnesses }) => (Status::Skipped, witnesses, None),
            Err(e) => (Status::Fail, Vec::new(), Some(e.to_string())),
        };
        if status == Status::Fail && witnesses.is_empty() {
            witnesses.push(Witness::real("failed_evaluations", 1.0));
        }
        ClaimVerdict {
            claim_id: self.id,
            anchor: self.anchor,
            status,
            witnesses,
            tolerance: self.tolerance,
            grid_note: self.grid_note,
            error,
        }
    }
}

fn point(n: u32, ell: u32) -> [Witness; 2] {
    [Witness::real("at_n", f64::from(n)), Witness::real("at_ell", f64::from(ell))]
}

fn alpha_star_bracket(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new(
        "ALPHA_STAR_BRACKET",
        "the maximizer of f1 for (n, ell) = (2, 1) is the zero of h and lies in (1.42, 1.44)",
        ROOT_RESIDUAL_TOL,
        format!("single point (n, ell) = (2, 1); root tolerance {}", render::sig(cfg.tol)),
    )
    .run(|| {
        let r = optimal_alpha(2, 1, cfg.tol)?;
        let pass = r.root > 1.42 && r.root < 1.44 && r.residual.abs() <= ROOT_RESIDUAL_TOL;
        Ok(Check::new(
            pass,
            vec![
                Witness::real("alpha_star", r.root),
                Witness::real("bracket_lo", r.bracket_lo),
                Witness::real("bracket_hi", r.bracket_hi),
                Witness::real("residual", r.residual),
                Witness::real("h_at_alpha_star", h(r.root)),
                Witness::real("iterations", f64::from(r.iterations)),
            ],
        ))
    })
}

fn c3_approx(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new("C3_APPROX", "C_3 is approximately 3.58", 0.01, "single point n = 3").run(|| {
        let c3 = cfg.cn(3)?;
        Ok(Check::new(
            (c3 - 3.58).abs() <= 0.01,
            vec![Witness::real("C_3", c3), Witness::real("deviation", c3 - 3.58)],
        ))
    })
}

fn c3_gt_10_3(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new("C3_GT_10_3", "C_3 > 10/3, the weaker fact the n = 3 case needs", 0.0, "single point n = 3")
        .run(|| {
            let c3 = cfg.cn(3)?;
            Ok(Check::new(c3 > 10.0 / 3.0, vec![Witness::real("C_3", c3)]))
        })
}

fn c4_exact(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new("C4_EXACT", "C_4 = 16", 1e-9, "single point n = 4; relative tolerance").run(|| {
        let c4 = cfg.cn(4)?;
        let rel = (c4 - 16.0).abs() / 16.0;
        Ok(Check::new(
            rel <= 1e-9,
            vec![Witness::real("C_4", c4), Witness::real("relative_error", rel)],
        ))
    })
}

fn cn_monotone(cfg: &SuiteConfig) -> ClaimVerdict {
    const LO: u32 = 4;
    const HI: u32 = 200;
    Claim::new(
        "CN_MONOTONE",
        "C_n is increasing for n >= 4",
        0.0,
        format!("n = {LO}..{HI}, compared in the log domain; asserted for every n >= 4"),
    )
    .run(|| {
        let logs = (LO..=HI)
            .map(|n| Ok(cly_constant_log(n)?.log_mag() + cfg.cn_scale.ln()))
            .collect::<volgap_core::Result<Vec<f64>>>()?;
        let steps: Vec<f64> = logs.windows(2).map(|w| w[1] - w[0]).collect();
        let (worst_at, worst) = steps
            .iter()
            .copied()
            .enumerate()
            .min_by(|a, b| a.1.total_cmp(&b.1))
            .expect("range has at least two points");
        Ok(Check::new(
            worst > 0.0,
            vec![
                Witness::log("C_4", LogScalar::exp(logs[0])),
                Witness::log("C_200", LogScalar::exp(logs[logs.len() - 1])),
                Witness::real("min_log_step", worst),
                Witness::real("min_log_step_at_n", f64::from(LO) + worst_at as f64),
            ],
        ))
    })
}

fn e_bound(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new(
        "E_BOUND",
        "E_{n,ell} < -alpha n (n+3) C_n",
        0.0,
        cfg.grid_note(),
    )
    .run(|| {
        let mut worst: Option<(f64, u32, u32)> = None;
        for (n, ell) in cfg.grid() {
            let e = correction_exponent(n, ell, cfg.alpha)?;
            let nf = f64::from(n);
            let reference = cfg.alpha * nf * (nf + 3.0) * cly_constant(n)?;
            // E / (-alpha n (n+3) C_n) > 1 is the claim
            let ratio = -e / reference;
            if worst.is_none_or(|(w, _, _)| ratio < w) {
                worst = Some((ratio, n, ell));
            }
        }
        let (ratio, n, ell) = worst.expect("validated grid is non-empty");
        let mut w = vec![Witness::real("min_ratio_E_over_bound", ratio)];
        w.extend(point(n, ell));
        Ok(Check::new(ratio > 1.0, w))
    })
}

fn final_ineq(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new(
        "FINAL_INEQ",
        "exp(-alpha n (n+3) C_n) < ell / (n + ell + 3), hence (n + ell + 2) e^{E_{n,ell}} < ell",
        0.0,
        format!("{}; compared as logarithms", cfg.grid_note()),
    )
    .run(|| {
        let mut worst_main = (f64::NEG_INFINITY, 0, 0);
        let mut worst_corr = (f64::NEG_INFINITY, 0, 0);
        let mut fails = 0u64;
        for (n, ell) in cfg.grid() {
            let f = final_inequality(cfg.params(n, ell)?)?;
            if !(f.holds() && f.correction_below_ell()) {
                fails += 1;
            }
            let main = f.lhs_log - f.rhs_log;
            if main > worst_main.0 {
                worst_main = (main, n, ell);
            }
            let corr = f.correction_log - f.ell_log;
            if corr > worst_corr.0 {
                worst_corr = (corr, n, ell);
            }
        }
        Ok(Check::new(
            fails == 0,
            vec![
                Witness::real("max_log_lhs_minus_log_rhs", worst_main.0),
                Witness::real("max_at_n", f64::from(worst_main.1)),
                Witness::real("max_at_ell", f64::from(worst_main.2)),
                Witness::real("max_log_correction_minus_log_ell", worst_corr.0),
                Witness::real("violations", fails as f64),
            ],
        ))
    })
}

fn gamma2_gt_13(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new(
        "GAMMA2_GT_13",
        "the critical point gamma_2 of f2 exceeds 1.3",
        ROOT_RESIDUAL_TOL,
        "single point n = 2",
    )
    .run(|| {
        let r = gamma_n(2, cfg.tol)?;
        Ok(Check::new(
            r.root > 1.3 && r.residual.abs() <= ROOT_RESIDUAL_TOL,
            vec![Witness::real("gamma_2", r.root), Witness::real("residual", r.residual)],
        ))
    })
}

fn gamman_le_13(cfg: &SuiteConfig) -> ClaimVerdict {
    let hi = cfg.n_range.1;
    Claim::new(
        "GAMMAN_LE_13",
        "1 < gamma_n <= 1.3 for n >= 3, each root solving n + 2 = (gamma^2 n C_n - gamma n C_n - 1) exp(gamma n C_n)",
        ROOT_RESIDUAL_TOL,
        format!("n = 3..{hi}; asserted for every n >= 3"),
    )
    .run(|| {
        if hi < 3 {
            return Ok(Check {
                pass: None,
                witnesses: Vec::new(),
            });
        }
        let mut max_gamma = (f64::NEG_INFINITY, 0);
        let mut min_gamma = f64::INFINITY;
        let mut max_residual = 0f64;
        for n in 3..=hi {
            let r = gamma_n(n, cfg.tol)?;
            if r.root > max_gamma.0 {
                max_gamma = (r.root, n);
            }
            min_gamma = min_gamma.min(r.root);
            max_residual = max_residual.max(r.residual.abs());
        }
        Ok(Check::new(
            min_gamma > 1.0 && max_gamma.0 <= 1.3 && max_residual <= ROOT_RESIDUAL_TOL,
            vec![
                Witness::real("max_gamma", max_gamma.0),
                Witness::real("max_gamma_at_n", f64::from(max_gamma.1)),
                Witness::real("min_gamma", min_gamma),
                Witness::real("max_abs_residual", max_residual),
            ],
        ))
    })
}

fn gap_order_thm1_cly(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new(
        "GAP_ORDER_THM1_CLY",
        "the tuned excess exceeds 1.65 times the Cheng-Li-Yau excess",
        0.0,
        cfg.grid_note(),
    )
    .run(|| {
        let mut worst: Option<(LogScalar, u32, u32)> = None;
        for (n, ell) in cfg.grid() {
            let ratio = gap_excess(cfg.params(n, ell)?, Variant::Thm1)?.ratio_vs_cly;
            if worst.is_none_or(|(w, _, _)| ratio < w) {
                worst = Some((ratio, n, ell));
            }
        }
        let (ratio, n, ell) = worst.expect("validated grid is non-empty");
        let mut w = vec![Witness::log("min_ratio_vs_cly", ratio)];
        w.extend(point(n, ell));
        Ok(Check::new(ratio > LogScalar::from_real(1.65), w))
    })
}

fn gap_order_thm2_thm1(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new(
        "GAP_ORDER_THM2_THM1",
        "case (i) excess exceeds the tuned excess by a factor above 1 + (n+ell+2) e^{E}/ell; case (ii) excess exceeds twice the tuned excess",
        0.0,
        format!(
            "{}; case (i) is certified by the sign of its extra term, which is far below one ulp of the excess",
            cfg.grid_note()
        ),
    )
    .run(|| {
        let two = LogScalar::from_real(2.0);
        let mut fails = 0u64;
        let mut min_case_ii = f64::INFINITY;
        let mut min_extra: Option<LogScalar> = None;
        for (n, ell) in cfg.grid() {
            let p = cfg.params(n, ell)?;
            let [_, thm1, _, case2] = gap_all(p)?;
            let extra = case1_correction(p)?;
            let ratios = improvement_ratio_thm2(p)?;
            let ok = extra.is_positive()
                && ratios.case_i_beats_remark_bound(ell)
                && case2.excess > log_mul(two, thm1.excess)
                && ratios.case_ii > 2.0;
            if !ok {
                fails += 1;
            }
            min_case_ii = min_case_ii.min(ratios.case_ii);
            if min_extra.is_none_or(|m| ratios.case_i_extra < m) {
                min_extra = Some(ratios.case_i_extra);
            }
        }
        Ok(Check::new(
            fails == 0,
            vec![
                Witness::real("min_case_ii_ratio", min_case_ii),
                Witness::log("min_case_i_ratio_minus_1", min_extra.unwrap_or(LogScalar::ZERO)),
                Witness::real("violations", fails as f64),
            ],
        ))
    })
}

fn h_sign(id: &'static str, anchor: &'static str, alpha: f64, want: Sign) -> ClaimVerdict {
    Claim::new(id, anchor, 0.0, format!("single point alpha = {alpha}")).run(|| {
        let v = h(alpha);
        Ok(Check::new(Sign::of(v) == Some(want), vec![Witness::real("h", v)]))
    })
}

fn lem3_trace_bound() -> ClaimVerdict {
    const N_HI: u32 = 10;
    const STEPS: u32 = 36;
    let points = (N_HI - 1) * (STEPS + 1);
    Claim::new(
        "LEM3_TRACE_BOUND",
        "the heat trace of S^n is at most 1 + (n+1) e^{-nt} + C_n t^{-1} e^{-nt} for t >= 1",
        0.0,
        format!(
            "n = 2..{N_HI}, t = 1, 1.25, ..., 10 ({points} points); spectral sum with certified tail; asserted for every t >= 1"
        ),
    )
    .run(|| {
        let mut fails = 0u32;
        let mut worst = (f64::INFINITY, 0, 0.0);
        for n in 2..=N_HI {
            for i in 0..=STEPS {
                let t = 1.0 + 0.25 * f64::from(i);
                let r = heat_trace(n, t, TRACE_EPS)?;
                let bound = trace_bound_excess(n, t)?;
                let margin = (bound - (r.nonconstant + r.tail_bound)) / bound;
                if !(margin >= 0.0) {
                    fails += 1;
                }
                if margin < worst.0 {
                    worst = (margin, n, t);
                }
            }
        }
        Ok(Check::new(
            fails == 0,
            vec![
                Witness::real("points", f64::from(points)),
                Witness::real("min_relative_margin", worst.0),
                Witness::real("min_margin_at_n", f64::from(worst.1)),
                Witness::real("min_margin_at_t", worst.2),
                Witness::real("violations", f64::from(fails)),
            ],
        ))
    })
}

fn leml_gprime_neg(cfg: &SuiteConfig) -> ClaimVerdict {
    let grid: Vec<f64> = (0..=40).map(|i| 1.0 + 0.05 * f64::from(i)).collect();
    Claim::new(
        "LEML_GPRIME_NEG",
        "g'(beta) < 0, so the larger ell is, the smaller the optimal beta",
        0.0,
        format!(
            "n = {}..{}, beta = 1, 1.05, ..., 3; closed-form numerator sign plus strict decrease of g",
            cfg.n_range.0, cfg.n_range.1
        ),
    )
    .run(|| {
        let mut fails = 0u64;
        let mut undefined = 0u64;
        let mut checked = 0u64;
        for n in cfg.n_range.0..=cfg.n_range.1 {
            for s in g_prime_sign_scan(n, &grid)? {
                match s.sign {
                    Some(Sign::Negative) => checked += 1,
                    Some(_) => {
                        checked += 1;
                        fails += 1;
                    }
                    None => undefined += 1,
                }
            }
            let values = grid.iter().map(|&b| g(b, n)).collect::<volgap_core::Result<Vec<_>>>()?;
            fails += values.windows(2).filter(|w| w[1].cmp_value(w[0]) != Ordering::Less).count() as u64;
        }
        Ok(Check::new(
            fails == 0 && checked > 0,
            vec![
                Witness::real("points_checked", checked as f64),
                Witness::real("points_undefined", undefined as f64),
                Witness::real("violations", fails as f64),
            ],
        ))
    })
}

fn phi3_gt_2(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new("PHI3_GT_2", "phi_3(1.3) = 1.17 C_3 - 1 > 2", 0.0, "single point n = 3").run(|| {
        let v = phi3_threshold_with(cfg.cn(3)?);
        Ok(Check::new(v > 2.0, vec![Witness::real("phi_3(1.3)", v)]))
    })
}

fn psi_decreasing() -> ClaimVerdict {
    Claim::new(
        "PSI_DECREASING",
        "psi(n) = (n+2) e^{-20n} decreases for n >= 4 and psi(4) << 1",
        0.0,
        "n = 4..200, compared as logarithms; psi(4) << 1 read as psi(4) < 1e-30",
    )
    .run(|| {
        let c = psi_decreasing_check(4..=200)?;
        let mut w = vec![
            Witness::real("log10_psi_4", c.psi4_log10),
            Witness::real("n_checked", f64::from(c.n_hi - c.n_lo + 1)),
        ];
        if let Some(n) = c.first_violation {
            w.push(Witness::real("first_violation_at_n", f64::from(n)));
        }
        Ok(Check::new(c.decreasing && c.psi4_log10 < -30.0, w))
    })
}

fn ratio_165() -> ClaimVerdict {
    Claim::new(
        "RATIO_165",
        "0.43 (7 + 2e^4) / (5.29 + 1.43 e^{2.86}) > 1.65, the improvement at (n, ell) = (2, 1)",
        1e-4,
        "single point (n, ell, alpha) = (2, 1, 1.43); cross-checked against plain f64 arithmetic",
    )
    .run(|| {
        let params = GapParams::new(2, 1, DEFAULT_ALPHA)?;
        let ratio = gap_excess(params, Variant::Thm1)?.ratio_vs_cly.to_real();
        let plain = 0.43 * (7.0 + 2.0 * 4f64.exp()) / (5.29 + 1.43 * 2.86f64.exp());
        Ok(Check::new(
            ratio > 1.65 && (ratio - plain).abs() <= 1e-4,
            vec![Witness::real("ratio", ratio), Witness::real("plain_arithmetic", plain)],
        ))
    })
}

fn rhs_gt_20(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new(
        "RHS_GT_20",
        "4 C_4 1.3 0.3 - 1 > 20 with C_4 = 16",
        0.0,
        "single point n = 4",
    )
    .run(|| {
        let v = lemn_rhs_lower_bound(cfg.cn(4)?);
        Ok(Check::new(v > 20.0, vec![Witness::real("rhs_lower_bound", v)]))
    })
}

fn thm6_consistency(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new(
        "THM6_CONSISTENCY",
        "the volume ratio forced by multiplicity n + ell + 1 at t = alpha n C_n equals 1 + the tuned excess",
        1e-12,
        format!("{}; relative tolerance", cfg.grid_note()),
    )
    .run(|| {
        let mut worst = (0f64, 0, 0);
        for (n, ell) in cfg.grid() {
            let t = tuned_exponent(n, cfg.alpha)?;
            let lhs = min_volume_ratio_from_multiplicity(n, u64::from(n + ell + 1), t)?;
            let rhs = LogScalar::ONE + gap_excess(cfg.params(n, ell)?, Variant::Thm1)?.excess;
            let gap = log_div(lhs - rhs, rhs)?.to_real().abs();
            if !(gap <= worst.0) {
                worst = (gap, n, ell);
            }
        }
        let mut w = vec![Witness::real("max_relative_gap", worst.0)];
        w.extend(point(worst.1, worst.2));
        Ok(Check::new(worst.0 <= 1e-12, w))
    })
}

fn tilde_gamma3_lt_11(cfg: &SuiteConfig) -> ClaimVerdict {
    Claim::new(
        "TILDE_GAMMA3_LT_11",
        "the positive root (1 + sqrt(1 + 4/(3 C_3)))/2 of phi_3 is below 1.1",
        0.0,
        "single point n = 3",
    )
    .run(|| {
        let v = tilde_gamma_with(3.0 * cfg.cn(3)?);
        Ok(Check::new(v < 1.1, vec![Witness::real("tilde_gamma_3", v)]))
    })
}

/// Runs every claim and returns the verdicts sorted by `claim_id`.
///
/// A failing claim never stops the run.
pub fn run_claim_suite(cfg: &SuiteConfig) -> Result<Vec<ClaimVerdict>, CliError> {
    cfg.validate()?;
    let mut verdicts = vec![
        alpha_star_bracket(cfg),
        c3_approx(cfg),
        c3_gt_10_3(cfg),
        c4_exact(cfg),
        cn_monotone(cfg),
        e_bound(cfg),
        final_ineq(cfg),
        gamma2_gt_13(cfg),
        gamman_le_13(cfg),
        gap_order_thm1_cly(cfg),
        gap_order_thm2_thm1(cfg),
        h_sign("H_SIGN_142", "h(1.42) > 0", 1.42, Sign::Positive),
        h_sign("H_SIGN_144", "h(1.44) < 0", 1.44, Sign::Negative),
        lem3_trace_bound(),
        leml_gprime_neg(cfg),
        phi3_gt_2(cfg),
        psi_decreasing(),
        ratio_165(),
        rhs_gt_20(cfg),
        thm6_consistency(cfg),
        tilde_gamma3_lt_11(cfg),
    ];
    verdicts.sort_by_key(|v| v.claim_id);
    Ok(verdicts)
}

/// True when every verdict passed.
pub fn all_pass(verdicts: &[ClaimVerdict]) -> bool {
    verdicts.iter().all(|v| v.status == Status::Pass)
}
