//! Laplace spectrum of the round unit sphere `S^n` and its heat trace.
//!
//! Level `k` has eigenvalue `k(k + n - 1)` and multiplicity equal to the
//! dimension of degree-`k` spherical harmonics,
//! `binom(n + k, n) - binom(n + k - 2, n)`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::math;
use crate::special::cly_constant_log;
use crate::{Error, Result};

/// One eigenvalue level of the Laplacian on `S^n`.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralLevel {
    /// Sphere dimension.
    pub n: u32,
    /// Level index.
    pub k: u32,
    /// `k(k + n - 1)`.
    pub eigenvalue: f64,
    /// Exact multiplicity.
    pub multiplicity: BigUint,
}

impl SpectralLevel {
    /// Multiplicity as `f64` (saturating at `inf`).
    pub fn multiplicity_f64(&self) -> f64 {
        self.multiplicity.to_f64().unwrap_or(f64::INFINITY)
    }
}

/// Exact binomial coefficient.
pub fn binomial(top: u64, bottom: u64) -> BigUint {
    if bottom > top {
        return BigUint::zero();
    }
    let r = bottom.min(top - bottom);
    let mut acc = BigUint::one();
    for i in 1..=r {
        acc *= top - r + i;
        acc /= i;
    }
    acc
}

/// Dimension of the degree-`k` spherical harmonics on `S^n`, for `n >= 1`.
pub fn harmonic_dimension(n: u32, k: u32) -> BigUint {
    let (n, k) = (u64::from(n), u64::from(k));
    let lead = binomial(n + k, n);
    if k >= 2 {
        lead - binomial(n + k - 2, n)
    } else {
        lead
    }
}

/// Eigenvalue and multiplicity of level `k` on `S^n`.
pub fn sphere_level(n: u32, k: u32) -> Result<SpectralLevel> {
    if n < 2 {
        return Err(Error::Dimension {
            n,
            min: 2,
            max: u32::MAX,
        });
    }
    let kf = f64::from(k);
    Ok(SpectralLevel {
        n,
        k,
        eigenvalue: kf * (kf + f64::from(n) - 1.0),
        multiplicity: harmonic_dimension(n, k),
    })
}

/// A truncated heat trace with a certified bound on the remainder.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TraceResult {
    /// Partial sum `Σ_{k <= K} m_k e^{-λ_k t}`.
    pub value: f64,
    /// The partial sum without the constant level, `value - 1` free of cancellation.
    pub nonconstant: f64,
    /// Number of levels summed (`K + 1`).
    pub levels_used: u32,
    /// Upper bound on the omitted remainder.
    pub tail_bound: f64,
}

/// Level cap for [`heat_trace`]; small `t` needs about `sqrt(-ln eps / t)` levels.
pub const MAX_TRACE_LEVELS: u32 = 100_000;

fn level_term(n: u32, k: u32, t: f64) -> Result<f64> {
    let level = sphere_level(n, k)?;
    Ok(math::exp(math::ln(level.multiplicity_f64()) - level.eigenvalue * t))
}

/// `Tr K(t) = Σ_k m_k e^{-k(k+n-1)t}` on `S^n`.
///
/// Summation stops at the first `K` where the next term is less than half the
/// current one and below `eps` times the partial sum. Term ratios decrease
/// from there on, so the remainder is at most twice the next term.
pub fn heat_trace(n: u32, t: f64, eps: f64) -> Result<TraceResult> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::Domain("heat trace needs t > 0"));
    }
    if !(eps > 0.0 && eps <= 1e-6) {
        return Err(Error::Domain("heat trace tolerance must lie in (0, 1e-6]"));
    }
    let mut sum = 0.0;
    let mut nonconstant = 0.0;
    let mut term = level_term(n, 0, t)?;
    let mut k = 0u32;
    loop {
        sum += term;
        if k > 0 {
            nonconstant += term;
        }
        let next = level_term(n, k + 1, t)?;
        if next == 0.0 || (next < 0.5 * term && next < eps * sum) {
            return Ok(TraceResult {
                value: sum,
                nonconstant,
                levels_used: k + 1,
                tail_bound: 2.0 * next,
            });
        }
        k += 1;
        if k >= MAX_TRACE_LEVELS {
            return Err(Error::Domain("heat trace needs too many levels; t is too small"));
        }
        term = next;
    }
}

/// `1 + (n+1)e^{-nt} + C_n t^{-1} e^{-nt}`, the closed-form trace bound for `t >= 1`.
pub fn trace_bound(n: u32, t: f64) -> Result<f64> {
    Ok(1.0 + trace_bound_excess(n, t)?)
}

/// [`trace_bound`] minus one, kept separate so that large `t` does not
/// round it away. Compare against [`TraceResult::nonconstant`].
pub fn trace_bound_excess(n: u32, t: f64) -> Result<f64> {
    if !(t >= 1.0) || !t.is_finite() {
        return Err(Error::Domain("the trace bound is asserted only for t >= 1"));
    }
    let nf = f64::from(n);
    let c_log = cly_constant_log(n)?.log_mag();
    let decay = math::exp(-nf * t);
    Ok((nf + 1.0) * decay + math::exp(c_log - nf * t - math::ln(t)))
}
