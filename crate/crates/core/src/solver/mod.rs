//! Root finding for the tuning parameters and numeric checks of the
//! auxiliary constants.
//!
//! All searches use bisection on residuals whose sign is computed in the
//! log domain, so the astronomically large factor `e^{alpha n C_n}` never
//! has to be formed.

mod bisect;
mod critical;
mod auxiliary;
mod objective;

pub use self::bisect::{bisect, Residual, RootResult};
pub use self::critical::{
    gamma_equation_residual, gamma_n, optimal_alpha, optimal_alpha_residual, DEFAULT_TOL,
    MAX_BRACKET_DOUBLINGS,
};
pub use self::auxiliary::{
    aux_root_tilde_gamma3, lemn_rhs_lower_bound, phi3_threshold, phi3_threshold_with, psi_decreasing_check, psi_log,
    tilde_gamma, tilde_gamma_with, PsiCheck,
};
pub use self::objective::{
    f1, f1_prime, f1_prime_numerator, f2, g, g_prime_numerator, g_prime_sign_scan, h, GPrimeSample,
    ObjectiveProfile,
};
