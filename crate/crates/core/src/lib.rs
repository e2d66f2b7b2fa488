//! Volume-gap bounds for compact minimal submanifolds of round spheres.
//!
//! The crate is `no_std` (it needs `alloc`) and contains only pure numerics:
//!
//! * [`log_scalar`]: signed log-domain scalars, so quantities such as
//!   `exp(alpha * n * C_n)` stay representable far past `f64::MAX`.
//! * [`special`]: the upper incomplete gamma function at 1 for half-integer
//!   arguments and the Cheng–Li–Yau constant `C_n`.
//! * [`spectral`]: the Laplace spectrum of `S^n` and its heat trace, used as
//!   an independent check of the closed-form trace bound.
//! * [`bounds`]: the gap denominators, excesses and ratio comparisons.
//! * [`solver`]: bisection, the tuning objectives and their critical points.
//!
//! Everything is a pure function of its arguments.

#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![cfg_attr(not(test), no_std)]
#![deny(missing_docs)]

extern crate alloc;

pub mod bounds;
mod error;
pub mod log_scalar;
mod math;
pub mod solver;
pub mod special;
pub mod spectral;

pub use self::error::{Error, Result};
pub use self::log_scalar::{LogScalar, Sign};
