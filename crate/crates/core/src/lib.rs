//! Real branches of the Lambert W function in double precision.
//!
//! Each branch is evaluated from a piecewise initial approximation (branch-point
//! series, rational fits, asymptotic series and a continued logarithm), refined
//! by a single Fritsch step. The crate also ships the building blocks on their
//! own, a bisection-based reference evaluator for accuracy sweeps, and the
//! Moyal and Gaisser-Hillas inverses that motivate it.
//!
//! ```
//! use lambertw::{lambert_w, Branch};
//!
//! let w = lambert_w(Branch::Principal, 1.0).unwrap().value;
//! assert!((w * w.exp() - 1.0).abs() < 1e-15);
//! assert_eq!(lambert_w(Branch::Minus1, 0.0).unwrap().value, f64::NEG_INFINITY);
//! ```

// `!(x > 0.0)` is used deliberately so that NaN lands in the error branch.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod applications;
pub mod approximations;
mod branch;
pub mod error;
pub mod iterations;
mod lambert;
pub mod oracle;
pub mod order;
pub mod report;

pub use branch::{Branch, INV_E};
pub use error::{Error, Result};
pub use lambert::{
    initial_approximation, lambert_w, lambert_w0, lambert_wm1, Approximant, EvalResult,
    PiecewiseRegionMap, BRANCH_POINT_GUARD, ZERO_GUARD,
};
