//! Initial approximations of the two real branches.
//!
//! None of these functions police the interval in which they are accurate;
//! the piecewise selection lives in [`crate::lambert`].

mod asymptotic;
mod branch_point;
mod rational;
mod recursion;

pub use asymptotic::{asymptotic_expansion, AsymptoticArgs, MAX_ASYMPTOTIC_ORDER};
pub use branch_point::{
    branch_point_expansion, BRANCH_POINT_COEFFICIENTS, BRANCH_POINT_RATIONALS,
    MAX_BRANCH_POINT_ORDER,
};
pub use rational::{rational_fit, RationalFit, RationalFitCoefficients};
pub use recursion::{exp_recursion, log_recursion, DEFAULT_EXP_RECURSION_DEPTH};

pub(crate) use asymptotic::asymptotic_series;
pub(crate) use branch_point::branch_point_series;
pub(crate) use recursion::log_recursion_unchecked;

/// Evaluates `c[0] + x*(c[1] + x*(c[2] + ...))`.
#[inline]
pub(crate) fn horner(coefficients: &[f64], x: f64) -> f64 {
    coefficients.iter().rev().fold(0.0, |acc, &c| c + x * acc)
}
