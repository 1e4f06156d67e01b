use std::f64::consts::E;

use super::horner;
use crate::branch::clamp_to_domain;
use crate::error::{Error, Result};
use crate::Branch;

pub const MAX_BRANCH_POINT_ORDER: usize = 9;

/// Series coefficients `b_i` of `W` in powers of `p = ±sqrt(2(1 + e x))`, as exact fractions.
pub const BRANCH_POINT_RATIONALS: [(i64, i64); 10] = [
    (-1, 1),
    (1, 1),
    (-1, 3),
    (11, 72),
    (-43, 540),
    (769, 17_280),
    (-221, 8_505),
    (680_863, 43_545_600),
    (-1_963, 204_120),
    (226_287_557, 37_623_398_400),
];

pub const BRANCH_POINT_COEFFICIENTS: [f64; 10] = [
    -1.0,
    1.0,
    -1.0 / 3.0,
    11.0 / 72.0,
    -43.0 / 540.0,
    769.0 / 17_280.0,
    -221.0 / 8_505.0,
    680_863.0 / 43_545_600.0,
    -1_963.0 / 204_120.0,
    226_287_557.0 / 37_623_398_400.0,
];

/// Signed expansion variable for `x >= -1/e`. Rounding can leave `1 + e x`
/// a hair below zero right at the branch point, so the radicand is floored at 0.
#[inline]
pub(crate) fn branch_point_variable(branch: Branch, x: f64) -> f64 {
    let radicand = 2.0 * (E * x + 1.0);
    branch.sign() * radicand.max(0.0).sqrt()
}

#[inline]
pub(crate) fn branch_point_series(branch: Branch, x: f64, order: usize) -> f64 {
    horner(
        &BRANCH_POINT_COEFFICIENTS[..=order],
        branch_point_variable(branch, x),
    )
}

/// Truncated expansion of `W` about the branch point `(-1/e, -1)`, summed to `p^order`.
pub fn branch_point_expansion(branch: Branch, x: f64, order: usize) -> Result<f64> {
    if !(1..=MAX_BRANCH_POINT_ORDER).contains(&order) {
        return Err(Error::InvalidOrder {
            what: "branch-point expansion",
            order,
            min: 1,
            max: MAX_BRANCH_POINT_ORDER,
        });
    }
    let x = clamp_to_domain(Branch::Principal, x, "branch-point expansion")?;
    Ok(branch_point_series(branch, x, order))
}
