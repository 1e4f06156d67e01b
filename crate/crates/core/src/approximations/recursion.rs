use crate::error::{Error, Result};
use crate::Branch;

pub const DEFAULT_EXP_RECURSION_DEPTH: usize = 30;

#[inline]
pub(crate) fn log_recursion_unchecked(branch: Branch, x: f64, depth: usize) -> f64 {
    let s = branch.sign();
    let log_sx = (s * x).ln();
    (0..depth).fold(log_sx, |w, _| log_sx - (s * w).ln())
}

/// Continued logarithm `ln(±x) - ln(±(ln(±x) - ln(±(...))))` unrolled `depth` times.
///
/// Depth 0 is `ln(±x)`. Useful for `W0` once `x > e` and for `W-1` close to `0-`.
pub fn log_recursion(branch: Branch, x: f64, depth: usize) -> Result<f64> {
    if !(branch.sign() * x > 0.0) {
        return Err(Error::domain("logarithmic recursion", x));
    }
    Ok(log_recursion_unchecked(branch, x, depth))
}

/// Continued exponential `x / exp(x / exp(...))` for the principal branch on `(-1/e, e)`.
/// Depth 0 is `x`. Converges slowly near the ends of that interval.
pub fn exp_recursion(x: f64, depth: usize) -> f64 {
    (0..depth).fold(x, |w, _| x / w.exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::branch::INV_E;
    use crate::oracle::reference_w;

    #[test]
    fn depth_zero_at_branch_point() {
        assert_eq!(log_recursion(Branch::Minus1, -INV_E, 0).unwrap(), -1.0);
    }

    #[test]
    fn lower_branch_depth_nine() {
        let got = log_recursion(Branch::Minus1, -0.01, 9).unwrap();
        let want = reference_w(Branch::Minus1, -0.01).unwrap();
        assert!((got - want).abs() < 1e-5);
    }

    #[test]
    fn principal_depth_nine() {
        let got = log_recursion(Branch::Principal, 1e5, 9).unwrap();
        let want = reference_w(Branch::Principal, 1e5).unwrap();
        assert!((got - want).abs() < 1e-4);
    }

    #[test]
    fn one_more_unrolling_is_the_next_depth() {
        for (branch, x) in [(Branch::Minus1, -0.02), (Branch::Principal, 40.0)] {
            let s = branch.sign();
            let log_sx = (s * x).ln();
            for n in 0..12 {
                let prev = log_recursion(branch, x, n).unwrap();
                let next = log_recursion(branch, x, n + 1).unwrap();
                assert_eq!(next, log_sx - (s * prev).ln());
            }
        }
    }

    #[test]
    fn rejects_wrong_sign() {
        assert!(log_recursion(Branch::Principal, -1.0, 3).is_err());
        assert!(log_recursion(Branch::Minus1, 0.5, 3).is_err());
        assert!(log_recursion(Branch::Minus1, 0.0, 3).is_err());
        assert!(log_recursion(Branch::Principal, f64::NAN, 3).is_err());
    }

    #[test]
    fn exp_recursion_values() {
        for depth in [0, 1, 7, 30] {
            assert_eq!(exp_recursion(0.0, depth), 0.0);
        }
        assert_eq!(exp_recursion(0.25, 0), 0.25);
        assert!((exp_recursion(1.0, 30) - 0.5671432904).abs() < 1e-6);
        let want = reference_w(Branch::Principal, -0.3).unwrap();
        assert!((exp_recursion(-0.3, 50) - want).abs() < 1e-4);
    }
}
