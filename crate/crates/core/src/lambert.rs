//! Branch-dispatched evaluation: a piecewise initial approximation followed by
//! one Fritsch step.

use std::fmt;

use crate::approximations::{
    asymptotic_series, branch_point_series, log_recursion_unchecked, AsymptoticArgs, RationalFit,
};
use crate::branch::{clamp_to_domain, Branch, INV_E};
use crate::error::Result;
use crate::iterations::fritsch_step;

/// Width of the band above `-1/e` where the order-5 branch-point series is returned as is.
pub const BRANCH_POINT_GUARD: f64 = 1e-5;

/// Half-width of the band around 0 where the principal branch skips refinement.
pub const ZERO_GUARD: f64 = 1e-6;

/// Approximant assigned to one interval of a [`PiecewiseRegionMap`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Approximant {
    /// Branch-point series of the given order.
    BranchPoint(usize),
    Rational(RationalFit),
    /// Asymptotic series of the given order.
    Asymptotic(usize),
    /// Continued logarithm of the given depth.
    LogRecursion(usize),
}

impl Approximant {
    /// Evaluates without any domain checks. `x` must already lie in the branch domain.
    #[inline]
    pub(crate) fn eval_unchecked(self, branch: Branch, x: f64) -> f64 {
        match self {
            Approximant::BranchPoint(order) => branch_point_series(branch, x, order),
            Approximant::Rational(fit) => fit.eval(x),
            Approximant::Asymptotic(order) => {
                asymptotic_series(AsymptoticArgs::new_unchecked(branch, x), order)
            }
            Approximant::LogRecursion(depth) => log_recursion_unchecked(branch, x, depth),
        }
    }
}

impl fmt::Display for Approximant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Approximant::BranchPoint(n) => write!(f, "B({n})"),
            Approximant::Rational(fit) => write!(f, "{fit}"),
            Approximant::Asymptotic(n) => write!(f, "A({n})"),
            Approximant::LogRecursion(n) => write!(f, "R({n})"),
        }
    }
}

/// Ordered breakpoints splitting a branch domain, with one approximant per interval.
///
/// Interval `i` is `[breakpoints[i-1], breakpoints[i])`, the first starting at `-1/e`
/// and the last running to the upper end of the domain.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PiecewiseRegionMap {
    pub branch: Branch,
    pub breakpoints: &'static [f64],
    pub approximants: &'static [Approximant],
}

const PRINCIPAL_BREAKPOINTS: [f64; 3] =
    [-0.32358170806015724, 0.14546954290661823, 8.706658967856612];
const PRINCIPAL_APPROXIMANTS: [Approximant; 4] = [
    Approximant::BranchPoint(9),
    Approximant::Rational(RationalFit::Q0_1),
    Approximant::Rational(RationalFit::Q0_2),
    Approximant::Asymptotic(5),
];

// Printed with fewer digits than the others.
const MINUS1_BREAKPOINTS: [f64; 2] = [-0.30298541769, -0.051012917658221676];
const MINUS1_APPROXIMANTS: [Approximant; 3] = [
    Approximant::BranchPoint(9),
    Approximant::Rational(RationalFit::Qm1),
    Approximant::LogRecursion(9),
];

impl PiecewiseRegionMap {
    pub const fn for_branch(branch: Branch) -> Self {
        match branch {
            Branch::Principal => Self {
                branch,
                breakpoints: &PRINCIPAL_BREAKPOINTS,
                approximants: &PRINCIPAL_APPROXIMANTS,
            },
            Branch::Minus1 => Self {
                branch,
                breakpoints: &MINUS1_BREAKPOINTS,
                approximants: &MINUS1_APPROXIMANTS,
            },
        }
    }

    /// Approximant used at `x`, which must lie in the branch domain.
    #[inline]
    pub fn select(&self, x: f64) -> Approximant {
        let idx = self.breakpoints.partition_point(|&b| b <= x);
        self.approximants[idx]
    }

    /// `(lo, hi, approximant)` for every interval, in order.
    pub fn intervals(&self) -> impl Iterator<Item = (f64, f64, Approximant)> + '_ {
        let (lo, hi) = self.branch.domain();
        let starts = std::iter::once(lo).chain(self.breakpoints.iter().copied());
        let ends = self.breakpoints.iter().copied().chain(std::iter::once(hi));
        starts
            .zip(ends)
            .zip(self.approximants.iter().copied())
            .map(|((a, b), ap)| (a, b, ap))
    }
}

/// Result of [`lambert_w`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    /// Whether a Fritsch step was applied on top of the initial approximation.
    pub refined: bool,
}

/// Piecewise initial approximation, good to about five decimals on `[-1/e, 7]`
/// for the principal branch and on the whole lower branch.
pub fn initial_approximation(branch: Branch, x: f64) -> Result<f64> {
    let x = clamp_to_domain(branch, x, "Lambert W")?;
    Ok(initial_unchecked(branch, x))
}

#[inline]
fn initial_unchecked(branch: Branch, x: f64) -> f64 {
    match branch {
        Branch::Principal if x == f64::INFINITY => f64::INFINITY,
        Branch::Minus1 if x == 0.0 => f64::NEG_INFINITY,
        _ => PiecewiseRegionMap::for_branch(branch)
            .select(x)
            .eval_unchecked(branch, x),
    }
}

/// Lambert W on the requested real branch.
///
/// Outside the guard bands the result satisfies `w e^w = x` to about machine
/// precision. Within `1e-5` of `-1/e` the order-5 branch-point series is
/// returned unrefined, as is the rational fit for `|x| <= 1e-6` on the
/// principal branch. `W-1(0)` is `-inf`.
pub fn lambert_w(branch: Branch, x: f64) -> Result<EvalResult> {
    let x = clamp_to_domain(branch, x, "Lambert W")?;
    let unrefined = |value| {
        Ok(EvalResult {
            value,
            refined: false,
        })
    };

    if x < -INV_E + BRANCH_POINT_GUARD {
        return unrefined(branch_point_series(branch, x, 5));
    }
    match branch {
        Branch::Principal if x.abs() <= ZERO_GUARD || x == f64::INFINITY => {
            return unrefined(initial_unchecked(branch, x));
        }
        Branch::Minus1 if x == 0.0 => return unrefined(f64::NEG_INFINITY),
        _ => {}
    }
    let (value, _) = fritsch_step(x, initial_unchecked(branch, x))?;
    Ok(EvalResult {
        value,
        refined: true,
    })
}

/// Shorthand for `lambert_w(Branch::Principal, x)?.value`.
pub fn lambert_w0(x: f64) -> Result<f64> {
    lambert_w(Branch::Principal, x).map(|r| r.value)
}

/// Shorthand for `lambert_w(Branch::Minus1, x)?.value`.
pub fn lambert_wm1(x: f64) -> Result<f64> {
    lambert_w(Branch::Minus1, x).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::oracle::reference_w;

    #[test]
    fn breakpoints_are_the_published_ones() {
        let p = PiecewiseRegionMap::for_branch(Branch::Principal);
        assert_eq!(
            p.breakpoints,
            &[-0.32358170806015724, 0.14546954290661823, 8.706658967856612]
        );
        let m = PiecewiseRegionMap::for_branch(Branch::Minus1);
        assert_eq!(m.breakpoints, &[-0.30298541769, -0.051012917658221676]);
    }

    #[test]
    fn intervals_tile_the_domain() {
        for branch in Branch::ALL {
            let map = PiecewiseRegionMap::for_branch(branch);
            assert_eq!(map.approximants.len(), map.breakpoints.len() + 1);
            assert!(map.breakpoints.windows(2).all(|w| w[0] < w[1]));
            let intervals: Vec<_> = map.intervals().collect();
            let (lo, hi) = branch.domain();
            assert_eq!(intervals.first().unwrap().0, lo);
            assert_eq!(intervals.last().unwrap().1, hi);
            for pair in intervals.windows(2) {
                assert_eq!(pair[0].1, pair[1].0);
            }
            for (a, b, ap) in intervals {
                assert_eq!(map.select(a), ap);
                if b.is_finite() {
                    assert_eq!(map.select(b.next_down()), ap);
                }
            }
        }
    }

    #[test]
    fn point_values() {
        assert_eq!(lambert_w0(0.0).unwrap(), 0.0);
        assert_eq!(lambert_w0(-INV_E).unwrap(), -1.0);
        assert_eq!(lambert_wm1(-INV_E).unwrap(), -1.0);
        assert!((lambert_w0(1.0).unwrap() - 0.567_143_290_409_783_8).abs() < 1e-16);
        let want = reference_w(Branch::Minus1, -0.2).unwrap();
        let got = lambert_wm1(-0.2).unwrap();
        assert!((got - want).abs() < 1e-14);
        assert!((got - -2.542641).abs() < 1e-6);
        assert_eq!(lambert_wm1(0.0).unwrap(), f64::NEG_INFINITY);
        assert_eq!(lambert_wm1(-0.0).unwrap(), f64::NEG_INFINITY);
        assert_eq!(lambert_w0(f64::INFINITY).unwrap(), f64::INFINITY);
    }

    #[test]
    fn domain_errors() {
        assert!(lambert_w0(-0.5).unwrap_err().is_domain());
        assert!(lambert_wm1(1e-10).unwrap_err().is_domain());
        assert!(lambert_w0(f64::NAN).unwrap_err().is_domain());
        assert!(matches!(lambert_wm1(-1.0), Err(Error::Domain { .. })));
        // -exp(-1) computed by a caller must be accepted
        assert_eq!(lambert_w0(-(-1f64).exp()).unwrap(), -1.0);
        let below = (-INV_E).next_down();
        assert_eq!(lambert_wm1(below).unwrap(), -1.0);
    }

    #[test]
    fn guard_bands_are_unrefined() {
        let inside = -INV_E + 0.5e-5;
        for branch in Branch::ALL {
            let r = lambert_w(branch, inside).unwrap();
            assert!(!r.refined);
            assert_eq!(r.value, branch_point_series(branch, inside, 5));
            assert!(lambert_w(branch, -INV_E + 2e-5).unwrap().refined);
        }
        assert!(!lambert_w(Branch::Principal, 1e-6).unwrap().refined);
        assert!(!lambert_w(Branch::Principal, -1e-6).unwrap().refined);
        assert!(lambert_w(Branch::Principal, 1.1e-6).unwrap().refined);
        assert!(lambert_w(Branch::Minus1, -1e-6).unwrap().refined);
    }

    #[test]
    fn initial_approximation_examples() {
        assert_eq!(
            initial_approximation(Branch::Principal, -INV_E).unwrap(),
            -1.0
        );
        let w = initial_approximation(Branch::Principal, 1.0).unwrap();
        assert!((w - 0.5671432904).abs() < 1e-5);
        assert_eq!(
            PiecewiseRegionMap::for_branch(Branch::Minus1).select(-0.01),
            Approximant::LogRecursion(9)
        );
        let w = initial_approximation(Branch::Minus1, -0.01).unwrap();
        assert!((w - reference_w(Branch::Minus1, -0.01).unwrap()).abs() < 1e-5);
    }

    #[test]
    fn pieces_agree_at_breakpoints() {
        for branch in Branch::ALL {
            let map = PiecewiseRegionMap::for_branch(branch);
            for (i, &b) in map.breakpoints.iter().enumerate() {
                let left = map.approximants[i].eval_unchecked(branch, b.next_down());
                let right = map.approximants[i + 1].eval_unchecked(branch, b);
                // beyond x = 7 the pieces are only good to three decimals, and at the
                // W-1 rational/series joint both sides are about 3.4e-5 off in opposite directions
                let tol = match branch {
                    Branch::Principal if b > 7.0 => 1e-3,
                    Branch::Minus1 if i == 0 => 1e-4,
                    _ => 1e-5,
                };
                assert!(
                    (left - right).abs() <= tol,
                    "{branch} at {b}: {left} vs {right}"
                );
            }
        }
    }
}
