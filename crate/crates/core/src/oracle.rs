//! Reference evaluator and the decimal-places accuracy metric.
//!
//! The reference solves `y e^y = x` by bisection on the monotone half of the
//! branch, then polishes with Halley steps. It shares no code with the
//! approximations it is used to check.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::approximations::{
    asymptotic_expansion, branch_point_expansion, exp_recursion, log_recursion, rational_fit,
    RationalFit, DEFAULT_EXP_RECURSION_DEPTH,
};
use crate::branch::{clamp_to_domain, Branch, INV_E, INV_E_LO};
use crate::error::{Error, Result};
use crate::iterations::{fritsch, halley, iterate_fixed};
use crate::lambert::{initial_approximation, lambert_w};

/// Largest value reported by [`delta`].
pub const DELTA_CAP: f64 = 17.0;

const BISECTION_WIDTH: f64 = 1e-13;
const MAX_POLISH_STEPS: usize = 8;

/// `(d - 1) e^d + 1 = sum_{k>=2} (k-1) d^k / k!`, summed directly for small `|d|`.
fn shifted_product(d: f64) -> f64 {
    if d.abs() > 0.5 {
        return (d - 1.0) * d.exp() + 1.0;
    }
    let mut power = d * d;
    let mut factorial = 2.0;
    let mut sum = 0.0;
    for k in 2..40 {
        let term = f64::from(k - 1) * power / factorial;
        sum += term;
        if term.abs() <= f64::EPSILON * 1e-3 * sum.abs() {
            break;
        }
        power *= d;
        factorial *= f64::from(k + 1);
    }
    sum
}

/// `y e^y - x`, with the cancellation around the branch point handled in
/// extended precision.
fn residual(x: f64, y: f64) -> f64 {
    let d = y + 1.0;
    if d.abs() <= 0.5 && x < -0.5 * INV_E {
        // y e^y - x = (1/e) ((d - 1) e^d + 1) - (x + 1/e); x + INV_E is exact here
        let g = shifted_product(d);
        (INV_E * g + INV_E_LO * g) - (x + INV_E) - INV_E_LO
    } else {
        y * y.exp() - x
    }
}

/// Independent reference value of `W(x)` on `branch`.
pub fn reference_w(branch: Branch, x: f64) -> Result<f64> {
    let x = clamp_to_domain(branch, x, "reference W")?;
    if x == 0.0 {
        return Ok(match branch {
            Branch::Principal => 0.0,
            Branch::Minus1 => f64::NEG_INFINITY,
        });
    }
    if x == -INV_E {
        return Ok(-1.0);
    }
    if x == f64::INFINITY {
        return Ok(f64::INFINITY);
    }

    // on [-1, 710] the residual increases with y, on [-746, -1] it decreases
    let (mut lo, mut hi, increasing) = match branch {
        Branch::Principal => (-1.0, 710.0, true),
        Branch::Minus1 => (-746.0, -1.0, false),
    };
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let r = residual(x, mid);
        if r == 0.0 {
            return Ok(mid);
        }
        if (r > 0.0) == increasing {
            hi = mid;
        } else {
            lo = mid;
        }
    }

    let mut y = 0.5 * (lo + hi);
    for _ in 0..MAX_POLISH_STEPS {
        let w1 = y + 1.0;
        if w1 == 0.0 {
            break;
        }
        let t = residual(x, y);
        let ey = y.exp();
        let next = y - t / (w1 * ey - (y + 2.0) * t / (2.0 * w1));
        if !next.is_finite() || next < lo - BISECTION_WIDTH || next > hi + BISECTION_WIDTH {
            break;
        }
        let step = (next - y).abs();
        y = next;
        if step <= 2.0 * ulp(y) {
            break;
        }
    }
    Ok(y)
}

/// Spacing between `v` and the next float away from zero.
pub fn ulp(v: f64) -> f64 {
    let a = v.abs();
    if !a.is_finite() {
        return f64::NAN;
    }
    f64::from_bits(a.to_bits() + 1) - a
}

/// Number of representable doubles between `a` and `b`.
pub fn ulps_between(a: f64, b: f64) -> u64 {
    fn ordered(v: f64) -> i64 {
        let bits = v.to_bits() as i64;
        if bits < 0 {
            i64::MIN - bits
        } else {
            bits
        }
    }
    ordered(a).abs_diff(ordered(b))
}

/// Correct decimal places `-log10 |approx - reference|`, capped at [`DELTA_CAP`].
pub fn delta(approx: f64, reference: f64) -> f64 {
    if approx.is_nan() || reference.is_nan() {
        return f64::NAN;
    }
    if approx == reference {
        return DELTA_CAP;
    }
    let diff = (approx - reference).abs();
    if diff < 10f64.powf(-DELTA_CAP) {
        DELTA_CAP
    } else {
        (-diff.log10()).min(DELTA_CAP)
    }
}

/// One row of an accuracy sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracySample {
    pub x: f64,
    pub approx: f64,
    pub reference: f64,
    pub delta: f64,
    /// False when the evaluator or the reference rejected `x`.
    pub valid: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GridKind {
    Linear,
    /// Geometric in `|x|`; both ends must be non-zero and of the same sign.
    Log,
}

impl FromStr for GridKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" | "lin" => Ok(GridKind::Linear),
            "log" => Ok(GridKind::Log),
            other => Err(Error::InvalidGrid(format!("unknown grid kind `{other}`"))),
        }
    }
}

impl fmt::Display for GridKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GridKind::Linear => "linear",
            GridKind::Log => "log",
        })
    }
}

/// `n` points from `lo` to `hi`, both ends included.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub kind: GridKind,
    pub lo: f64,
    pub hi: f64,
    pub n: usize,
}

impl Grid {
    pub fn new(kind: GridKind, lo: f64, hi: f64, n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 points, got {n}"
            )));
        }
        if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "need finite lo < hi, got [{lo}, {hi}]"
            )));
        }
        if kind == GridKind::Log && !(lo * hi > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "log grid needs non-zero ends of equal sign, got [{lo}, {hi}]"
            )));
        }
        Ok(Self { kind, lo, hi, n })
    }

    pub fn linear(lo: f64, hi: f64, n: usize) -> Result<Self> {
        Self::new(GridKind::Linear, lo, hi, n)
    }

    pub fn log(lo: f64, hi: f64, n: usize) -> Result<Self> {
        Self::new(GridKind::Log, lo, hi, n)
    }

    /// Points in increasing order.
    pub fn points(&self) -> Vec<f64> {
        let last = (self.n - 1) as f64;
        let mut pts: Vec<f64> = (0..self.n)
            .map(|i| {
                let t = i as f64 / last;
                match self.kind {
                    GridKind::Linear => self.lo + (self.hi - self.lo) * t,
                    GridKind::Log => {
                        let sign = self.lo.signum();
                        let (a, b) = (self.lo.abs().ln(), self.hi.abs().ln());
                        sign * (a + (b - a) * t).exp()
                    }
                }
            })
            .collect();
        pts[0] = self.lo;
        pts[self.n - 1] = self.hi;
        pts
    }

    /// Rejects grids reaching outside the domain of `branch`.
    pub fn check_domain(&self, branch: Branch) -> Result<()> {
        clamp_to_domain(branch, self.lo, "sweep grid")?;
        clamp_to_domain(branch, self.hi, "sweep grid")?;
        Ok(())
    }
}

/// Something that can be swept against the reference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Evaluator {
    BranchPoint9,
    BranchPoint5,
    Q0_1,
    Q0_2,
    Qm1,
    Asymptotic5,
    LogRecursion9,
    ExpRecursion,
    Piecewise,
    PiecewiseFritsch1,
    PiecewiseHalley1,
    PiecewiseHalley2,
    /// The production entry point, [`lambert_w`].
    Full,
}

impl Evaluator {
    pub const ALL: [Evaluator; 13] = [
        Evaluator::BranchPoint9,
        Evaluator::BranchPoint5,
        Evaluator::Q0_1,
        Evaluator::Q0_2,
        Evaluator::Qm1,
        Evaluator::Asymptotic5,
        Evaluator::LogRecursion9,
        Evaluator::ExpRecursion,
        Evaluator::Piecewise,
        Evaluator::PiecewiseFritsch1,
        Evaluator::PiecewiseHalley1,
        Evaluator::PiecewiseHalley2,
        Evaluator::Full,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Evaluator::BranchPoint9 => "bp9",
            Evaluator::BranchPoint5 => "bp5",
            Evaluator::Q0_1 => "q01",
            Evaluator::Q0_2 => "q02",
            Evaluator::Qm1 => "qm1",
            Evaluator::Asymptotic5 => "asym5",
            Evaluator::LogRecursion9 => "logrec9",
            Evaluator::ExpRecursion => "exprec",
            Evaluator::Piecewise => "piecewise",
            Evaluator::PiecewiseFritsch1 => "piecewise+fritsch1",
            Evaluator::PiecewiseHalley1 => "piecewise+halley1",
            Evaluator::PiecewiseHalley2 => "piecewise+halley2",
            Evaluator::Full => "full",
        }
    }

    /// Whether the evaluator is defined on `branch` at all.
    pub fn supports(self, branch: Branch) -> bool {
        match self {
            Evaluator::Q0_1 | Evaluator::Q0_2 | Evaluator::ExpRecursion => {
                branch == Branch::Principal
            }
            Evaluator::Qm1 => branch == Branch::Minus1,
            _ => true,
        }
    }

    pub fn evaluate(self, branch: Branch, x: f64) -> Result<f64> {
        if !self.supports(branch) {
            return Err(Error::UnsupportedEvaluator {
                evaluator: self.id(),
                branch,
            });
        }
        let refined = |step: fn(f64, f64) -> Result<f64>, n: usize| -> Result<f64> {
            let w0 = initial_approximation(branch, x)?;
            if (w0 == 0.0 && x == 0.0) || w0.is_infinite() {
                return Ok(w0);
            }
            iterate_fixed(step, x, w0, n)
        };
        match self {
            Evaluator::BranchPoint9 => branch_point_expansion(branch, x, 9),
            Evaluator::BranchPoint5 => branch_point_expansion(branch, x, 5),
            Evaluator::Q0_1 => Ok(rational_fit(RationalFit::Q0_1, x)),
            Evaluator::Q0_2 => Ok(rational_fit(RationalFit::Q0_2, x)),
            Evaluator::Qm1 => Ok(rational_fit(RationalFit::Qm1, x)),
            Evaluator::Asymptotic5 => asymptotic_expansion(branch, x, 5),
            Evaluator::LogRecursion9 => log_recursion(branch, x, 9),
            Evaluator::ExpRecursion => Ok(exp_recursion(x, DEFAULT_EXP_RECURSION_DEPTH)),
            Evaluator::Piecewise => initial_approximation(branch, x),
            Evaluator::PiecewiseFritsch1 => refined(fritsch, 1),
            Evaluator::PiecewiseHalley1 => refined(halley, 1),
            Evaluator::PiecewiseHalley2 => refined(halley, 2),
            Evaluator::Full => lambert_w(branch, x).map(|r| r.value),
        }
    }
}

impl FromStr for Evaluator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Evaluator::ALL
            .into_iter()
            .find(|e| e.id() == s)
            .ok_or_else(|| Error::UnknownEvaluator(s.to_owned()))
    }
}

impl fmt::Display for Evaluator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

/// Compares `evaluator` with [`reference_w`] at `x`.
pub fn sample(branch: Branch, evaluator: Evaluator, x: f64) -> AccuracySample {
    let approx = evaluator.evaluate(branch, x);
    let reference = reference_w(branch, x);
    match (approx, reference) {
        (Ok(approx), Ok(reference)) => AccuracySample {
            x,
            approx,
            reference,
            delta: delta(approx, reference),
            valid: approx.is_finite() || approx == reference,
        },
        (approx, reference) => AccuracySample {
            x,
            approx: approx.unwrap_or(f64::NAN),
            reference: reference.unwrap_or(f64::NAN),
            delta: f64::NAN,
            valid: false,
        },
    }
}

/// Evaluates `evaluator` on every grid point, in grid order.
///
/// Points are computed in parallel; the output does not depend on scheduling.
pub fn sweep(branch: Branch, evaluator: Evaluator, grid: &Grid) -> Result<Vec<AccuracySample>> {
    if !evaluator.supports(branch) {
        return Err(Error::UnsupportedEvaluator {
            evaluator: evaluator.id(),
            branch,
        });
    }
    grid.check_domain(branch)?;
    Ok(grid
        .points()
        .into_par_iter()
        .map(|x| sample(branch, evaluator, x))
        .collect())
}

/// Smallest delta among valid samples; `None` when no sample is valid.
pub fn min_delta(samples: &[AccuracySample]) -> Option<f64> {
    samples
        .iter()
        .filter(|s| s.valid)
        .map(|s| s.delta)
        .reduce(f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    #[test]
    fn reference_exact_points() {
        assert_eq!(reference_w(Branch::Principal, 0.0).unwrap(), 0.0);
        assert!((reference_w(Branch::Principal, E).unwrap() - 1.0).abs() <= 2.0 * f64::EPSILON);
        assert_eq!(reference_w(Branch::Minus1, 0.0).unwrap(), f64::NEG_INFINITY);
        assert!(reference_w(Branch::Minus1, 0.1).is_err());
        assert!(reference_w(Branch::Principal, -0.4).is_err());
    }

    #[test]
    fn reference_agrees_with_series_near_branch_point() {
        let x = -INV_E * (1.0 - 1e-6);
        let r = reference_w(Branch::Minus1, x).unwrap();
        assert!(r < -1.0);
        let series = branch_point_expansion(Branch::Minus1, x, 9).unwrap();
        assert!(delta(series, r) >= 8.0);
    }

    /// Four ulps of `x` plus what a single ulp of `y` does to `y e^y`.
    fn residual_bound(x: f64, y: f64) -> f64 {
        4.0 * ulp(x) + (x * (1.0 + y) / y).abs() * ulp(y)
    }

    #[test]
    fn reference_residual_is_tiny() {
        let xs = [-0.3, -0.1, -1e-5, 1e-9, 0.5, 3.0, 1e3, 1e10, 1e100];
        for x in xs {
            let y = reference_w(Branch::Principal, x).unwrap();
            let r = (y * y.exp() - x).abs();
            assert!(r <= residual_bound(x, y), "{x}: {r}");
        }
        for x in [-0.36, -0.2, -1e-3, -1e-100, -1e-300] {
            let y = reference_w(Branch::Minus1, x).unwrap();
            let r = (y * y.exp() - x).abs();
            assert!(r <= residual_bound(x, y), "{x}: {r}");
        }
    }

    #[test]
    fn shifted_product_matches_closed_form() {
        for d in [-0.5, -0.3, -0.01, 0.02, 0.2, 0.5] {
            let closed = (d - 1.0) * f64::exp(d) + 1.0;
            assert!((shifted_product(d) - closed).abs() <= 1e-15, "{d}");
        }
    }

    #[test]
    fn delta_examples() {
        let d = delta(0.56715, 0.567_143_290_409_783_8);
        assert!((d - 5.1734).abs() < 1e-3, "{d}");
        assert_eq!(delta(1.0, 1.0), 17.0);
        assert_eq!(delta(2.0, 1.0), 0.0);
        assert_eq!(delta(1.0 + 1e-18, 1.0), 17.0);
        assert!(delta(f64::NAN, 1.0).is_nan());
    }

    #[test]
    fn ulp_helpers() {
        assert_eq!(ulp(1.0), f64::EPSILON);
        assert_eq!(ulps_between(1.0, 1.0 + f64::EPSILON), 1);
        assert_eq!(ulps_between(-0.0, 0.0), 0);
        assert_eq!(ulps_between(-f64::from_bits(1), f64::from_bits(1)), 2);
    }

    #[test]
    fn grids() {
        let g = Grid::linear(-1.0, 1.0, 5).unwrap();
        assert_eq!(g.points(), vec![-1.0, -0.5, 0.0, 0.5, 1.0]);
        let g = Grid::log(1.0, 1000.0, 4).unwrap();
        let p = g.points();
        assert_eq!(p[0], 1.0);
        assert_eq!(p[3], 1000.0);
        assert!((p[1] - 10.0).abs() < 1e-12 && (p[2] - 100.0).abs() < 1e-11);
        let g = Grid::log(-0.1, -1e-3, 3).unwrap();
        let p = g.points();
        assert!((p[1] + 1e-2).abs() < 1e-15);
        assert!(Grid::linear(1.0, 1.0, 5).is_err());
        assert!(Grid::linear(0.0, 1.0, 1).is_err());
        assert!(Grid::log(-1.0, 1.0, 5).is_err());
        assert!(Grid::log(0.0, 1.0, 5).is_err());
    }

    #[test]
    fn evaluator_ids_round_trip() {
        for e in Evaluator::ALL {
            assert_eq!(e.id().parse::<Evaluator>().unwrap(), e);
        }
        assert!("bp7".parse::<Evaluator>().is_err());
    }

    #[test]
    fn sweep_rejects_bad_requests() {
        let g = Grid::linear(-0.3, -0.1, 10).unwrap();
        assert!(matches!(
            sweep(Branch::Minus1, Evaluator::Q0_1, &g),
            Err(Error::UnsupportedEvaluator { .. })
        ));
        let g = Grid::linear(-0.3, 0.1, 10).unwrap();
        assert!(sweep(Branch::Minus1, Evaluator::Piecewise, &g).is_err());
    }

    #[test]
    fn sweep_flags_per_point_failures() {
        // log recursion of the principal branch is undefined for x <= 0
        let g = Grid::linear(-0.2, 20.0, 11).unwrap();
        let s = sweep(Branch::Principal, Evaluator::LogRecursion9, &g).unwrap();
        assert_eq!(s.len(), 11);
        assert!(!s[0].valid && s[0].delta.is_nan());
        assert!(s[10].valid);
    }

    #[test]
    fn sweep_examples() {
        let g = Grid::linear(-INV_E, 0.3, 1000).unwrap();
        let s = sweep(Branch::Principal, Evaluator::Piecewise, &g).unwrap();
        assert!(s.iter().all(|s| s.valid));
        assert!(min_delta(&s).unwrap() >= 5.0);

        let g = Grid::log(0.3, 1e5, 1000).unwrap();
        let s = sweep(Branch::Principal, Evaluator::PiecewiseFritsch1, &g).unwrap();
        assert!(min_delta(&s).unwrap() >= 14.0);
    }

    #[test]
    fn sweep_matches_sequential() {
        let g = Grid::log(-0.3, -1e-20, 257).unwrap();
        let par = sweep(Branch::Minus1, Evaluator::Full, &g).unwrap();
        let seq: Vec<_> = g
            .points()
            .into_iter()
            .map(|x| sample(Branch::Minus1, Evaluator::Full, x))
            .collect();
        assert_eq!(par, seq);
    }
}
