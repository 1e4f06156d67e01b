//! Empirical convergence order of a single refinement step.

use crate::error::{Error, Result};
use crate::iterations::Method;
use crate::oracle::{reference_w, ulp, ulps_between};
use crate::Branch;

pub const DEFAULT_PERTURBATIONS: [f64; 3] = [1e-2, 1e-3, 1e-4];

/// Output errors at or below this many ulps of the root are rounding noise.
pub const ROUNDING_FLOOR_ULPS: f64 = 4.0;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrderPoint {
    /// Distance of the starting point from the root.
    pub perturbation: f64,
    /// Distance of the stepped point from the root.
    pub error: f64,
    /// False when `error` sits at the rounding floor and was left out of the fit.
    pub used: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderReport {
    pub method: Method,
    pub x: f64,
    pub root: f64,
    pub points: Vec<OrderPoint>,
    /// Least-squares slope of `log(error)` against `log(perturbation)`.
    pub exponent: f64,
    /// How far one step moves the reference root itself.
    pub fixed_point_ulps: u64,
}

/// Least-squares slope of `ys` against `xs`.
fn slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let (num, den) = xs.iter().zip(ys).fold((0.0, 0.0), |(num, den), (x, y)| {
        (num + (x - mx) * (y - my), den + (x - mx) * (x - mx))
    });
    num / den
}

/// Starts `method` at `W0(x) + d` for each perturbation `d` and fits `e' = C d^k`.
pub fn convergence_order(method: Method, x: f64, perturbations: &[f64]) -> Result<OrderReport> {
    let root = reference_w(Branch::Principal, x)?;
    let step = method.step();
    let floor = ROUNDING_FLOOR_ULPS * ulp(root);

    let points = perturbations
        .iter()
        .map(|&d| {
            let error = (step(x, root + d)? - root).abs();
            Ok(OrderPoint {
                perturbation: d,
                error,
                used: error > floor,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let (xs, ys): (Vec<f64>, Vec<f64>) = points
        .iter()
        .filter(|p| p.used)
        .map(|p| (p.perturbation.abs().ln(), p.error.ln()))
        .unzip();
    if xs.len() < 2 {
        return Err(Error::InsufficientOrderData(xs.len()));
    }

    let fixed_point_ulps = ulps_between(step(x, root)?, root);
    Ok(OrderReport {
        method,
        x,
        root,
        points,
        exponent: slope(&xs, &ys),
        fixed_point_ulps,
    })
}
