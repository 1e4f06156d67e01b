//! Shared input sets for the benchmarks.

use lambertw::oracle::Grid;
use lambertw::{Branch, INV_E};

/// Arguments spread over the whole domain of `branch`: a linear stretch near
/// the branch point followed by a geometric one towards the far end.
pub fn domain_inputs(branch: Branch, n: usize) -> Vec<f64> {
    let half = (n / 2).max(2);
    let (near, far) = match branch {
        Branch::Principal => (Grid::linear(-INV_E, 1.0, half), Grid::log(1.0, 1e300, half)),
        Branch::Minus1 => (
            Grid::linear(-INV_E, -0.05, half),
            Grid::log(-0.05, -1e-300, half),
        ),
    };
    let mut xs = near.expect("static grid").points();
    xs.extend(far.expect("static grid").points());
    xs
}

/// Arguments with their reference roots, for benchmarking a single refinement step.
pub fn step_inputs(n: usize) -> Vec<(f64, f64)> {
    domain_inputs(Branch::Principal, n)
        .into_iter()
        .filter(|&x| x > 0.0)
        .map(|x| (x, lambertw::lambert_w0(x).expect("in domain")))
        .collect()
}
