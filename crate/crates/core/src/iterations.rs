//! Halley and Fritsch refinement steps for `w exp(w) = x`, and drivers that repeat them.

use std::fmt;

use log::warn;

use crate::error::{Error, Result};

/// Intermediate quantities of one Halley step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalleyTerms {
    /// Residual `w e^w - x`.
    pub t: f64,
    /// `(w + 2) / (2 (w + 1))`.
    pub s: f64,
    /// Derivative `(w + 1) e^w`.
    pub u: f64,
}

/// Intermediate quantities of one Fritsch step.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FritschTerms {
    /// `ln(x / w) - w`.
    pub z: f64,
    /// `2 (1 + w) (1 + w + 2z/3)`.
    pub q: f64,
    /// Relative update, `w_next = w (1 + eps)`.
    pub eps: f64,
}

/// Third-order Halley update. Singular at `w = -1`.
pub fn halley_step(x: f64, w: f64) -> Result<(f64, HalleyTerms)> {
    if w == -1.0 {
        return Err(Error::SingularStep { x, w });
    }
    let ew = w.exp();
    let wewx = w * ew - x;
    let w1 = w + 1.0;
    let next = w - wewx / (ew * w1 - (w + 2.0) * wewx / (2.0 * w1));
    let terms = HalleyTerms {
        t: wewx,
        s: (w + 2.0) / (2.0 * w1),
        u: w1 * ew,
    };
    Ok((next, terms))
}

/// Fourth-order Fritsch update. Needs `x / w > 0` and `w != -1`.
pub fn fritsch_step(x: f64, w: f64) -> Result<(f64, FritschTerms)> {
    let ratio = x / w;
    if w == 0.0 || w == -1.0 || !(ratio > 0.0) {
        return Err(Error::SingularStep { x, w });
    }
    let z = ratio.ln() - w;
    let w1 = w + 1.0;
    let q = 2.0 * w1 * (w1 + (2.0 / 3.0) * z);
    let denom = q - 2.0 * z;
    if denom == 0.0 {
        return Err(Error::DegenerateStep { x, w });
    }
    let eps = z / w1 * (q - z) / denom;
    Ok((w * (1.0 + eps), FritschTerms { z, q, eps }))
}

/// Signature shared by the step functions handed to [`iterate`] and [`iterate_fixed`].
pub type StepFn = fn(f64, f64) -> Result<f64>;

pub fn halley(x: f64, w: f64) -> Result<f64> {
    halley_step(x, w).map(|(next, _)| next)
}

pub fn fritsch(x: f64, w: f64) -> Result<f64> {
    fritsch_step(x, w).map(|(next, _)| next)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Halley,
    Fritsch,
}

impl Method {
    pub fn step(self) -> StepFn {
        match self {
            Method::Halley => halley,
            Method::Fritsch => fritsch,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Halley => "halley",
            Method::Fritsch => "fritsch",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "halley" => Ok(Method::Halley),
            "fritsch" => Ok(Method::Fritsch),
            other => Err(format!(
                "unknown method `{other}`, expected halley or fritsch"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IterationConfig {
    /// Absolute tolerance on `|w_next - w|`.
    pub tolerance: f64,
    pub max_iterations: usize,
}

impl Default for IterationConfig {
    fn default() -> Self {
        Self {
            tolerance: 1e-6,
            max_iterations: 100,
        }
    }
}

impl IterationConfig {
    pub fn new(tolerance: f64, max_iterations: usize) -> Result<Self> {
        if !(tolerance > 0.0) || max_iterations == 0 {
            return Err(Error::InvalidParameters(format!(
                "tolerance {tolerance} must be positive and max_iterations {max_iterations} at least 1"
            )));
        }
        Ok(Self {
            tolerance,
            max_iterations,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Iterated {
    /// Last iterate.
    pub value: f64,
    /// Number of steps taken.
    pub steps: usize,
    /// False when `max_iterations` ran out before the tolerance was met.
    pub converged: bool,
}

/// Repeats `step` until successive iterates differ by at most the tolerance.
///
/// Running out of iterations is not an error: a warning is logged and the
/// last iterate is returned with `converged == false`.
pub fn iterate<F>(step: F, x: f64, w0: f64, config: IterationConfig) -> Result<Iterated>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    let mut w = w0;
    for i in 0..config.max_iterations {
        let next = step(x, w)?;
        if (next - w).abs() <= config.tolerance {
            return Ok(Iterated {
                value: next,
                steps: i + 1,
                converged: true,
            });
        }
        w = next;
    }
    warn!(
        "convergence not reached for x = {x} after {} steps",
        config.max_iterations
    );
    Ok(Iterated {
        value: w,
        steps: config.max_iterations,
        converged: false,
    })
}

/// Applies `step` exactly `n` times; `n = 0` returns `w0`.
pub fn iterate_fixed<F>(step: F, x: f64, w0: f64, n: usize) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<f64>,
{
    (0..n).try_fold(w0, |w, _| step(x, w))
}
