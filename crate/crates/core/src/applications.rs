//! Closed-form inverses built on the two real branches: the Moyal function and
//! the Gaisser-Hillas longitudinal shower profile.

use std::fmt;
use std::str::FromStr;

use crate::branch::{Branch, INV_E};
use crate::error::{Error, Result};
use crate::lambert::lambert_w;

/// Maximum of the Moyal function, `exp(-1/2)`, attained at `x = 0`.
pub const MOYAL_PEAK: f64 = 0.606_530_659_712_633_4;

/// `M(x) = exp(-(x + exp(-x)) / 2)`.
pub fn moyal(x: f64) -> f64 {
    (-0.5 * (x + (-x).exp())).exp()
}

/// Which preimage of the Moyal function to return.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MoyalSide {
    /// Principal branch; the preimage at or right of the peak.
    Plus,
    /// Lower branch; the preimage at or left of the peak.
    Minus,
}

impl MoyalSide {
    pub fn branch(self) -> Branch {
        match self {
            MoyalSide::Plus => Branch::Principal,
            MoyalSide::Minus => Branch::Minus1,
        }
    }
}

impl FromStr for MoyalSide {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "plus" | "+" => Ok(MoyalSide::Plus),
            "minus" | "-" => Ok(MoyalSide::Minus),
            other => Err(format!("unknown side `{other}`, expected plus or minus")),
        }
    }
}

impl fmt::Display for MoyalSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MoyalSide::Plus => "plus",
            MoyalSide::Minus => "minus",
        })
    }
}

/// Solves `moyal(x) = y` for `0 < y <= exp(-1/2)` as `W(-y^2) - 2 ln y`.
pub fn moyal_inverse(y: f64, side: MoyalSide) -> Result<f64> {
    let slack = f64::from_bits(MOYAL_PEAK.to_bits() + 1);
    if !(y > 0.0 && y <= slack) {
        return Err(Error::domain("inverse Moyal function", y));
    }
    let y = y.min(MOYAL_PEAK);
    let w = lambert_w(side.branch(), -y * y)?.value;
    Ok(w - 2.0 * y.ln())
}

/// One-parameter Gaisser-Hillas profile `(x / x_max)^x_max exp(x_max - x)`.
pub fn gh_reduced(x: f64, x_max: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::domain("Gaisser-Hillas profile", x));
    }
    if !(x_max > 0.0) {
        return Err(Error::domain("Gaisser-Hillas profile (x_max)", x_max));
    }
    Ok((x_max * (x / x_max).ln() + (x_max - x)).exp())
}

/// Both solutions of `gh_reduced(x, x_max) = a`, as `(left, right)` of the maximum.
///
/// `left` comes from the principal branch, `right` from the lower one.
pub fn gh_reduced_inverse(a: f64, x_max: f64) -> Result<(f64, f64)> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::domain("inverse Gaisser-Hillas profile", a));
    }
    if !(x_max > 0.0) || !x_max.is_finite() {
        return Err(Error::domain(
            "inverse Gaisser-Hillas profile (x_max)",
            x_max,
        ));
    }
    // a^(1/x_max) through the logarithm keeps tiny a and large x_max well behaved
    let arg = -(a.ln() / x_max).exp() * INV_E;
    let left = -x_max * lambert_w(Branch::Principal, arg)?.value;
    let right = -x_max * lambert_w(Branch::Minus1, arg)?.value;
    Ok((left, right))
}

/// Three-parameter profile: depth offset, depth of maximum and interaction length.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GaisserHillasParams {
    pub x0: f64,
    pub x_max: f64,
    pub lambda: f64,
}

impl GaisserHillasParams {
    pub fn new(x0: f64, x_max: f64, lambda: f64) -> Result<Self> {
        if !(x_max > x0) || !(lambda > 0.0) || !x0.is_finite() || !x_max.is_finite() {
            return Err(Error::InvalidParameters(format!(
                "need Xmax > X0 and lambda > 0, got X0 = {x0}, Xmax = {x_max}, lambda = {lambda}"
            )));
        }
        Ok(Self { x0, x_max, lambda })
    }

    /// `(X - X0) / lambda`.
    pub fn rescale(&self, depth: f64) -> f64 {
        (depth - self.x0) / self.lambda
    }

    /// `X0 + lambda x`.
    pub fn unscale(&self, x: f64) -> f64 {
        self.x0 + self.lambda * x
    }

    /// Rescaled position of the maximum, always positive.
    pub fn reduced_max(&self) -> f64 {
        self.rescale(self.x_max)
    }
}

/// `G(X) = [(X - X0)/(Xmax - X0)]^((Xmax - X0)/lambda) exp((Xmax - X)/lambda)`.
pub fn gh_full(depth: f64, params: &GaisserHillasParams) -> Result<f64> {
    if !(depth > params.x0) {
        return Err(Error::domain("Gaisser-Hillas profile", depth));
    }
    gh_reduced(params.rescale(depth), params.reduced_max())
}

/// Both depths where the profile equals `a`, shallower first.
pub fn gh_full_inverse(a: f64, params: &GaisserHillasParams) -> Result<(f64, f64)> {
    let (left, right) = gh_reduced_inverse(a, params.reduced_max())?;
    Ok((params.unscale(left), params.unscale(right)))
}
