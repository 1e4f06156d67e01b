use std::fmt;

use crate::error::{Error, Result};

/// `1/e`, the magnitude of the branch point. Equal to `(-1f64).exp()` and to `1.0 / E`.
pub const INV_E: f64 = 0.367_879_441_171_442_33;

/// Low-order correction so that `INV_E + INV_E_LO` approximates `1/e` to about 33 digits.
pub(crate) const INV_E_LO: f64 = -1.242_875_367_278_836_3e-17;

/// Real branch of the Lambert W function.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `W0`, defined on `[-1/e, inf)`, values in `[-1, inf)`.
    Principal,
    /// `W-1`, defined on `[-1/e, 0)`, values in `(-inf, -1]`.
    Minus1,
}

impl Branch {
    pub const ALL: [Branch; 2] = [Branch::Principal, Branch::Minus1];

    pub fn index(self) -> i32 {
        match self {
            Branch::Principal => 0,
            Branch::Minus1 => -1,
        }
    }

    /// `2 * branch + 1`: `+1` on the principal branch, `-1` on the lower one.
    pub fn sign(self) -> f64 {
        f64::from(2 * self.index() + 1)
    }

    /// Inclusive lower and upper end of the real domain.
    pub fn domain(self) -> (f64, f64) {
        match self {
            Branch::Principal => (-INV_E, f64::INFINITY),
            Branch::Minus1 => (-INV_E, 0.0),
        }
    }
}

impl TryFrom<i32> for Branch {
    type Error = Error;

    fn try_from(index: i32) -> Result<Self> {
        match index {
            0 => Ok(Branch::Principal),
            -1 => Ok(Branch::Minus1),
            other => Err(Error::InvalidBranch(other)),
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let index: i32 = s
            .trim()
            .parse()
            .map_err(|_| Error::InvalidBranch(i32::MIN))?;
        Branch::try_from(index)
    }
}

impl fmt::Display for Branch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index())
    }
}

/// Lowest accepted argument: `-1/e` minus four units in the last place.
pub(crate) fn branch_point_slack_floor() -> f64 {
    // more negative floats have larger bit patterns
    f64::from_bits((-INV_E).to_bits() + 4)
}

/// Checks `x` against the domain of `branch`, snapping inputs within four ulps
/// below `-1/e` onto the branch point.
pub(crate) fn clamp_to_domain(branch: Branch, x: f64, what: &'static str) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain(what, x));
    }
    let x = if x < -INV_E {
        if x >= branch_point_slack_floor() {
            -INV_E
        } else {
            return Err(Error::domain(what, x));
        }
    } else {
        x
    };
    if branch == Branch::Minus1 && x > 0.0 {
        return Err(Error::domain(what, x));
    }
    Ok(x)
}
