use crate::branch::INV_E;
use crate::error::{Error, Result};
use crate::Branch;

pub const MAX_ASYMPTOTIC_ORDER: usize = 5;

/// Coefficient polynomials in `b` of the `a^-k` terms, `k = 2..=5`, lowest power first.
/// Each row is divided by its trailing denominator.
const TERMS: [(&[f64], f64); 4] = [
    (&[-2.0, 1.0], 2.0),
    (&[6.0, -9.0, 2.0], 6.0),
    (&[-12.0, 36.0, -22.0, 3.0], 12.0),
    (&[60.0, -300.0, 350.0, -125.0, 12.0], 60.0),
];

/// Logarithmic arguments `a = ln(±x)` and `b = ln(±ln(±x))` of the asymptotic series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AsymptoticArgs {
    pub a: f64,
    pub b: f64,
}

impl AsymptoticArgs {
    /// Principal branch needs `x > 1`; the lower branch needs `-1/e <= x < 0`.
    pub fn new(branch: Branch, x: f64) -> Result<Self> {
        let valid = match branch {
            Branch::Principal => x > 1.0,
            Branch::Minus1 => (-INV_E..0.0).contains(&x),
        };
        if !valid {
            return Err(Error::domain("asymptotic expansion", x));
        }
        Ok(Self::new_unchecked(branch, x))
    }

    #[inline]
    pub(crate) fn new_unchecked(branch: Branch, x: f64) -> Self {
        let s = branch.sign();
        let a = (s * x).ln();
        let b = (s * a).ln();
        Self { a, b }
    }
}

/// `a - b + (b/a) * (1 + (1/a)*(c2 + (1/a)*(c3 + ...)))` truncated after `a^-order`.
#[inline]
pub(crate) fn asymptotic_series(args: AsymptoticArgs, order: usize) -> f64 {
    let AsymptoticArgs { a, b } = args;
    if order == 0 {
        return a - b;
    }
    let ia = 1.0 / a;
    let tail = TERMS[..order - 1]
        .iter()
        .rev()
        .fold(0.0, |acc, (poly, den)| {
            ia * (super::horner(poly, b) / den + acc)
        });
    a - b + b / a * (1.0 + tail)
}

/// Large-argument series of `W` (principal branch) or the `x -> 0-` series of `W-1`.
pub fn asymptotic_expansion(branch: Branch, x: f64, order: usize) -> Result<f64> {
    if order > MAX_ASYMPTOTIC_ORDER {
        return Err(Error::InvalidOrder {
            what: "asymptotic expansion",
            order,
            min: 0,
            max: MAX_ASYMPTOTIC_ORDER,
        });
    }
    Ok(asymptotic_series(AsymptoticArgs::new(branch, x)?, order))
}
