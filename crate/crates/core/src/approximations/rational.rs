use std::fmt;

use super::horner;

/// The shipped rational fits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RationalFit {
    /// Principal branch, fitted on `[-0.31, 0.3]`.
    Q0_1,
    /// Principal branch, fitted on `[0.3, 7]`.
    Q0_2,
    /// Low-order principal-branch fit kept for reference; no stated range.
    Q0Alt0,
    /// Principal branch alternative on `[-0.31, 0.5]`.
    Q0Alt2,
    /// Lower branch, fitted on `[-0.3, -0.05]`.
    Qm1,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RationalFitCoefficients {
    /// Lowest power first.
    pub numerator: &'static [f64],
    /// Lowest power first; always starts with the normalization 1 or the fit's own constant.
    pub denominator: &'static [f64],
    /// Whether the ratio is multiplied by `x`.
    pub leading_x: bool,
}

#[allow(clippy::excessive_precision)]
mod tables {
    use super::RationalFitCoefficients;

    pub const Q0_1: RationalFitCoefficients = RationalFitCoefficients {
        numerator: &[
            1.0,
            5.931375839364438,
            11.392205505329132,
            7.338883399111118,
            0.6534490169919599,
        ],
        denominator: &[
            1.0,
            6.931373689597704,
            16.82349461388016,
            16.43072324143226,
            5.115235195211697,
        ],
        leading_x: true,
    };

    pub const Q0_2: RationalFitCoefficients = RationalFitCoefficients {
        numerator: &[
            1.0,
            2.4450530707265568,
            1.3436642259582265,
            0.14844005539759195,
            0.0008047501729129999,
        ],
        denominator: &[
            1.0,
            3.4447089864860025,
            3.2924898573719523,
            0.9164600188031222,
            0.05306864044833221,
        ],
        leading_x: true,
    };

    pub const Q0_ALT0: RationalFitCoefficients = RationalFitCoefficients {
        numerator: &[60.0, 114.0, 17.0],
        denominator: &[60.0, 174.0, 101.0],
        leading_x: true,
    };

    pub const Q0_ALT2: RationalFitCoefficients = RationalFitCoefficients {
        numerator: &[
            1.0,
            4.790423028527326,
            6.695945075293267,
            2.4243096805908033,
        ],
        denominator: &[
            1.0,
            5.790432723810737,
            10.986445930034288,
            7.391303898769326,
            1.1414723648617864,
        ],
        leading_x: true,
    };

    pub const QM1: RationalFitCoefficients = RationalFitCoefficients {
        numerator: &[-7.814176723907436, 253.88810188892484, 657.9493176902304],
        denominator: &[
            1.0,
            -60.43958713690808,
            99.98567083107612,
            682.6073999909428,
            962.1784396969866,
            1477.9341280760887,
        ],
        leading_x: false,
    };
}

impl RationalFit {
    pub const ALL: [RationalFit; 5] = [
        RationalFit::Q0_1,
        RationalFit::Q0_2,
        RationalFit::Q0Alt0,
        RationalFit::Q0Alt2,
        RationalFit::Qm1,
    ];

    pub fn coefficients(self) -> &'static RationalFitCoefficients {
        match self {
            RationalFit::Q0_1 => &tables::Q0_1,
            RationalFit::Q0_2 => &tables::Q0_2,
            RationalFit::Q0Alt0 => &tables::Q0_ALT0,
            RationalFit::Q0Alt2 => &tables::Q0_ALT2,
            RationalFit::Qm1 => &tables::QM1,
        }
    }

    /// Interval the fit was made on, where one is known.
    pub fn fit_window(self) -> Option<(f64, f64)> {
        match self {
            RationalFit::Q0_1 => Some((-0.31, 0.3)),
            RationalFit::Q0_2 => Some((0.3, 7.0)),
            RationalFit::Q0Alt0 => None,
            RationalFit::Q0Alt2 => Some((-0.31, 0.5)),
            RationalFit::Qm1 => Some((-0.3, -0.05)),
        }
    }

    #[inline]
    pub fn eval(self, x: f64) -> f64 {
        let c = self.coefficients();
        let ratio = horner(c.numerator, x) / horner(c.denominator, x);
        if c.leading_x {
            x * ratio
        } else {
            ratio
        }
    }
}

impl fmt::Display for RationalFit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RationalFit::Q0_1 => "Q0_1",
            RationalFit::Q0_2 => "Q0_2",
            RationalFit::Q0Alt0 => "Q0_alt0",
            RationalFit::Q0Alt2 => "Q0_alt2",
            RationalFit::Qm1 => "Qm1",
        })
    }
}

/// Evaluates a rational fit. Total on the reals apart from denominator roots,
/// none of which lie inside a fit window.
pub fn rational_fit(fit: RationalFit, x: f64) -> f64 {
    fit.eval(x)
}
