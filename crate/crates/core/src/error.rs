use thiserror::Error;

use crate::Branch;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument lies outside the real domain of the requested function.
    #[error("argument {x} is outside the domain of {what}")]
    Domain { what: &'static str, x: f64 },

    #[error("invalid branch index {0}, expected 0 or -1")]
    InvalidBranch(i32),

    #[error("order {order} is not available for {what} (supported {min}..={max})")]
    InvalidOrder {
        what: &'static str,
        order: usize,
        min: usize,
        max: usize,
    },

    /// A refinement step was asked to divide by zero or take the log of a non-positive number.
    #[error("singular refinement step at x = {x}, w = {w}")]
    SingularStep { x: f64, w: f64 },

    #[error("degenerate Fritsch step at x = {x}, w = {w} (q - 2z = 0)")]
    DegenerateStep { x: f64, w: f64 },

    #[error("evaluator `{evaluator}` is not defined on branch {branch}")]
    UnsupportedEvaluator {
        evaluator: &'static str,
        branch: Branch,
    },

    #[error("unknown evaluator `{0}`")]
    UnknownEvaluator(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("convergence order fit needs at least two points above the rounding floor, got {0}")]
    InsufficientOrderData(usize),
}

impl Error {
    pub(crate) fn domain(what: &'static str, x: f64) -> Self {
        Error::Domain { what, x }
    }

    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain { .. })
    }
}
