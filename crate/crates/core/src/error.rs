use crate::numerics::ComplexValue;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function} has a pole at {at}")]
    Pole { function: &'static str, at: ComplexValue },

    #[error("{function} is undefined at {value}")]
    Domain { function: &'static str, value: f64 },

    #[error("argument {at} lies on a branch cut")]
    BranchCut { at: ComplexValue },

    #[error("parity requirement not met: {0}")]
    Parity(String),

    #[error("{at} is within 1e-12 of a kernel pole")]
    NearPole { at: ComplexValue },

    #[error("kernel has infinitely many poles in the strip")]
    InfiniteCensus,

    #[error("closed-form derivative of order {order} is not available")]
    DerivativeUnavailable { order: u32 },

    #[error("no convergence: error estimate {estimate:e} after {evaluations} evaluations")]
    NonConvergence { estimate: f64, evaluations: usize },

    #[error("integrand is singular on the path at x = {at}")]
    SingularOnPath { at: f64 },

    #[error("symmetrization does not remove the singularity at the origin")]
    PoleOrder,

    #[error("growth rate {rate} reaches the divergence threshold {threshold}")]
    ThresholdViolation { rate: f64, threshold: f64 },

    #[error("a kernel pole lies on the contour and F does not vanish there")]
    OnContour,

    #[error("premise violated: {0}")]
    Premise(String),

    #[error("resonant parameter: {0}")]
    Resonance(String),

    #[error("parameter {name} = {value} is outside its window {window}")]
    ParamWindow { name: String, value: f64, window: String },

    #[error("unknown catalog case {0}")]
    UnknownCase(String),

    #[error("parse error: {0}")]
    Parse(String),
}
