use crate::value::ValueVector;

/// Errors shared by all model families and solvers.
#[derive(Debug, Clone, thiserror::Error)]
pub enum AdpError {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("infeasible policy: action {action} at state {state}")]
    InfeasiblePolicy { state: usize, action: usize },

    #[error("no convergence after {iterations} iterations (residual {residual:.3e})")]
    NonConvergence {
        iterations: usize,
        residual: f64,
        last: ValueVector,
    },

    #[error("premise violation: {0}")]
    PremiseViolation(String),

    #[error("regularity violation: {0}")]
    Regularity(String),

    #[error("numeric range: {0}")]
    NumericRange(String),

    #[error("well-posedness refusal: spectral radius of the discount operator is {rho}, which is not < 1")]
    WellPosedness { rho: f64 },

    #[error("policy set too large to enumerate: {0}")]
    EnumerationTooLarge(String),

    #[error("operator is not order preserving: {0}")]
    OrderViolation(String),

    #[error("linear solve failed: {0}")]
    SingularSystem(String),
}

pub type Result<T, E = AdpError> = std::result::Result<T, E>;
