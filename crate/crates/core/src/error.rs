use num_complex::Complex64;
use thiserror::Error;

/// Errors surfaced by model evaluation and the numerical oracles.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("evaluation point within {magnitude:.3e} of a pole ({what})")]
    PoleProximity { what: &'static str, magnitude: f64 },

    #[error("sinh r lands on the principal branch cut at r = {at}")]
    BranchCut { at: Complex64 },

    #[error("coordinate map not invertible: |r'(xi)| = {magnitude:.3e} at xi = {at}")]
    NotInvertible { at: Complex64, magnitude: f64 },

    #[error("contour inversion left the Im r = -eps line by {deviation:.3e} at xi = {at}")]
    InversionBranch { at: Complex64, deviation: f64 },

    #[error("degenerate state: sigma*alpha + 2n + 1 = {t:.3e}, coupling inversion divides by it")]
    DegenerateState { t: f64 },

    #[error(
        "differencing step too small: second difference is cancellation noise (ratio {ratio:.3e})"
    )]
    StepTooSmall { ratio: f64 },

    #[error("invalid model: {0}")]
    InvalidModel(String),

    #[error("inconsistent couplings: {0}")]
    InconsistentCouplings(String),

    #[error("eigensolver failure: {0}")]
    Eigensolver(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
