use thiserror::Error;

/// Errors surfaced by the estimation and simulation pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("non-finite value in {0}")]
    NonFinite(&'static str),

    #[error("need at least 2 observations, got {0}")]
    TooFewObservations(usize),

    #[error("data must be centered before this operation")]
    NotCentered,

    #[error("exposure cross-moment matrix is numerically singular (rcond {rcond:.3e}); exposures may be collinear")]
    SingularExposures { rcond: f64 },

    #[error("matrix is not symmetric (max asymmetry {0:.3e})")]
    NotSymmetric(f64),

    #[error("tuning parameter must be nonnegative, got {0}")]
    NegativeTau(f64),

    #[error("row {row}: no feasible point found; smallest residual achieved {achieved:.3e} exceeds tau {tau:.3e}")]
    Infeasible { row: usize, tau: f64, achieved: f64 },

    #[error("row {row}: constraint solver stalled after {iters} iterations (residual {residual:.3e})")]
    SolverStalled {
        row: usize,
        iters: usize,
        residual: f64,
    },

    #[error("coordinate descent did not converge after {0} sweeps")]
    LassoNonConvergence(usize),

    #[error("scaled lasso did not converge after {0} outer iterations")]
    ScaledLassoNonConvergence(usize),

    #[error("negative variance {0:.3e}; upstream covariance is not positive semi-definite")]
    NegativeVariance(f64),

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),

    #[error("{skipped} of {total} bootstrap resamples were degenerate")]
    DegenerateBootstrap { skipped: usize, total: usize },

    #[error("{failed} of {total} replications failed")]
    TooManyFailures { failed: usize, total: usize },

    #[error("invalid scenario: {0}")]
    InvalidScenario(String),

    #[error("covariance generator produced a non positive definite matrix after {0} retries")]
    GraphNotPositiveDefinite(usize),

    #[error("csv: {0}")]
    Csv(String),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
