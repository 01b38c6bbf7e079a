use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not positive definite (pivot {pivot:.3e} at index {index})")]
    NotPositiveDefinite { index: usize, pivot: f64 },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("activation pieces are discontinuous at breakpoint {breakpoint}: {left} vs {right}")]
    DiscontinuousActivation {
        breakpoint: f64,
        left: f64,
        right: f64,
    },

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("degenerate data: {0}")]
    DegenerateData(String),

    #[error("simplex iteration limit reached after {0} pivots")]
    IterationLimit(usize),

    #[error("cutting-plane limit reached after {0} cuts")]
    CutLimit(usize),

    #[error("pattern enumeration too large: estimated {estimate} regions exceeds cap {cap}")]
    TooLarge { estimate: u128, cap: u128 },

    #[error("dual solver did not converge within {0} iterations")]
    NoConvergence(usize),

    #[error("boundary support vector set is empty (nu too extreme)")]
    EmptyBoundary,

    #[error("sink is not reachable from source")]
    Unreachable,

    #[error("master problem is infeasible")]
    MasterInfeasible,

    #[error("master problem is unbounded")]
    MasterUnbounded,

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
