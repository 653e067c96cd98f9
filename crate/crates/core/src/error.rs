use thiserror::Error;

/// Errors raised by the exact arithmetic, geometry, solver and duality layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("indeterminate extended-rational form: {0}")]
    Indeterminate(&'static str),

    #[error("direction must be a nonzero vector")]
    ZeroDirection,

    #[error("half-space normal must be nonzero")]
    ZeroNormal,

    #[error("half-space offset must be nonnegative, found {0}")]
    NegativeOffset(String),

    #[error("origin not contained: constraint {index} has negative offset")]
    OriginNotContained { index: usize },

    #[error("polyhedron is empty")]
    EmptyPolyhedron,

    #[error("point violates constraint {index}")]
    InfeasiblePoint { index: usize },

    #[error("dual point is infeasible: {0}")]
    InfeasibleDualPoint(String),

    #[error("variable index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("Fourier-Motzkin row limit of {limit} exceeded")]
    RowLimit { limit: usize },

    #[error("the objective vector is zero")]
    ZeroObjective,

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid rational literal `{0}`")]
    BadRational(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
