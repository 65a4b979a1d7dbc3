use thiserror::Error;

/// Errors raised by the library.
///
/// Every variant maps onto one of three categories (see [`Error::category`]),
/// which the command-line tool turns into process exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value is not rational: coefficient of zeta^{degree} is nonzero")]
    NotRational { degree: usize },
    #[error("polynomial is not divisible by (1+y)^{power}")]
    NotDivisible { power: usize },
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("sublattice is not saturated")]
    NotSaturated,
    #[error("ray {ray} is not a nonzero primitive lattice vector")]
    NonPrimitiveRay { ray: usize },
    #[error("cone {cone:?} is not simplicial")]
    NotSimplicial { cone: Vec<usize> },
    #[error("cones {first:?} and {second:?} do not meet in a common face")]
    BadIntersection {
        first: Vec<usize>,
        second: Vec<usize>,
    },
    #[error("subset is not star-closed: {face:?} lies in the star of {member:?} but is missing")]
    NotStarClosed {
        member: Vec<usize>,
        face: Vec<usize>,
    },
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("polytope rank {rank} exceeds the supported maximum of 3")]
    RankTooHigh { rank: usize },
    #[error("polytope is not simple at vertex {vertex}")]
    NotSimple { vertex: usize },
    #[error("fan is not complete")]
    NotComplete,
    #[error("polytope is not a polygon")]
    NotPolygon,
    #[error("specialization y = {value} is not allowed here: {reason}")]
    InvalidSpecialization { value: String, reason: String },
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Coarse classification used for exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    InvalidInput,
    Unsupported,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::NotSimplicial { .. }
            | Error::RankTooHigh { .. }
            | Error::NotSimple { .. }
            | Error::NotComplete
            | Error::NotPolygon => ErrorCategory::Unsupported,
            _ => ErrorCategory::InvalidInput,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
