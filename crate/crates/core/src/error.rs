use thiserror::Error;

use crate::polytope::FaceId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("interpolation nodes are not pairwise distinct (node {0} repeats)")]
    DuplicateNode(i64),
    #[error("interpolation needs {expected} samples for the degree bound, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("Laurent exponent overflow")]
    ExponentOverflow,

    #[error("vertex {index} has {got} coordinates, expected {expected}")]
    DimensionMismatch { index: usize, expected: usize, got: usize },
    #[error("polytope is not full-dimensional: affine hull has dimension {rank} in ambient dimension {ambient}")]
    NotFullDimensional { rank: usize, ambient: usize },
    #[error("{got} vertices exceeds the vertex cap of {cap}")]
    TooManyVertices { got: usize, cap: usize },
    #[error("vertex {0} is listed more than once")]
    DuplicateVertex(usize),
    #[error("vertex {0} is not an extreme point of the convex hull")]
    NonExtremeVertex(usize),
    #[error("{got} facets exceeds the face enumeration cap of {cap}")]
    EnumerationBudgetExceeded { got: usize, cap: usize },
    #[error("unsupported dimension {dim} for {kind}")]
    UnsupportedDimension { kind: String, dim: usize },
    #[error("integer overflow in exact geometry")]
    ArithmeticOverflow,

    #[error("lattice-point box of {volume} points exceeds the counting budget of {budget}")]
    BudgetExceeded { volume: u128, budget: u64 },
    #[error("dilation factor must be positive")]
    NonPositiveDilation,

    #[error("unknown face {0}")]
    UnknownFace(FaceId),
    #[error("face list is not closed under taking faces: {missing} lies below {face} but is not listed")]
    NotClosedSubcomplex { face: FaceId, missing: FaceId },
    #[error("weight function does not cover exactly the faces of the polytope")]
    WeightDomainMismatch,
    #[error("poset is not Eulerian")]
    NotEulerian,
    #[error("poset is not graded: {0}")]
    NotGraded(String),

    #[error("inconsistent Ehrhart data for face {face}: Ehr(0) = {value}, expected 1")]
    Inconsistent { face: FaceId, value: String },
    #[error("intersection cohomology Betti number {value} at t^{degree} is not a nonnegative integer")]
    NonIntegralBetti { degree: i64, value: String },
    #[error("polytope is not simple")]
    NotSimple,

    #[error("parse error: {0}")]
    Parse(String),
}
