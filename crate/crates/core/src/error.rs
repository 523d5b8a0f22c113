use thiserror::Error;

use crate::complex::VertexId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operator index {index} out of range for a simplex of dimension {dim}")]
    OperatorOutOfRange { index: usize, dim: usize },

    #[error("generator {gen} of dimension {dim} does not exist")]
    UnknownGenerator { dim: usize, gen: usize },

    #[error("vertex {vertex} out of range (complex has {count} vertices)")]
    VertexOutOfRange { vertex: VertexId, count: usize },

    #[error("chain {chain:?} repeats a vertex")]
    RepeatedVertex { chain: Vec<VertexId> },

    #[error("reachability is not antisymmetric: cycle {cycle:?}")]
    NotAntisymmetric { cycle: Vec<VertexId> },

    #[error("complex is not ordered: {0}")]
    NotOrdered(String),

    #[error("invalid face table: {0}")]
    InvalidFaceTable(String),

    #[error("simplicial identity fails: {0}")]
    SimplicialIdentity(String),

    #[error("not a subcomplex: {0}")]
    NotSubcomplex(String),

    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),

    #[error("invalid fixture parameters for `{name}`: {reason}")]
    InvalidFixtureParams { name: String, reason: String },

    #[error("empty bead list")]
    EmptyBeadList,

    #[error("necklace has {0} vertices; at most 64 are supported")]
    NecklaceTooLarge(usize),

    #[error("invalid necklace morphism: {0}")]
    InvalidMorphism(String),

    #[error("invalid necklace map: {0}")]
    InvalidNecklaceMap(String),

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("invalid cube face: {0}")]
    InvalidCubeFace(String),

    #[error("endpoint mismatch: expected {expected}, found {found}")]
    EndpointMismatch { expected: VertexId, found: VertexId },

    #[error("flag length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("invalid simplicial map: {0}")]
    InvalidSimplicialMap(String),

    #[error("enumeration bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("malformed complex description: {0}")]
    Parse(String),

    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}
