use alloc::string::String;

/// Everything that can go wrong in the core library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("EMPTY_LABEL: the set-label of `{0}` is empty")]
    EmptyLabel(String),
    #[error("MISSING_LABEL: vertex `{0}` has no set-label")]
    MissingLabel(String),
    #[error("DUPLICATE_LABEL: vertices `{0}` and `{1}` carry the same set-label")]
    DuplicateLabel(String, String),
    #[error("UNKNOWN_VERTEX: `{0}`")]
    UnknownVertex(String),
    #[error("UNKNOWN_EDGE: `{0}` `{1}`")]
    UnknownEdge(String, String),
    #[error("INVALID_VERTEX_ID: `{0}`")]
    InvalidVertexId(String),
    #[error("DUPLICATE_VERTEX: `{0}` is declared twice")]
    DuplicateVertex(String),
    #[error("SELF_LOOP: `{0}`")]
    SelfLoop(String),
    #[error("PARALLEL_EDGE: `{0}` `{1}` appears more than once")]
    ParallelEdge(String, String),
    #[error("ADMISSIBILITY_VIOLATION: {0}")]
    AdmissibilityViolation(String),
    #[error("NOT_AP_LABEL: the set-label of `{0}` is not an arithmetic progression")]
    NotApLabel(String),
    #[error("BOUND_EXCEEDED: {what} is {actual}, bound is {bound}")]
    BoundExceeded {
        what: &'static str,
        actual: usize,
        bound: usize,
    },
    #[error("DEGREE_NOT_TWO: `{vertex}` has degree {degree}")]
    DegreeNotTwo { vertex: String, degree: usize },
    #[error("VERTEX_IN_TRIANGLE: `{0}` lies on a triangle")]
    VertexInTriangle(String),
    #[error("EDGE_EXISTS: `{0}` `{1}` are already adjacent")]
    EdgeExists(String, String),
    #[error("INJECTIVITY_COLLISION: the new label of `{new}` equals the label of `{existing}`")]
    InjectivityCollision { new: String, existing: String },
    #[error("NOT_BIPARTITE: the graph contains an odd cycle")]
    NotBipartite,
    #[error("UNKNOWN_THEOREM: `{0}`")]
    UnknownTheorem(String),
    #[error("INVALID_BOUNDS: {0}")]
    InvalidBounds(&'static str),
    #[error("INVALID_FAMILY: {0}")]
    InvalidFamily(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
