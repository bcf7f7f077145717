use thiserror::Error;

/// Errors shared across the combinatorial, formula, geometric and Gale layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Vertex-facet data failed a structural invariant, or face enumeration
    /// could not grade the closure (some maximal chain has the wrong length).
    #[error("non-polytopal input: {0}")]
    NonPolytopalInput(String),

    /// More vertices than the dense bitset representation supports.
    #[error("too many vertices: {0} (at most 64 supported)")]
    TooManyVertices(usize),

    /// A formula or constructor parameter is outside its stated domain.
    #[error("domain error: {0}")]
    DomainError(String),

    /// Vertex passed to truncation is not simple.
    #[error("vertex {0} is not simple")]
    NotSimpleVertex(usize),

    /// Point set does not affinely span the ambient space.
    #[error("degenerate input: affine hull has dimension {found}, ambient is {ambient}")]
    DegenerateInput { found: usize, ambient: usize },

    /// Polar dual requested but the origin is not strictly interior.
    #[error("origin is not strictly interior to the polytope")]
    OriginNotInterior,

    /// Slicing hyperplane passes through a vertex.
    #[error("vertex {0} lies on the slicing hyperplane")]
    VertexOnHyperplane(usize),

    /// Slicing hyperplane misses the interior of the polytope.
    #[error("hyperplane does not meet the interior of the polytope")]
    NoIntersection,

    /// Gale diagram fails the open-halfplane validity condition.
    #[error("invalid Gale diagram: {0}")]
    InvalidDiagram(String),

    /// Construction expression is well-formed but dimensions do not compose.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// Construction expression failed to parse.
    #[error("{0}")]
    Parse(#[from] ParseError),

    /// Malformed rational string or JSON payload.
    #[error("encoding error: {0}")]
    Encoding(String),
}

/// Parse failure with byte position and the token classes that were expected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {position}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

pub type Result<T> = std::result::Result<T, Error>;
