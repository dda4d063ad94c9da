use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed graph document: {0}")]
    MalformedDocument(String),

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("edge {u}-{v} has multiplicity 0")]
    ZeroMultiplicity { u: usize, v: usize },

    #[error("graph is not connected ({components} components)")]
    Disconnected { components: usize },

    #[error("side of a cut must be non-empty and proper")]
    ImproperSide,

    #[error("contraction parts overlap at vertex {0}")]
    OverlappingParts(usize),

    #[error("contraction part is empty")]
    EmptyPart,

    #[error("terminal sets must be non-empty")]
    EmptyTerminalSet,

    #[error("terminal sets intersect at vertex {0}")]
    OverlappingTerminals(usize),

    #[error("vertices must differ (got {0} twice)")]
    SameVertex(usize),

    #[error("vertex sets live on different universes ({0} vs {1})")]
    UniverseMismatch(usize, usize),

    #[error("enumeration cap of {cap} separations exceeded")]
    EnumerationCap { cap: usize },

    #[error("brute-force guard exceeded: {n} vertices (limit {limit})")]
    GuardExceeded { n: usize, limit: usize },

    #[error("separations are nested; corners need a crossing pair")]
    NotCrossing,

    #[error("separations {0} and {1} cross")]
    NotNested(String, String),

    #[error("separation {0} is not a bond")]
    NotBond(String),

    #[error("separation {0} appears twice")]
    DuplicateSeparation(String),

    #[error("tree edge {child}-{parent} does not lie on a path between non-empty parts")]
    NotDense { child: usize, parent: usize },

    #[error("parts do not form a near-partition: {0}")]
    NotNearPartition(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A guarantee of the uncrossing lemmas or a structural postcondition
    /// failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
