use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range (n = {n})")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("coloring is not proper: edge {{{u}, {v}}} joins equal colors")]
    BadColoring { u: usize, v: usize },
    #[error("coloring has {got} labels for {n} vertices")]
    ColoringLength { got: usize, n: usize },
    #[error("{what} limit exceeded (cap {cap})")]
    LimitExceeded { what: &'static str, cap: usize },
    #[error("matching is not a perfect matching of the graph")]
    NotPerfect,
    #[error("edge set is not a matching: edges {0} and {1} share a vertex")]
    NotAMatching(usize, usize),
    #[error("edge id {0} out of range")]
    EdgeOutOfRange(usize),
    #[error("graph has no perfect matching")]
    NoPerfectMatching,
    #[error("edge {0} is not in the matching")]
    NotSubsetOfM(usize),
    #[error("edge {0} belongs to the matching")]
    IntersectsM(usize),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("cell set is empty")]
    EmptyCells,
    #[error("cell set is not connected")]
    Disconnected,
    #[error("cell set encloses a hole")]
    HasHole,
    #[error("duplicate cell ({0}, {1})")]
    DuplicateCell(i32, i32),
    #[error("graph is not a tree")]
    NotATree,
    #[error("not a valid parallel cut: {0}")]
    NotAValidCut(String),
    #[error("row lengths must be positive and non-increasing: {0:?}")]
    BadRowSequence(Vec<usize>),
    #[error("unknown instance name `{0}`")]
    UnknownName(String),
    #[error("cell count {0} exceeds the corpus bound")]
    TooLarge(usize),
    #[error("invalid glue: {0}")]
    InvalidGlue(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invariant `{0}` does not apply to this input")]
    Inapplicable(String),
    #[error("unknown invariant `{0}`")]
    UnknownInvariant(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
}
