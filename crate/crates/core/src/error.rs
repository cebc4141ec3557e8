use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("coordinates cover {found} vertices, graph has {expected}")]
    CoordsMismatch { expected: usize, found: usize },
    #[error("grid dimensions must be positive (got {rows}x{cols})")]
    InvalidGridSpec { rows: usize, cols: usize },
    #[error("labeling covers {found} edges, graph has {expected}")]
    LabelingMismatch { expected: usize, found: usize },
    #[error("coloring covers {found} vertices, graph has {expected}")]
    ColoringMismatch { expected: usize, found: usize },
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("edge ({0}, {1}) is labeled twice")]
    DuplicateLabel(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
    #[error("graph is not a {0}")]
    WrongClass(&'static str),
    #[error("graph carries no grid coordinates")]
    MissingCoords,
    #[error("girth {girth} is below the required minimum {required}")]
    GirthTooSmall { girth: usize, required: usize },
    #[error("no reducible configuration in a nonempty residual graph of {remaining} vertices")]
    Counterexample { remaining: usize },
    #[error("configuration could not be extended with the given leaf colors")]
    ExtensionFailed,
    #[error("malformed configuration: {0}")]
    MalformedConfiguration(&'static str),
    #[error("{found} items exceed the enumeration cap of {cap}")]
    CapExceeded { found: usize, cap: usize },
    #[error("({0}, {1}) is not an edge of the host grid")]
    NotASubgraph(usize, usize),
    #[error("cube layout failed validation: {0}")]
    LayoutInvalid(&'static str),
}
