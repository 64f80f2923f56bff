use thiserror::Error;

/// Structural errors raised while building or validating graphs and trees.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("graph is not connected")]
    Disconnected,
    #[error("not a tree: {n} vertices but {m} edges")]
    EdgeCount { n: usize, m: usize },
    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),
    #[error("vertex {0} has no leaf rank")]
    NoLeafRank(usize),
}

/// Errors from the text formats (edge lists and graph6).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: malformed entry {text:?}")]
    Malformed { line: usize, text: String },
    #[error("line {line}: {source}")]
    Invalid {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("graph6: byte {byte:#04x} at offset {offset} outside the printable range 63..=126")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6: truncated input")]
    Truncated,
    #[error("graph6: {0} trailing bytes")]
    TrailingData(usize),
}
