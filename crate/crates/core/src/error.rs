use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a hypergraph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },

    #[error("hyperedge index {index} out of range ({edge_count} hyperedges)")]
    EdgeIndexOutOfRange { index: usize, edge_count: usize },

    #[error("hyperedge {index} is empty")]
    EmptyHyperedge { index: usize },

    #[error("hyperedge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: usize },

    #[error("coloring has {got} entries, expected {expected}")]
    PartialColoring { expected: usize, got: usize },

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("invalid family specification: {0}")]
    Family(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid budget: {0}")]
    Budget(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
