use thiserror::Error;

use crate::graph::{EdgeId, VertexId};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("loop at vertex {0}: simple graphs only")]
    Loop(VertexId),
    #[error("duplicate edge {{{0}, {1}}}: simple graphs only")]
    MultiEdge(VertexId, VertexId),
    #[error("edge id {edge} out of range ({m} edges)")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
    #[error("graph6 parse error at byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
    #[error("embedding parse error on line {line}: {message}")]
    EmbeddingFormat { line: usize, message: String },
    #[error("rotation at vertex {vertex} is invalid: {message}")]
    Rotation { vertex: VertexId, message: String },
    #[error("embedding is not planar (genus {genus})")]
    NotPlanar { genus: usize },
    #[error("embedding is disconnected; duals are defined for connected plane graphs")]
    Disconnected,
    #[error("dual has parallel edges or loops; a simple dual is required")]
    NonSimpleDual,
    #[error("not a plane triangulation")]
    NotTriangulation,
    #[error("contract violation: {0}")]
    Contract(String),
    #[error("not a 1-selection set: component {component:?} has {edges} edges on {vertices} vertices")]
    NotSelection { component: Vec<VertexId>, edges: usize, vertices: usize },
    #[error("removing the selection does not leave a bipartite graph")]
    NotBipartiteAfterRemoval,
    #[error("size guard: {0}")]
    TooLarge(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("construction check failed: {0}")]
    Construction(String),
    #[error("input error: {0}")]
    Input(String),
}
