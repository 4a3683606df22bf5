use core::fmt;

use crate::graph::Vertex;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphError {
    VertexOutOfRange { vertex: Vertex, n: usize },
    SelfLoop(Vertex),
    DuplicateEdge(Vertex, Vertex),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KernelError {
    Graph(GraphError),
    /// The source-sink arc is present, so no vertex set separates them.
    SeparatorUndefined { source: Vertex, sink: Vertex },
    ImproperColoring { u: Vertex, v: Vertex },
    NotBipartite,
}

impl fmt::Display for KernelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelError::Graph(e) => e.fmt(f),
            KernelError::SeparatorUndefined { source, sink } => {
                write!(f, "separator undefined: arc ({source}, {sink}) is present")
            }
            KernelError::ImproperColoring { u, v } => {
                write!(f, "coloring is not proper on edge {u} {v}")
            }
            KernelError::NotBipartite => f.write_str("graph is not bipartite"),
        }
    }
}

impl From<GraphError> for KernelError {
    fn from(e: GraphError) -> Self {
        KernelError::Graph(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleError {
    CapExceeded { n: usize, cap: usize },
    /// The problem expects the other kind of graph.
    WrongInstanceKind,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::CapExceeded { n, cap } => {
                write!(f, "instance with {n} vertices exceeds oracle cap {cap}")
            }
            OracleError::WrongInstanceKind => f.write_str("problem does not apply to this graph kind"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for GraphError {}
#[cfg(feature = "std")]
impl std::error::Error for KernelError {}
#[cfg(feature = "std")]
impl std::error::Error for OracleError {}
