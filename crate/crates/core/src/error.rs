use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("a digraph needs at least one vertex")]
    NoVertices,
    #[error("loop arc at vertex {0}")]
    LoopArc(usize),
    #[error("vertex {vertex} out of range for a digraph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("digraph has no arcs")]
    NoArcs,
    #[error("vertex {0} has zero outdegree")]
    ZeroOutdegree(usize),
    #[error("digraph is not strongly connected")]
    NotStronglyConnected,
    #[error("power iteration did not converge after {iterations} iterations (gap {gap:e})")]
    NotConverged { iterations: usize, gap: f64 },
    #[error("weight function is not positive on arc ({0}, {1})")]
    NonPositiveWeight(usize, usize),
    #[error("infeasible bipartite parameters: {0}")]
    InfeasibleBipartite(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("invalid reconstruction target: {0}")]
    InvalidTarget(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
