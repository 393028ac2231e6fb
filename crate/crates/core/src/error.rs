use thiserror::Error;

use crate::coloring::VerificationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {count} vertices")]
    VertexOutOfRange { vertex: usize, count: usize },
    #[error("edge ({0}, {1}) is not in the graph")]
    EdgeAbsent(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("{labels} labels given for {vertices} vertices")]
    LabelCount { labels: usize, vertices: usize },
    #[error("graph has no edges")]
    EmptyEdgeSet,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("not a tree: {0}")]
    NotATree(String),
    #[error("not a jellyfish: {0}")]
    NotJellyfish(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{construction} produced an invalid coloring ({} violations)", report.violations.len())]
    InvalidColoring {
        construction: &'static str,
        report: Box<VerificationReport>,
    },
    #[error("{construction} found no coloring within {palette} colors after {nodes} search nodes")]
    SearchFailed {
        construction: &'static str,
        palette: u32,
        nodes: u64,
    },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
