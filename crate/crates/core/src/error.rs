use alloc::string::String;

use crate::engine::Violation;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge ({u}, {v}) has an endpoint outside [0, {vertex_count})")]
    EndpointOutOfRange {
        u: usize,
        v: usize,
        vertex_count: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("empty graph")]
    EmptyGraph,
    #[error("invalid vertex id {vertex} (graph has {vertex_count} vertices)")]
    InvalidVertex { vertex: usize, vertex_count: usize },
    #[error("invalid edge id {edge} (graph has {edge_count} edges)")]
    InvalidEdgeId { edge: usize, edge_count: usize },
    #[error("invalid parameter for {family}: {reason}")]
    FamilyParameter { family: &'static str, reason: String },
    #[error("not an induced matching: {0}")]
    NotInduced(Violation),
    #[error("brute force refused: {edges} edges exceeds the cap of {cap}")]
    BruteForceCap { edges: usize, cap: usize },
    #[error("{formula}: not applicable ({reason})")]
    NotApplicable {
        formula: &'static str,
        reason: String,
    },
    #[error("{formula}: {numerator} is not divisible by {denominator}")]
    NonIntegral {
        formula: &'static str,
        numerator: i64,
        denominator: u64,
    },
}
