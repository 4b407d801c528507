use thiserror::Error;

use crate::graph::VertexId;

/// Errors produced by the partition-graph toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("n must be at least 1")]
    ZeroN,

    #[error("n = {n} exceeds the configured cap of {cap}")]
    NAboveCap { n: u32, cap: u32 },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot parse partition from {input:?}: {reason}")]
    PartitionSyntax { input: String, reason: String },

    #[error("partitions of different integers cannot be compared ({left} vs {right})")]
    MismatchedN { left: u32, right: u32 },

    #[error("{partition} is not a partition of {n}")]
    NotAVertex { partition: String, n: u32 },

    #[error("vertex id {0} is out of range")]
    VertexOutOfRange(VertexId),

    #[error("vertices {0} and {1} are not adjacent")]
    NotAnEdge(VertexId, VertexId),

    #[error("G_{n} has no self-conjugate partition, so the axis and spine are empty")]
    NoSelfConjugate { n: u32 },

    #[error("reference set is empty")]
    EmptyReferenceSet,

    #[error("unknown reference set {0:?}")]
    UnknownReferenceSet(String),

    #[error("graph with {vertices} vertices exceeds the enumeration guard of {limit}")]
    EnumerationGuard { vertices: usize, limit: usize },

    #[error("invalid reference-set file: {0}")]
    RefSetFile(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
