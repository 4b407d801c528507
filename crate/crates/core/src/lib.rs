//! The integer-partition graph `G_n` and its directional geometry.
//!
//! Vertices are the partitions of `n`; two partitions are adjacent when one
//! arises from the other by moving a single unit between two existing parts.
//! Relative to a reference set `S` (the hook chain, the self-conjugate axis,
//! the spine or the boundary framework) every edge is inward, level or
//! outward, and every vertex admits a monotone inward geodesic to `S`.
//!
//! ```
//! use partgraph::{refsets, DistanceField, PartitionGraph};
//!
//! let g = PartitionGraph::build(8).unwrap();
//! let axis = refsets::axis(&g).unwrap();
//! let field = DistanceField::new(&g, &axis).unwrap();
//! assert_eq!(field.max_radius(), 4);
//! ```

mod clique;

pub mod atlas;
pub mod corridors;
pub mod error;
pub mod export;
pub mod fields;
pub mod graph;
pub mod partitions;
pub mod refsets;
pub mod stats;
pub mod verify;

pub use atlas::{AtlasReport, GraphAnalysis};
pub use corridors::{Corridor, CorridorType, Target};
pub use error::{Error, Result};
pub use fields::{CanonicalFields, Direction, DistanceField, EdgeSignature};
pub use graph::{PartitionGraph, VertexId, VertexObservables};
pub use partitions::{Partition, PartitionObservables};
pub use refsets::{CanonicalSets, RefSetName, ReferenceSet};
