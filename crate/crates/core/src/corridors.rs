//! Monotone inward geodesics ("corridors"), neighbourhood access and
//! corridor hit-time profiles.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fields::{CanonicalFields, DistanceField};
use crate::graph::{PartitionGraph, VertexId};
use crate::partitions::Partition;
use crate::refsets::{CanonicalSets, RefSetName, VertexSet};
use crate::stats::{Median, Share};

/// Largest vertex count for which all shortest paths may be enumerated.
pub const PATH_ENUMERATION_GUARD: usize = 200;

/// A vertex sequence along which `d_S` drops by one at every step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Corridor {
    refset: RefSetName,
    vertices: Vec<VertexId>,
    distances: Vec<u32>,
}

impl Corridor {
    pub fn refset(&self) -> &RefSetName {
        &self.refset
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn distances(&self) -> &[u32] {
        &self.distances
    }

    /// Number of edges.
    pub fn steps(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn start(&self) -> VertexId {
        self.vertices[0]
    }

    pub fn terminal(&self) -> VertexId {
        *self.vertices.last().unwrap()
    }

    /// Index of the first corridor vertex in `target`, the start counting as 0.
    pub fn hit_time<S: VertexSet + ?Sized>(&self, target: &S) -> Option<usize> {
        self.vertices
            .iter()
            .position(|&v| target.contains_vertex(v))
    }

    pub fn to_export(&self, g: &PartitionGraph) -> CorridorExport {
        CorridorExport {
            refset: self.refset.to_string(),
            vertices: self.vertices.iter().map(|&v| g.vertex(v).clone()).collect(),
            distances: self.distances.clone(),
        }
    }
}

/// JSON form of a corridor: partitions plus the distance trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorridorExport {
    pub refset: String,
    pub vertices: Vec<Partition>,
    pub distances: Vec<u32>,
}

/// True iff consecutive vertices are adjacent and `d_S` drops by exactly one.
pub fn is_monotone_inward(g: &PartitionGraph, f: &DistanceField, path: &[VertexId]) -> bool {
    path.windows(2)
        .all(|w| g.is_edge(w[0], w[1]) && f.dist(w[1]) + 1 == f.dist(w[0]))
}

fn descend(g: &PartitionGraph, f: &DistanceField, start: VertexId, stop_at: u32) -> Corridor {
    let mut vertices = vec![start];
    let mut current = start;
    while f.dist(current) > stop_at {
        let target = f.dist(current) - 1;
        current = g
            .neighbors(current)
            .iter()
            .copied()
            .filter(|&w| f.dist(w) == target)
            .min_by(|&a, &b| g.vertex(a).cmp(g.vertex(b)))
            .expect("every vertex off the set has a descending neighbour");
        vertices.push(current);
    }
    let distances = vertices.iter().map(|&v| f.dist(v)).collect();
    Corridor {
        refset: f.refset().name().clone(),
        vertices,
        distances,
    }
}

/// Greedy descent to the set, always stepping to the smallest neighbour
/// (partition order) one shell closer.
pub fn canonical_corridor(
    g: &PartitionGraph,
    f: &DistanceField,
    start: VertexId,
) -> Result<Corridor> {
    g.check_vertex(start)?;
    Ok(descend(g, f, start, 0))
}

/// Canonical corridor truncated on entering the closed `r`-neighbourhood.
pub fn corridor_to_neighborhood(
    g: &PartitionGraph,
    f: &DistanceField,
    start: VertexId,
    r: u32,
) -> Result<Corridor> {
    g.check_vertex(start)?;
    Ok(descend(g, f, start, r))
}

/// Every path of length `d_S(start)` from `start` into the set.
pub fn all_shortest_paths_to_set(
    g: &PartitionGraph,
    f: &DistanceField,
    start: VertexId,
) -> Result<Vec<Vec<VertexId>>> {
    if g.vertex_count() > PATH_ENUMERATION_GUARD {
        return Err(Error::EnumerationGuard {
            vertices: g.vertex_count(),
            limit: PATH_ENUMERATION_GUARD,
        });
    }
    g.check_vertex(start)?;
    let mut out = Vec::new();
    let mut path = vec![start];
    extend_paths(g, f, &mut path, &mut out);
    Ok(out)
}

fn extend_paths(
    g: &PartitionGraph,
    f: &DistanceField,
    path: &mut Vec<VertexId>,
    out: &mut Vec<Vec<VertexId>>,
) {
    let last = *path.last().unwrap();
    if f.dist(last) == 0 {
        out.push(path.clone());
        return;
    }
    for &w in g.neighbors(last) {
        if f.dist(w) + 1 == f.dist(last) {
            path.push(w);
            extend_paths(g, f, path, out);
            path.pop();
        }
    }
}

/// Corridor families profiled by the atlas.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CorridorType {
    Axial,
    Spinal,
    Framework,
}

impl CorridorType {
    pub const ALL: [CorridorType; 3] = [
        CorridorType::Axial,
        CorridorType::Spinal,
        CorridorType::Framework,
    ];

    pub fn field<'a>(&self, fields: &'a CanonicalFields) -> &'a DistanceField {
        match self {
            CorridorType::Axial => &fields.axis,
            CorridorType::Spinal => &fields.spine,
            CorridorType::Framework => &fields.framework,
        }
    }
}

impl fmt::Display for CorridorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CorridorType::Axial => "axial",
            CorridorType::Spinal => "spinal",
            CorridorType::Framework => "framework",
        })
    }
}

impl FromStr for CorridorType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "axial" | "axis" => Ok(CorridorType::Axial),
            "spinal" | "spine" => Ok(CorridorType::Spinal),
            "framework" => Ok(CorridorType::Framework),
            other => Err(Error::UnknownReferenceSet(other.to_string())),
        }
    }
}

/// Target zones for corridor profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Target {
    Axis,
    Spine,
    TopDegree,
    TopSimplex,
}

impl Target {
    pub const ALL: [Target; 4] = [
        Target::Axis,
        Target::Spine,
        Target::TopDegree,
        Target::TopSimplex,
    ];
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Target::Axis => "axis",
            Target::Spine => "spine",
            Target::TopDegree => "top_degree",
            Target::TopSimplex => "top_simplex",
        })
    }
}

/// Vertices attaining the maximum degree.
pub fn top_degree_zone(g: &PartitionGraph) -> Vec<bool> {
    let max = g.max_degree();
    (0..g.vertex_count()).map(|v| g.degree(v) == max).collect()
}

/// Vertices attaining the maximum local simplex dimension.
pub fn top_simplex_zone(dims: &[usize]) -> Vec<bool> {
    let max = dims.iter().copied().max().unwrap_or(0);
    dims.iter().map(|&d| d == max).collect()
}

/// Membership masks for every [`Target`].
#[derive(Debug, Clone)]
pub struct TargetZones {
    pub axis: Vec<bool>,
    pub spine: Vec<bool>,
    pub top_degree: Vec<bool>,
    pub top_simplex: Vec<bool>,
}

impl TargetZones {
    pub fn build(g: &PartitionGraph, sets: &CanonicalSets, simplex_dims: &[usize]) -> Self {
        let mask = |s: &crate::refsets::ReferenceSet| {
            (0..g.vertex_count()).map(|v| s.contains(v)).collect()
        };
        TargetZones {
            axis: mask(&sets.axis),
            spine: mask(&sets.spine),
            top_degree: top_degree_zone(g),
            top_simplex: top_simplex_zone(simplex_dims),
        }
    }

    pub fn get(&self, target: Target) -> &[bool] {
        match target {
            Target::Axis => &self.axis,
            Target::Spine => &self.spine,
            Target::TopDegree => &self.top_degree,
            Target::TopSimplex => &self.top_simplex,
        }
    }
}

/// Hit statistics for one target over all starts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TargetStats {
    pub target: Target,
    /// Median hit time over successful starts only.
    pub median_hit: Option<Median>,
    pub success: Share,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorridorProfile {
    pub corridor_type: CorridorType,
    pub targets: Vec<TargetStats>,
}

impl CorridorProfile {
    pub fn stats(&self, target: Target) -> Option<&TargetStats> {
        self.targets.iter().find(|t| t.target == target)
    }
}

/// Builds the canonical corridor from every vertex and reports, per target,
/// the median first-hit time over starts that hit and the success rate over
/// all `p(n)` starts.
pub fn corridor_profile(
    g: &PartitionGraph,
    fields: &CanonicalFields,
    corridor_type: CorridorType,
    zones: &TargetZones,
    targets: &[Target],
) -> CorridorProfile {
    let field = corridor_type.field(fields);
    let corridors: Vec<Corridor> = (0..g.vertex_count())
        .map(|v| descend(g, field, v, 0))
        .collect();
    let targets = targets
        .iter()
        .map(|&target| {
            let mask = zones.get(target);
            let hits: Vec<i64> = corridors
                .iter()
                .filter_map(|c| c.hit_time(mask))
                .map(|t| t as i64)
                .collect();
            TargetStats {
                target,
                median_hit: Median::of(&hits),
                success: Share::new(hits.len() as u64, g.vertex_count() as u64),
            }
        })
        .collect();
    CorridorProfile {
        corridor_type,
        targets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refsets::axis;

    // n=4 ids: (4)=0 (3,1)=1 (2,2)=2 (2,1,1)=3 (1^4)=4
    fn setup() -> (PartitionGraph, DistanceField) {
        let g = PartitionGraph::build(4).unwrap();
        let f = DistanceField::new(&g, &axis(&g).unwrap()).unwrap();
        (g, f)
    }

    #[test]
    fn canonical_corridors_n4() {
        let (g, f) = setup();
        let c = canonical_corridor(&g, &f, 4).unwrap();
        assert_eq!(c.vertices(), &[4, 3, 2]);
        assert_eq!(c.distances(), &[2, 1, 0]);
        assert_eq!(
            canonical_corridor(&g, &f, 0).unwrap().vertices(),
            &[0, 1, 2]
        );
        let trivial = canonical_corridor(&g, &f, 2).unwrap();
        assert_eq!(trivial.steps(), 0);
        assert!(canonical_corridor(&g, &f, 9).is_err());
    }

    #[test]
    fn neighbourhood_truncation() {
        let (g, f) = setup();
        let c = corridor_to_neighborhood(&g, &f, 0, 1).unwrap();
        assert_eq!(c.vertices(), &[0, 1]);
        assert_eq!(c.distances().last(), Some(&1));
        assert_eq!(corridor_to_neighborhood(&g, &f, 1, 3).unwrap().steps(), 0);
    }

    #[test]
    fn shortest_paths_n4() {
        let (g, f) = setup();
        assert_eq!(
            all_shortest_paths_to_set(&g, &f, 0).unwrap(),
            vec![vec![0, 1, 2]]
        );
        assert_eq!(all_shortest_paths_to_set(&g, &f, 2).unwrap(), vec![vec![2]]);
        let big = PartitionGraph::build(16).unwrap();
        let fb = DistanceField::new(&big, &axis(&big).unwrap()).unwrap();
        assert!(matches!(
            all_shortest_paths_to_set(&big, &fb, 0),
            Err(Error::EnumerationGuard { .. })
        ));
    }

    #[test]
    fn hit_times() {
        let (g, f) = setup();
        let c = canonical_corridor(&g, &f, 4).unwrap();
        let zone = top_degree_zone(&g);
        assert_eq!(zone, vec![false, true, false, true, false]);
        assert_eq!(c.hit_time(&zone), Some(1));
        assert_eq!(c.hit_time(f.refset()), Some(2));
        assert_eq!(c.hit_time(&vec![false; 5]), None);
        assert_eq!(c.hit_time(&vec![false, false, false, false, true]), Some(0));
    }

    #[test]
    fn monotone_check() {
        let (g, f) = setup();
        assert!(is_monotone_inward(&g, &f, &[0, 1, 2]));
        assert!(!is_monotone_inward(&g, &f, &[1, 3]));
        assert!(!is_monotone_inward(&g, &f, &[0, 2]));
    }
}
