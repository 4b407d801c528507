//! Distance fields to reference sets, shells, edge trichotomy, combined
//! signatures and the intrinsic height orientation.

use std::collections::VecDeque;
use std::fmt;
use std::ops::Neg;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{PartitionGraph, VertexId};
use crate::refsets::{CanonicalSets, ReferenceSet};

/// Exact graph distance from every vertex to the nearest member of a set.
#[derive(Debug, Clone)]
pub struct DistanceField {
    refset: ReferenceSet,
    dist: Vec<u32>,
    max_radius: u32,
}

/// Direction of an edge at its tail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Inward,
    Level,
    Outward,
}

impl Direction {
    pub fn from_sigma(sigma: i8) -> Self {
        match sigma {
            -1 => Direction::Inward,
            0 => Direction::Level,
            1 => Direction::Outward,
            other => panic!("edge increment {other} violates the trichotomy"),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Inward => "inward",
            Direction::Level => "level",
            Direction::Outward => "outward",
        })
    }
}

impl DistanceField {
    /// Multi-source BFS seeded with every member of `refset` at distance 0.
    pub fn new(g: &PartitionGraph, refset: &ReferenceSet) -> Result<Self> {
        if refset.is_empty() {
            return Err(Error::EmptyReferenceSet);
        }
        let mut dist = vec![u32::MAX; g.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in refset.members() {
            g.check_vertex(s)?;
            dist[s] = 0;
            queue.push_back(s);
        }
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if dist[w] == u32::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
        debug_assert!(dist.iter().all(|&d| d != u32::MAX), "G_n is connected");
        let max_radius = dist.iter().copied().max().unwrap_or(0);
        Ok(DistanceField {
            refset: refset.clone(),
            dist,
            max_radius,
        })
    }

    pub fn refset(&self) -> &ReferenceSet {
        &self.refset
    }

    pub fn dist(&self, v: VertexId) -> u32 {
        self.dist[v]
    }

    pub fn distances(&self) -> &[u32] {
        &self.dist
    }

    pub fn max_radius(&self) -> u32 {
        self.max_radius
    }

    /// Vertices at distance exactly `r`.
    pub fn shell(&self, r: u32) -> Vec<VertexId> {
        (0..self.dist.len())
            .filter(|&v| self.dist[v] == r)
            .collect()
    }

    /// Vertices at distance at most `r`.
    pub fn neighborhood(&self, r: u32) -> Vec<VertexId> {
        (0..self.dist.len())
            .filter(|&v| self.dist[v] <= r)
            .collect()
    }

    /// `d(v) - d(u)` for an edge `u → v`: -1 inward, 0 level, +1 outward at `u`.
    pub fn edge_sigma(&self, g: &PartitionGraph, u: VertexId, v: VertexId) -> Result<i8> {
        if !g.is_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(self.sigma_unchecked(u, v))
    }

    /// Same as [`edge_sigma`](Self::edge_sigma) without the adjacency check.
    pub fn sigma_unchecked(&self, u: VertexId, v: VertexId) -> i8 {
        (self.dist[v] as i64 - self.dist[u] as i64) as i8
    }

    pub fn direction(&self, g: &PartitionGraph, u: VertexId, v: VertexId) -> Result<Direction> {
        self.edge_sigma(g, u, v).map(Direction::from_sigma)
    }
}

/// Tally of unoriented edges by shell behaviour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct EdgeTally {
    pub level: u64,
    pub transverse: u64,
    pub internal: u64,
    pub total: u64,
}

/// Classifies every unoriented edge as level or transverse; internal edges
/// (both endpoints in the set) are counted separately and are always level.
pub fn classify_edges(g: &PartitionGraph, f: &DistanceField) -> EdgeTally {
    let mut tally = EdgeTally::default();
    for &(u, v) in g.edges() {
        tally.total += 1;
        if f.dist(u) == f.dist(v) {
            tally.level += 1;
        } else {
            tally.transverse += 1;
        }
        if f.refset().contains(u) && f.refset().contains(v) {
            tally.internal += 1;
        }
    }
    tally
}

/// `(σ_M, σ_Ax, σ_Sp, σ_Fr)` for one oriented edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct EdgeSignature(pub [i8; 4]);

impl EdgeSignature {
    /// All nonzero components share one sign; the zero signature qualifies.
    pub fn is_coherent(&self) -> bool {
        !(self.0.contains(&1) && self.0.contains(&-1))
    }

    pub fn is_mixed(&self) -> bool {
        !self.is_coherent()
    }
}

impl Neg for EdgeSignature {
    type Output = EdgeSignature;

    fn neg(self) -> EdgeSignature {
        EdgeSignature(self.0.map(|c| -c))
    }
}

impl fmt::Display for EdgeSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.0;
        write!(f, "({a:+},{b:+},{c:+},{d:+})")
    }
}

/// Distance fields for the four canonical sets of one graph.
#[derive(Debug, Clone)]
pub struct CanonicalFields {
    pub chain: DistanceField,
    pub axis: DistanceField,
    pub spine: DistanceField,
    pub framework: DistanceField,
}

impl CanonicalFields {
    pub fn build(g: &PartitionGraph, sets: &CanonicalSets) -> Self {
        let field =
            |s: &ReferenceSet| DistanceField::new(g, s).expect("canonical sets are nonempty");
        CanonicalFields {
            chain: field(&sets.chain),
            axis: field(&sets.axis),
            spine: field(&sets.spine),
            framework: field(&sets.framework),
        }
    }

    pub fn as_array(&self) -> [&DistanceField; 4] {
        [&self.chain, &self.axis, &self.spine, &self.framework]
    }

    /// Combined signature of the oriented edge `u → v`.
    pub fn combined_signature(
        &self,
        g: &PartitionGraph,
        u: VertexId,
        v: VertexId,
    ) -> Result<EdgeSignature> {
        if !g.is_edge(u, v) {
            return Err(Error::NotAnEdge(u, v));
        }
        Ok(EdgeSignature(
            self.as_array().map(|f| f.sigma_unchecked(u, v)),
        ))
    }
}

/// Outcome of [`height_orientation_audit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HeightAudit {
    pub all_edges_strict: bool,
    pub acyclic: bool,
}

/// Checks that height differs across every edge and that orienting edges
/// from lower to higher height admits a topological order.
pub fn height_orientation_audit(g: &PartitionGraph) -> HeightAudit {
    let h: Vec<u64> = g.vertices().iter().map(|p| p.height()).collect();
    let all_edges_strict = g.edges().iter().all(|&(u, v)| h[u] != h[v]);

    // Kahn's algorithm on the low → high orientation; ties are skipped.
    let mut indegree = vec![0usize; g.vertex_count()];
    for (u, v) in g.oriented_edges() {
        if h[u] < h[v] {
            indegree[v] += 1;
        }
    }
    let mut queue: VecDeque<VertexId> = (0..g.vertex_count())
        .filter(|&v| indegree[v] == 0)
        .collect();
    let mut visited = 0;
    while let Some(u) = queue.pop_front() {
        visited += 1;
        for &v in g.neighbors(u) {
            if h[u] < h[v] {
                indegree[v] -= 1;
                if indegree[v] == 0 {
                    queue.push_back(v);
                }
            }
        }
    }
    HeightAudit {
        all_edges_strict,
        acyclic: visited == g.vertex_count(),
    }
}

/// Result of comparing the directional fields of two sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Equivalence {
    Equivalent,
    /// An oriented edge on which the two fields disagree.
    Witness {
        tail: VertexId,
        head: VertexId,
        sigma_s: i8,
        sigma_t: i8,
    },
}

/// Searches for an oriented edge where `σ_S ≠ σ_T`.
pub fn directional_equivalence(
    g: &PartitionGraph,
    s: &ReferenceSet,
    t: &ReferenceSet,
) -> Result<Equivalence> {
    let fs = DistanceField::new(g, s)?;
    let ft = DistanceField::new(g, t)?;
    Ok(compare_fields(g, &fs, &ft))
}

/// [`directional_equivalence`] on precomputed fields.
pub fn compare_fields(g: &PartitionGraph, fs: &DistanceField, ft: &DistanceField) -> Equivalence {
    g.oriented_edges()
        .find_map(|(u, v)| {
            let (a, b) = (fs.sigma_unchecked(u, v), ft.sigma_unchecked(u, v));
            (a != b).then_some(Equivalence::Witness {
                tail: u,
                head: v,
                sigma_s: a,
                sigma_t: b,
            })
        })
        .unwrap_or(Equivalence::Equivalent)
}

/// Whether `d_S - d_T` takes a single value over all vertices.
pub fn difference_is_constant(fs: &DistanceField, ft: &DistanceField) -> bool {
    let diff = |v: usize| fs.dist(v) as i64 - ft.dist(v) as i64;
    (1..fs.distances().len()).all(|v| diff(v) == diff(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refsets::{axis, main_chain, RefSetName};

    // n=4 ids: (4)=0 (3,1)=1 (2,2)=2 (2,1,1)=3 (1^4)=4
    fn g4() -> PartitionGraph {
        PartitionGraph::build(4).unwrap()
    }

    #[test]
    fn axis_field_n4() {
        let g = g4();
        let f = DistanceField::new(&g, &axis(&g).unwrap()).unwrap();
        assert_eq!(f.distances(), &[2, 1, 0, 1, 2]);
        assert_eq!(f.max_radius(), 2);
        assert_eq!(f.shell(1), vec![1, 3]);
        assert_eq!(f.neighborhood(1), vec![1, 2, 3]);
    }

    #[test]
    fn whole_vertex_set_is_flat() {
        let g = PartitionGraph::build(7).unwrap();
        let all =
            ReferenceSet::new(&g, RefSetName::Custom("all".into()), 0..g.vertex_count()).unwrap();
        let f = DistanceField::new(&g, &all).unwrap();
        assert!(f.distances().iter().all(|&d| d == 0));
        let t = classify_edges(&g, &f);
        assert_eq!((t.level, t.transverse, t.internal), (t.total, 0, t.total));
    }

    #[test]
    fn sigma_examples() {
        let g = g4();
        let f = DistanceField::new(&g, &axis(&g).unwrap()).unwrap();
        assert_eq!(f.edge_sigma(&g, 1, 2).unwrap(), -1);
        assert_eq!(f.edge_sigma(&g, 0, 1).unwrap(), -1);
        assert_eq!(f.edge_sigma(&g, 1, 0).unwrap(), 1);
        assert_eq!(f.direction(&g, 1, 3).unwrap(), Direction::Level);
        assert_eq!(f.edge_sigma(&g, 0, 4), Err(Error::NotAnEdge(0, 4)));

        let m = DistanceField::new(&g, &main_chain(&g)).unwrap();
        // (3,1) and (2,1,1) both hooks
        assert_eq!(m.edge_sigma(&g, 1, 3).unwrap(), 0);
    }

    #[test]
    fn coherence() {
        assert!(EdgeSignature([0, 0, 0, 0]).is_coherent());
        assert!(EdgeSignature([-1, 0, -1, 0]).is_coherent());
        assert!(EdgeSignature([1, -1, 0, 0]).is_mixed());
        assert_eq!(-EdgeSignature([1, -1, 0, 1]), EdgeSignature([-1, 1, 0, -1]));
    }

    #[test]
    fn height_audit_n4() {
        let g = g4();
        let heights: Vec<u64> = g.vertices().iter().map(|p| p.height()).collect();
        assert_eq!(heights, vec![4, 5, 6, 7, 10]);
        assert_eq!(
            height_orientation_audit(&g),
            HeightAudit {
                all_edges_strict: true,
                acyclic: true
            }
        );
    }

    #[test]
    fn equivalence_n4() {
        let g = g4();
        let (ax, m) = (axis(&g).unwrap(), main_chain(&g));
        assert_eq!(
            directional_equivalence(&g, &ax, &ax).unwrap(),
            Equivalence::Equivalent
        );
        match directional_equivalence(&g, &ax, &m).unwrap() {
            Equivalence::Witness {
                tail,
                head,
                sigma_s,
                sigma_t,
            } => {
                assert!(g.is_edge(tail, head));
                assert_ne!(sigma_s, sigma_t);
            }
            Equivalence::Equivalent => panic!("axis and chain differ"),
        }
    }

    #[test]
    fn empty_set_rejected() {
        let g = g4();
        assert_eq!(
            ReferenceSet::new(&g, RefSetName::Custom("e".into()), []).unwrap_err(),
            Error::EmptyReferenceSet
        );
    }
}
