//! The partition graph `G_n` under elementary unit transfers.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::clique;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions_capped, Partition, DEFAULT_CAP};

/// Index of a vertex in canonical (decreasing-lex) order.
pub type VertexId = usize;

/// Every partition reachable from `lambda` by moving one unit from part `j`
/// to a different existing part `i`, then reordering.
///
/// The relation is not symmetric: `(n-1,1) → (n)` has no reverse transfer
/// because a single part cannot donate to a part that does not yet exist.
pub fn transfer_targets(lambda: &Partition) -> BTreeSet<Partition> {
    let parts = lambda.parts();
    let k = parts.len();
    let mut out = BTreeSet::new();
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut moved = parts.to_vec();
            moved[i] += 1;
            moved[j] -= 1;
            let mu = Partition::from_unsorted(moved);
            if &mu != lambda {
                out.insert(mu);
            }
        }
    }
    out
}

/// Immutable partition graph for a single `n`.
#[derive(Debug, Clone)]
pub struct PartitionGraph {
    n: u32,
    vertices: Vec<Partition>,
    index: HashMap<Partition, VertexId>,
    adjacency: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
}

/// Per-vertex structural observables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct VertexObservables {
    pub degree: usize,
    pub local_simplex_dim: usize,
    pub height: u64,
    pub support: u32,
}

impl PartitionGraph {
    pub fn build(n: u32) -> Result<Self> {
        Self::build_capped(n, DEFAULT_CAP)
    }

    /// Builds `G_n` by symmetrizing the transfer relation over all vertices.
    pub fn build_capped(n: u32, cap: u32) -> Result<Self> {
        let vertices = enumerate_partitions_capped(n, cap)?;
        let index: HashMap<Partition, VertexId> = vertices
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();

        let mut neighbor_sets = vec![BTreeSet::new(); vertices.len()];
        for (u, lambda) in vertices.iter().enumerate() {
            for mu in transfer_targets(lambda) {
                let v = index[&mu];
                neighbor_sets[u].insert(v);
                neighbor_sets[v].insert(u);
            }
        }
        let adjacency: Vec<Vec<VertexId>> = neighbor_sets
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let edges = adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
            .collect();

        Ok(PartitionGraph {
            n,
            vertices,
            index,
            adjacency,
            edges,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex(&self, v: VertexId) -> &Partition {
        &self.vertices[v]
    }

    pub fn id_of(&self, lambda: &Partition) -> Option<VertexId> {
        self.index.get(lambda).copied()
    }

    /// Like [`id_of`](Self::id_of), but reports a descriptive error.
    pub fn require_id(&self, lambda: &Partition) -> Result<VertexId> {
        self.id_of(lambda).ok_or_else(|| Error::NotAVertex {
            partition: lambda.to_string(),
            n: self.n,
        })
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertices.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// Sorted neighbor ids.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Unordered edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Both orientations of every edge, grouped by tail.
    pub fn oriented_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().map(move |&v| (u, v)))
    }

    pub fn is_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.adjacency.len() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Single-source BFS distances; `None` marks unreachable vertices.
    pub fn bfs_from(&self, source: VertexId) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.vertices.len()];
        let mut queue = VecDeque::from([source]);
        dist[source] = Some(0);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// True iff BFS from `(n)` reaches every vertex.
    pub fn is_connected(&self) -> bool {
        let root = self
            .id_of(&Partition::single_row(self.n))
            .expect("(n) is always a vertex");
        self.bfs_from(root).iter().all(Option::is_some)
    }

    /// Largest clique through `v`, minus one.
    pub fn local_simplex_dimension(&self, v: VertexId) -> usize {
        clique::max_clique_in(self, self.neighbors(v))
    }

    pub fn local_simplex_dimensions(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .map(|v| self.local_simplex_dimension(v))
            .collect()
    }

    pub fn observables(&self, v: VertexId) -> VertexObservables {
        let lambda = &self.vertices[v];
        VertexObservables {
            degree: self.degree(v),
            local_simplex_dim: self.local_simplex_dimension(v),
            height: lambda.height(),
            support: lambda.support(),
        }
    }

    pub fn all_observables(&self) -> Vec<VertexObservables> {
        (0..self.vertex_count())
            .map(|v| self.observables(v))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn transfer_examples() {
        assert!(transfer_targets(&p(&[4])).is_empty());
        assert_eq!(
            transfer_targets(&p(&[3, 1])),
            BTreeSet::from([p(&[4]), p(&[2, 2])])
        );
        assert_eq!(
            transfer_targets(&p(&[2, 1, 1])),
            BTreeSet::from([p(&[3, 1]), p(&[2, 2])])
        );
    }

    #[test]
    fn small_graphs() {
        let g2 = PartitionGraph::build(2).unwrap();
        assert_eq!(g2.vertices(), &[p(&[2]), p(&[1, 1])]);
        assert_eq!(g2.edges(), &[(0, 1)]);

        let g4 = PartitionGraph::build(4).unwrap();
        // (4)=0 (3,1)=1 (2,2)=2 (2,1,1)=3 (1^4)=4
        assert_eq!(g4.edges(), &[(0, 1), (1, 2), (1, 3), (2, 3), (3, 4)]);
        assert_eq!(g4.oriented_edges().count(), 10);
    }

    #[test]
    fn connectivity() {
        for n in [1, 8, 9, 10, 11, 12, 20] {
            assert!(PartitionGraph::build(n).unwrap().is_connected(), "n={n}");
        }
    }

    #[test]
    fn antenna_degrees() {
        for n in 3..=14 {
            let g = PartitionGraph::build(n).unwrap();
            let top = g.id_of(&Partition::single_row(n)).unwrap();
            let bottom = g.id_of(&Partition::single_column(n)).unwrap();
            assert_eq!(
                g.neighbors(top),
                &[g.id_of(&Partition::hook(n, 1)).unwrap()]
            );
            assert_eq!(
                g.neighbors(bottom),
                &[g.id_of(&Partition::hook(n, n - 2)).unwrap()]
            );
        }
    }

    #[test]
    fn simplex_dimension_small() {
        let g2 = PartitionGraph::build(2).unwrap();
        assert_eq!(g2.local_simplex_dimension(0), 1);
        let g1 = PartitionGraph::build(1).unwrap();
        assert_eq!(g1.local_simplex_dimension(0), 0);
        let g4 = PartitionGraph::build(4).unwrap();
        // triangle (3,1)-(2,2)-(2,1,1)
        assert_eq!(g4.local_simplex_dimensions(), vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn lookups() {
        let g = PartitionGraph::build(5).unwrap();
        assert!(g.require_id(&p(&[3, 2])).is_ok());
        assert!(matches!(
            g.require_id(&p(&[3, 3])),
            Err(Error::NotAVertex { .. })
        ));
        assert!(g.check_vertex(99).is_err());
    }
}
