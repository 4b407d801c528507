//! Brute-force oracles shared with the acceptance suite in the CLI crate.

use partgraph::{PartitionGraph, VertexId};

/// Largest clique containing `v`, by checking every subset of its neighbourhood.
pub fn subset_clique_oracle(g: &PartitionGraph, v: VertexId) -> usize {
    let nbrs = g.neighbors(v);
    let k = nbrs.len();
    let mut best = 0;
    for mask in 0u32..(1 << k) {
        let chosen: Vec<VertexId> = (0..k)
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| nbrs[i])
            .collect();
        if chosen.len() <= best {
            continue;
        }
        let clique = chosen
            .iter()
            .enumerate()
            .all(|(i, &a)| chosen[i + 1..].iter().all(|&b| g.is_edge(a, b)));
        if clique {
            best = chosen.len();
        }
    }
    best
}

/// All walks of length exactly `d(a, b)` from `a` ending at `b`.
pub fn all_shortest_paths(g: &PartitionGraph, a: VertexId, b: VertexId) -> Vec<Vec<VertexId>> {
    let d = g.bfs_from(a)[b].unwrap() as usize;
    let mut out = Vec::new();
    let mut walk = vec![a];
    fn go(
        g: &PartitionGraph,
        b: VertexId,
        left: usize,
        walk: &mut Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        let last = *walk.last().unwrap();
        if left == 0 {
            if last == b {
                out.push(walk.clone());
            }
            return;
        }
        for &w in g.neighbors(last) {
            walk.push(w);
            go(g, b, left - 1, walk, out);
            walk.pop();
        }
    }
    go(g, b, d, &mut walk, &mut out);
    out
}
