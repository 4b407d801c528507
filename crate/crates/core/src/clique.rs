//! Exact maximum clique on small induced subgraphs.
//!
//! Branch and bound over a degeneracy ordering with a greedy-colouring
//! upper bound. Candidate sets are vertex neighbourhoods of `G_n`, which
//! stay small at the sizes this crate targets.

use crate::graph::{PartitionGraph, VertexId};

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
}

/// Size of the largest clique in the subgraph induced by `candidates`.
pub(crate) fn max_clique_in(g: &PartitionGraph, candidates: &[VertexId]) -> usize {
    let k = candidates.len();
    if k == 0 {
        return 0;
    }
    let mut rows = vec![Bits::empty(k); k];
    for (a, &u) in candidates.iter().enumerate() {
        for (b, &v) in candidates.iter().enumerate().skip(a + 1) {
            if g.is_edge(u, v) {
                rows[a].set(b);
                rows[b].set(a);
            }
        }
    }
    let order = degeneracy_order(&rows, k);
    let mut best = 1;
    expand(&rows, 0, order, &mut best);
    best
}

// Vertices ordered so that high-core vertices come first.
fn degeneracy_order(rows: &[Bits], k: usize) -> Vec<usize> {
    let mut degree: Vec<usize> = (0..k)
        .map(|i| (0..k).filter(|&j| rows[i].get(j)).count())
        .collect();
    let mut removed = vec![false; k];
    let mut peeled = Vec::with_capacity(k);
    for _ in 0..k {
        let v = (0..k)
            .filter(|&i| !removed[i])
            .min_by_key(|&i| (degree[i], i))
            .unwrap();
        removed[v] = true;
        peeled.push(v);
        for j in 0..k {
            if !removed[j] && rows[v].get(j) {
                degree[j] -= 1;
            }
        }
    }
    peeled.reverse();
    peeled
}

// Greedy sequential colouring; returns vertices sorted by colour with their colour.
fn colour_sort(rows: &[Bits], candidates: &[usize]) -> Vec<(usize, usize)> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for &v in candidates {
        match classes
            .iter_mut()
            .find(|class| class.iter().all(|&w| !rows[v].get(w)))
        {
            Some(class) => class.push(v),
            None => classes.push(vec![v]),
        }
    }
    classes
        .into_iter()
        .enumerate()
        .flat_map(|(c, class)| class.into_iter().map(move |v| (v, c + 1)))
        .collect()
}

fn expand(rows: &[Bits], size: usize, candidates: Vec<usize>, best: &mut usize) {
    let mut coloured = colour_sort(rows, &candidates);
    while let Some((v, colour)) = coloured.pop() {
        if size + colour <= *best {
            return;
        }
        let next: Vec<usize> = coloured
            .iter()
            .map(|&(w, _)| w)
            .filter(|&w| rows[v].get(w))
            .collect();
        if next.is_empty() {
            *best = (*best).max(size + 1);
        } else {
            expand(rows, size + 1, next, best);
        }
    }
}
