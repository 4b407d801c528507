//! Canonical reference sets of `G_n` (main chain, self-conjugate axis, spine,
//! boundary framework) and user-supplied vertex subsets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PartitionGraph, VertexId};
use crate::partitions::Partition;

/// Which reference set a [`ReferenceSet`] represents.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RefSetName {
    Chain,
    Axis,
    Spine,
    Framework,
    Custom(String),
}

impl fmt::Display for RefSetName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefSetName::Chain => f.write_str("chain"),
            RefSetName::Axis => f.write_str("axis"),
            RefSetName::Spine => f.write_str("spine"),
            RefSetName::Framework => f.write_str("framework"),
            RefSetName::Custom(label) => write!(f, "custom:{label}"),
        }
    }
}

impl FromStr for RefSetName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chain" | "M" => Ok(RefSetName::Chain),
            "axis" | "Ax" => Ok(RefSetName::Axis),
            "spine" | "Sp" => Ok(RefSetName::Spine),
            "framework" | "Fr" => Ok(RefSetName::Framework),
            other => match other.strip_prefix("custom:") {
                Some(label) => Ok(RefSetName::Custom(label.to_string())),
                None => Err(Error::UnknownReferenceSet(other.to_string())),
            },
        }
    }
}

/// A named, nonempty subset of `V(G_n)`; members kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReferenceSet {
    name: RefSetName,
    members: Vec<VertexId>,
}

/// Anything that can answer vertex membership.
pub trait VertexSet {
    fn contains_vertex(&self, v: VertexId) -> bool;
}

impl VertexSet for ReferenceSet {
    fn contains_vertex(&self, v: VertexId) -> bool {
        self.contains(v)
    }
}

impl VertexSet for BTreeSet<VertexId> {
    fn contains_vertex(&self, v: VertexId) -> bool {
        self.contains(&v)
    }
}

impl VertexSet for [bool] {
    fn contains_vertex(&self, v: VertexId) -> bool {
        self.get(v).copied().unwrap_or(false)
    }
}

impl VertexSet for Vec<bool> {
    fn contains_vertex(&self, v: VertexId) -> bool {
        self.as_slice().contains_vertex(v)
    }
}

impl ReferenceSet {
    /// Builds a set from vertex ids, rejecting empty or out-of-range input.
    pub fn new(
        g: &PartitionGraph,
        name: RefSetName,
        members: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        let members: BTreeSet<VertexId> = members.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptyReferenceSet);
        }
        if let Some(&bad) = members.iter().find(|&&v| v >= g.vertex_count()) {
            return Err(Error::VertexOutOfRange(bad));
        }
        Ok(ReferenceSet {
            name,
            members: members.into_iter().collect(),
        })
    }

    /// A custom set given by explicit partitions of `n`.
    pub fn custom(g: &PartitionGraph, label: &str, partitions: &[Partition]) -> Result<Self> {
        let ids = partitions
            .iter()
            .map(|p| g.require_id(p))
            .collect::<Result<Vec<_>>>()?;
        Self::new(g, RefSetName::Custom(label.to_string()), ids)
    }

    pub fn name(&self) -> &RefSetName {
        &self.name
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &ReferenceSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    pub fn to_file(&self, g: &PartitionGraph) -> RefSetFile {
        RefSetFile {
            name: self.name.to_string(),
            members: self.members.iter().map(|&v| g.vertex(v).clone()).collect(),
        }
    }
}

/// JSON form: `{"name": "...", "members": [[4,3,1], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefSetFile {
    pub name: String,
    pub members: Vec<Partition>,
}

impl RefSetFile {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::RefSetFile(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("reference set serializes")
    }

    /// Resolves the file against `g`. Canonical names are kept; anything
    /// else becomes a custom label.
    pub fn resolve(&self, g: &PartitionGraph) -> Result<ReferenceSet> {
        let ids = self
            .members
            .iter()
            .map(|p| g.require_id(p))
            .collect::<Result<Vec<_>>>()?;
        let name = self
            .name
            .parse::<RefSetName>()
            .unwrap_or_else(|_| RefSetName::Custom(self.name.clone()));
        ReferenceSet::new(g, name, ids)
    }
}

/// Hooks `(n-k, 1^k)` for `0 ≤ k < n`.
pub fn main_chain(g: &PartitionGraph) -> ReferenceSet {
    let n = g.n();
    let ids = (0..n).map(|k| g.id_of(&Partition::hook(n, k)).expect("hooks are vertices"));
    ReferenceSet::new(g, RefSetName::Chain, ids).expect("main chain is nonempty")
}

/// Self-conjugate partitions of `n`. Empty only for `n = 2`, which is
/// reported as an error.
pub fn axis(g: &PartitionGraph) -> Result<ReferenceSet> {
    let ids = (0..g.vertex_count()).filter(|&v| g.vertex(v).is_self_conjugate());
    ReferenceSet::new(g, RefSetName::Axis, ids).map_err(|_| Error::NoSelfConjugate { n: g.n() })
}

/// Two-part partitions `(n-k, k)`, `1 ≤ k ≤ n/2`.
pub fn left_edge(n: u32) -> Vec<Partition> {
    (1..=n / 2)
        .map(|k| Partition::from_unsorted(vec![n - k, k]))
        .collect()
}

/// Hooks together with the left edge and its conjugate.
pub fn framework(g: &PartitionGraph) -> ReferenceSet {
    let left = left_edge(g.n());
    let extra = left
        .iter()
        .flat_map(|p| [p.clone(), p.conjugate()])
        .map(|p| g.id_of(&p).expect("edge partitions are vertices"));
    let ids = main_chain(g).members.clone().into_iter().chain(extra);
    ReferenceSet::new(g, RefSetName::Framework, ids).expect("framework is nonempty")
}

/// The axis plus lex-minimal shortest paths joining consecutive
/// self-conjugate partitions, listed greatest first.
pub fn spine(g: &PartitionGraph) -> Result<ReferenceSet> {
    Ok(spine_with_paths(g)?.0)
}

/// The spine together with the connecting paths it was built from.
pub fn spine_with_paths(g: &PartitionGraph) -> Result<(ReferenceSet, Vec<Vec<VertexId>>)> {
    let ax = axis(g)?;
    let mut sigmas: Vec<VertexId> = ax.members.clone();
    sigmas.sort_by(|&a, &b| g.vertex(b).cmp(g.vertex(a)));
    let paths: Vec<Vec<VertexId>> = sigmas
        .windows(2)
        .map(|w| lex_min_shortest_path(g, w[0], w[1]).expect("G_n is connected"))
        .collect();
    let ids = ax
        .members
        .iter()
        .copied()
        .chain(paths.iter().flatten().copied());
    let set = ReferenceSet::new(g, RefSetName::Spine, ids)?;
    Ok((set, paths))
}

/// Shortest `a → b` path whose vertex sequence is smallest under the
/// partition order, found by greedy descent over BFS layers from `b`.
pub fn lex_min_shortest_path(
    g: &PartitionGraph,
    a: VertexId,
    b: VertexId,
) -> Result<Vec<VertexId>> {
    g.check_vertex(a)?;
    g.check_vertex(b)?;
    let dist = g.bfs_from(b);
    let mut current = a;
    let mut path = vec![a];
    let mut remaining = dist[a].ok_or(Error::VertexOutOfRange(a))?;
    while remaining > 0 {
        current = g
            .neighbors(current)
            .iter()
            .copied()
            .filter(|&w| dist[w] == Some(remaining - 1))
            .min_by(|&x, &y| g.vertex(x).cmp(g.vertex(y)))
            .expect("a BFS layer always has a predecessor");
        path.push(current);
        remaining -= 1;
    }
    Ok(path)
}

/// The four canonical sets of one graph.
#[derive(Debug, Clone)]
pub struct CanonicalSets {
    pub chain: ReferenceSet,
    pub axis: ReferenceSet,
    pub spine: ReferenceSet,
    pub framework: ReferenceSet,
}

impl CanonicalSets {
    /// Fails for `n = 2`, where the axis is empty.
    pub fn build(g: &PartitionGraph) -> Result<Self> {
        Ok(CanonicalSets {
            chain: main_chain(g),
            axis: axis(g)?,
            spine: spine(g)?,
            framework: framework(g),
        })
    }

    /// In signature order (M, Ax, Sp, Fr).
    pub fn as_array(&self) -> [&ReferenceSet; 4] {
        [&self.chain, &self.axis, &self.spine, &self.framework]
    }

    pub fn get(&self, name: &RefSetName) -> Option<&ReferenceSet> {
        match name {
            RefSetName::Chain => Some(&self.chain),
            RefSetName::Axis => Some(&self.axis),
            RefSetName::Spine => Some(&self.spine),
            RefSetName::Framework => Some(&self.framework),
            RefSetName::Custom(_) => None,
        }
    }
}
