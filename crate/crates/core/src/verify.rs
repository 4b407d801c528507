//! Executable checks of the structural facts about `G_n`: connectivity,
//! the edge trichotomy, corridor existence, monotonicity of geodesics,
//! the directional-equivalence theorem, height orientation and controlled
//! access to neighbourhoods.

use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::atlas::GraphAnalysis;
use crate::corridors::{
    all_shortest_paths_to_set, canonical_corridor, corridor_to_neighborhood, is_monotone_inward,
};
use crate::error::{Error, Result};
use crate::fields::{
    compare_fields, difference_is_constant, height_orientation_audit, DistanceField, Equivalence,
};
use crate::graph::PartitionGraph;
use crate::refsets::{RefSetName, ReferenceSet};

/// Largest `n` for which geodesics are enumerated exhaustively.
pub const EXHAUSTIVE_PATH_MAX_N: u32 = 8;
/// Size at which random reference-set pairs are drawn.
pub const EQUIVALENCE_N: u32 = 8;
pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyLevel {
    Quick,
    Full,
}

impl VerifyLevel {
    pub fn default_range(&self) -> RangeInclusive<u32> {
        match self {
            VerifyLevel::Quick => 1..=8,
            VerifyLevel::Full => 1..=12,
        }
    }

    pub fn sampled_pairs(&self) -> usize {
        match self {
            VerifyLevel::Quick => 200,
            VerifyLevel::Full => 1000,
        }
    }
}

impl FromStr for VerifyLevel {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "quick" => Ok(VerifyLevel::Quick),
            "full" => Ok(VerifyLevel::Full),
            other => Err(format!("unknown verification level {other:?}")),
        }
    }
}

impl fmt::Display for VerifyLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            VerifyLevel::Quick => "quick",
            VerifyLevel::Full => "full",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyResult {
    pub property: &'static str,
    pub passed: bool,
    /// Number of individual assertions evaluated.
    pub checks: u64,
    /// First counterexample, if any.
    pub failure: Option<String>,
}

impl fmt::Display for PropertyResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {} ({} checks)", self.property, self.checks)?;
        if let Some(why) = &self.failure {
            write!(f, ": {why}")?;
        }
        Ok(())
    }
}

#[derive(Default)]
struct Tracker {
    checks: u64,
    failure: Option<String>,
}

impl Tracker {
    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(describe());
        }
    }

    fn finish(self, property: &'static str) -> PropertyResult {
        PropertyResult {
            property,
            passed: self.failure.is_none(),
            checks: self.checks,
            failure: self.failure,
        }
    }
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub range: RangeInclusive<u32>,
    pub level: VerifyLevel,
    pub seed: u64,
}

impl VerifyConfig {
    pub fn new(level: VerifyLevel) -> Self {
        VerifyConfig {
            range: level.default_range(),
            level,
            seed: DEFAULT_SEED,
        }
    }
}

/// Outcome of [`run_all`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub results: Vec<PropertyResult>,
    /// Values of `n` left out of the reference-set checks, with the reason.
    pub skipped: Vec<(u32, String)>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

/// Runs every property over the configured range. Graph-level properties
/// cover every `n`; checks that need the canonical sets skip `n = 2`.
pub fn run_all(config: &VerifyConfig) -> Result<VerifyReport> {
    let graphs = config
        .range
        .clone()
        .map(PartitionGraph::build)
        .collect::<Result<Vec<_>>>()?;
    let mut analyses = Vec::new();
    let mut skipped = Vec::new();
    for g in &graphs {
        match GraphAnalysis::from_graph(g.clone()) {
            Ok(a) => analyses.push(a),
            Err(e @ Error::NoSelfConjugate { .. }) => skipped.push((g.n(), e.to_string())),
            Err(e) => return Err(e),
        }
    }
    let eq_n = if config.range.contains(&EQUIVALENCE_N) {
        EQUIVALENCE_N
    } else {
        *config.range.end()
    };
    let results = vec![
        connectivity(&graphs),
        trichotomy(&analyses),
        corridor_existence(&analyses),
        geodesics_are_monotone(&analyses),
        equivalence_theorem(
            &PartitionGraph::build(eq_n)?,
            config.level.sampled_pairs(),
            config.seed,
        ),
        height_orientation(&graphs),
        controlled_access(&analyses),
        conjugation_symmetry(&graphs),
        reference_set_structure(&analyses),
    ];
    Ok(VerifyReport { results, skipped })
}

pub fn connectivity(graphs: &[PartitionGraph]) -> PropertyResult {
    let mut t = Tracker::default();
    for g in graphs {
        t.check(g.is_connected(), || format!("G_{} is disconnected", g.n()));
    }
    t.finish("connectivity")
}

/// `|d_S(u) - d_S(v)| ≤ 1` on every edge, for every canonical set.
pub fn trichotomy(analyses: &[GraphAnalysis]) -> PropertyResult {
    let mut t = Tracker::default();
    for a in analyses {
        for f in a.fields.as_array() {
            for &(u, v) in a.graph.edges() {
                let gap = f.dist(u).abs_diff(f.dist(v));
                t.check(gap <= 1, || {
                    format!(
                        "n={} {}: edge {u}-{v} jumps {gap} shells",
                        a.n(),
                        f.refset().name()
                    )
                });
            }
        }
    }
    t.finish("edge trichotomy")
}

/// Canonical corridors exist from every vertex, have length `d_S`, end in
/// `S` and cross one shell per step.
pub fn corridor_existence(analyses: &[GraphAnalysis]) -> PropertyResult {
    let mut t = Tracker::default();
    for a in analyses {
        for f in a.fields.as_array() {
            for v in 0..a.graph.vertex_count() {
                let c = canonical_corridor(&a.graph, f, v).expect("valid start");
                let ok = c.steps() == f.dist(v) as usize
                    && f.refset().contains(c.terminal())
                    && is_monotone_inward(&a.graph, f, c.vertices());
                t.check(ok, || {
                    format!(
                        "n={} {}: corridor from {}",
                        a.n(),
                        f.refset().name(),
                        a.graph.vertex(v)
                    )
                });
            }
        }
    }
    t.finish("corridor existence")
}

/// Every path of length `d_S(v)` from `v` into `S` is monotone inward.
///
/// Paths are found by brute force over all walks of that length using
/// adjacency and set membership only, then compared with the layered
/// enumeration in `corridors`.
pub fn geodesics_are_monotone(analyses: &[GraphAnalysis]) -> PropertyResult {
    let mut t = Tracker::default();
    for a in analyses.iter().filter(|a| a.n() <= EXHAUSTIVE_PATH_MAX_N) {
        for f in a.fields.as_array() {
            for v in 0..a.graph.vertex_count() {
                let mut brute = Vec::new();
                walks_into_set(
                    &a.graph,
                    f.refset(),
                    &mut vec![v],
                    f.dist(v) as usize,
                    &mut brute,
                );
                t.check(!brute.is_empty(), || {
                    format!("n={}: no geodesic from {}", a.n(), a.graph.vertex(v))
                });
                for p in &brute {
                    t.check(is_monotone_inward(&a.graph, f, p), || {
                        format!(
                            "n={} {}: geodesic {p:?} not monotone",
                            a.n(),
                            f.refset().name()
                        )
                    });
                }
                let mut layered = all_shortest_paths_to_set(&a.graph, f, v).expect("small graph");
                layered.sort();
                brute.sort();
                t.check(layered == brute, || {
                    format!(
                        "n={} {}: layered enumeration from {} disagrees",
                        a.n(),
                        f.refset().name(),
                        a.graph.vertex(v)
                    )
                });
            }
        }
    }
    t.finish("geodesics monotone")
}

fn walks_into_set(
    g: &PartitionGraph,
    s: &ReferenceSet,
    walk: &mut Vec<usize>,
    steps_left: usize,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *walk.last().unwrap();
    if steps_left == 0 {
        if s.contains(last) {
            out.push(walk.clone());
        }
        return;
    }
    for &w in g.neighbors(last) {
        walk.push(w);
        walks_into_set(g, s, walk, steps_left - 1, out);
        walk.pop();
    }
}

/// Draws a nonempty subset of vertex ids, size uniform in `1..=count`.
pub fn random_subset(rng: &mut impl Rng, count: usize) -> Vec<usize> {
    let size = rng.gen_range(1..=count);
    let mut ids = sample(rng, count, size).into_vec();
    ids.sort_unstable();
    ids
}

/// Equivalence of directional fields holds exactly when `d_S - d_T` is
/// constant, and distinct sets always yield a witness edge. Every tenth
/// sample compares a set with itself so both directions are exercised.
pub fn equivalence_theorem(g: &PartitionGraph, pairs: usize, seed: u64) -> PropertyResult {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut t = Tracker::default();
    for i in 0..pairs {
        let s_ids = random_subset(&mut rng, g.vertex_count());
        let t_ids = if i % 10 == 9 {
            s_ids.clone()
        } else {
            random_subset(&mut rng, g.vertex_count())
        };
        let s = ReferenceSet::new(g, RefSetName::Custom("S".into()), s_ids).unwrap();
        let tt = ReferenceSet::new(g, RefSetName::Custom("T".into()), t_ids).unwrap();
        let (fs, ft) = (
            DistanceField::new(g, &s).unwrap(),
            DistanceField::new(g, &tt).unwrap(),
        );
        let equivalent = compare_fields(g, &fs, &ft) == Equivalence::Equivalent;
        t.check(equivalent == difference_is_constant(&fs, &ft), || {
            format!("pair {i}: equivalence {equivalent} disagrees with constant difference")
        });
        let distinct = s.members() != tt.members();
        t.check(equivalent != distinct, || {
            format!("pair {i}: distinct={distinct} but equivalent={equivalent}")
        });
    }
    t.finish("directional equivalence")
}

pub fn height_orientation(graphs: &[PartitionGraph]) -> PropertyResult {
    let mut t = Tracker::default();
    for g in graphs {
        let audit = height_orientation_audit(g);
        t.check(audit.all_edges_strict, || {
            format!("n={}: an edge keeps its height", g.n())
        });
        t.check(audit.acyclic, || {
            format!("n={}: height orientation has a cycle", g.n())
        });
    }
    t.finish("height orientation")
}

/// Truncated corridors reach `N_S(≤ r)` in exactly `max(d_S - r, 0)` steps.
pub fn controlled_access(analyses: &[GraphAnalysis]) -> PropertyResult {
    let mut t = Tracker::default();
    for a in analyses {
        for f in a.fields.as_array() {
            for v in 0..a.graph.vertex_count() {
                for r in 0..=f.max_radius() {
                    let c = corridor_to_neighborhood(&a.graph, f, v, r).expect("valid start");
                    let expected = f.dist(v).saturating_sub(r) as usize;
                    let ok = c.steps() == expected && f.dist(c.terminal()) == f.dist(v).min(r);
                    t.check(ok, || {
                        format!(
                            "n={} {} r={r}: from {} took {} steps",
                            a.n(),
                            f.refset().name(),
                            a.graph.vertex(v),
                            c.steps()
                        )
                    });
                }
            }
        }
    }
    t.finish("controlled access")
}

/// Conjugation maps edges to edges.
pub fn conjugation_symmetry(graphs: &[PartitionGraph]) -> PropertyResult {
    let mut t = Tracker::default();
    for g in graphs {
        let conj: Vec<usize> = g
            .vertices()
            .iter()
            .map(|p| g.id_of(&p.conjugate()).unwrap())
            .collect();
        for &(u, v) in g.edges() {
            t.check(g.is_edge(conj[u], conj[v]), || {
                format!("n={}: conjugate of {u}-{v} is not an edge", g.n())
            });
        }
    }
    t.finish("conjugation automorphism")
}

/// Axis within spine, chain within framework, framework closed under
/// conjugation, chain of size `n`.
pub fn reference_set_structure(analyses: &[GraphAnalysis]) -> PropertyResult {
    let mut t = Tracker::default();
    for a in analyses {
        let (g, s) = (&a.graph, &a.sets);
        t.check(s.axis.is_subset_of(&s.spine), || {
            format!("n={}: axis not in spine", a.n())
        });
        t.check(s.chain.is_subset_of(&s.framework), || {
            format!("n={}: chain not in framework", a.n())
        });
        t.check(s.chain.len() == a.n() as usize, || {
            format!("n={}: chain has {} members", a.n(), s.chain.len())
        });
        let closed = s.framework.members().iter().all(|&v| {
            s.framework
                .contains(g.id_of(&g.vertex(v).conjugate()).unwrap())
        });
        t.check(closed, || {
            format!("n={}: framework not conjugation-closed", a.n())
        });
    }
    t.finish("reference set structure")
}
