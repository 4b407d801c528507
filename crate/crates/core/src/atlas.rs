//! Aggregate directional statistics over a range of `n`: edgewise shares,
//! combined signatures, local-invariant drift and corridor access, plus
//! annotation data for drawing shell pictures.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::corridors::{
    canonical_corridor, corridor_profile, CorridorExport, CorridorProfile, CorridorType, Target,
    TargetZones,
};
use crate::error::Result;
use crate::fields::{
    classify_edges, CanonicalFields, Direction, DistanceField, EdgeSignature, EdgeTally,
};
use crate::graph::{PartitionGraph, VertexId};
use crate::partitions::Partition;
use crate::refsets::{CanonicalSets, RefSetName, ReferenceSet};
use crate::stats::{Mean, Median, Share};

/// Everything computed once per `n`.
#[derive(Debug, Clone)]
pub struct GraphAnalysis {
    pub graph: PartitionGraph,
    pub sets: CanonicalSets,
    pub fields: CanonicalFields,
    pub simplex_dims: Vec<usize>,
}

impl GraphAnalysis {
    pub fn build(n: u32) -> Result<Self> {
        Self::from_graph(PartitionGraph::build(n)?)
    }

    pub fn from_graph(graph: PartitionGraph) -> Result<Self> {
        let sets = CanonicalSets::build(&graph)?;
        let fields = CanonicalFields::build(&graph, &sets);
        let simplex_dims = graph.local_simplex_dimensions();
        Ok(GraphAnalysis {
            graph,
            sets,
            fields,
            simplex_dims,
        })
    }

    pub fn n(&self) -> u32 {
        self.graph.n()
    }

    pub fn zones(&self) -> TargetZones {
        TargetZones::build(&self.graph, &self.sets, &self.simplex_dims)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table1Row {
    pub n: u32,
    pub reference_set: String,
    pub tally: EdgeTally,
    pub level_share: Share,
    pub transverse_share: Share,
    pub max_shell_radius: u32,
}

/// Level/transverse split of unoriented edges and the largest shell radius.
pub fn table1_rows(a: &GraphAnalysis) -> Vec<Table1Row> {
    a.fields
        .as_array()
        .into_iter()
        .map(|f| table1_row(&a.graph, f))
        .collect()
}

pub fn table1_row(g: &PartitionGraph, f: &DistanceField) -> Table1Row {
    let tally = classify_edges(g, f);
    Table1Row {
        n: g.n(),
        reference_set: f.refset().name().to_string(),
        tally,
        level_share: Share::new(tally.level, tally.total),
        transverse_share: Share::new(tally.transverse, tally.total),
        max_shell_radius: f.max_radius(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table2Row {
    pub n: u32,
    /// Distinct signatures with each edge oriented from lower to higher height.
    pub distinct_signatures: usize,
    /// Distinct signatures when both orientations of every edge are counted.
    pub distinct_signatures_both_orientations: usize,
    pub mixed_share: Share,
    pub coherent_share: Share,
}

pub fn table2_row(a: &GraphAnalysis) -> Table2Row {
    let g = &a.graph;
    let signature = |u, v| EdgeSignature(a.fields.as_array().map(|f| f.sigma_unchecked(u, v)));
    let mut height_oriented = BTreeSet::new();
    let mut both = BTreeSet::new();
    let mut mixed = 0;
    for &(u, v) in g.edges() {
        let (lo, hi) = if g.vertex(u).height() < g.vertex(v).height() {
            (u, v)
        } else {
            (v, u)
        };
        let sig = signature(lo, hi);
        height_oriented.insert(sig);
        both.insert(sig);
        both.insert(-sig);
        if sig.is_mixed() {
            mixed += 1;
        }
    }
    let total = g.edge_count() as u64;
    Table2Row {
        n: g.n(),
        distinct_signatures: height_oriented.len(),
        distinct_signatures_both_orientations: both.len(),
        mixed_share: Share::new(mixed, total),
        coherent_share: Share::new(total - mixed, total),
    }
}

/// A directional class of oriented edges for the drift table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DriftClass {
    pub family: CorridorType,
    pub direction: Direction,
}

impl DriftClass {
    /// Row order: inward classes for axial/spinal/framework, then level ones.
    pub const TABLE_ORDER: [DriftClass; 6] = [
        DriftClass {
            family: CorridorType::Axial,
            direction: Direction::Inward,
        },
        DriftClass {
            family: CorridorType::Spinal,
            direction: Direction::Inward,
        },
        DriftClass {
            family: CorridorType::Framework,
            direction: Direction::Inward,
        },
        DriftClass {
            family: CorridorType::Axial,
            direction: Direction::Level,
        },
        DriftClass {
            family: CorridorType::Spinal,
            direction: Direction::Level,
        },
        DriftClass {
            family: CorridorType::Framework,
            direction: Direction::Level,
        },
    ];

    pub fn label(&self) -> String {
        format!("{} {}", self.family, self.direction)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table3Row {
    pub class: String,
    pub edges: u64,
    pub mean_delta_degree: Mean,
    pub median_delta_degree: Median,
    pub share_delta_degree_positive: Share,
    pub mean_delta_simplex_dim: Mean,
    pub share_delta_simplex_dim_positive: Share,
    pub mean_delta_height: Mean,
}

/// Drift of degree, local simplex dimension and height along oriented edges
/// `tail → head` (Δx = x(head) − x(tail)), pooled over all analyses.
pub fn table3_rows(analyses: &[GraphAnalysis]) -> Vec<Table3Row> {
    DriftClass::TABLE_ORDER
        .iter()
        .map(|class| {
            let (mut ddeg, mut ddim, mut dh) = (Vec::new(), Vec::new(), Vec::new());
            for a in analyses {
                let g = &a.graph;
                let f = class.family.field(&a.fields);
                for (u, v) in g.oriented_edges() {
                    if Direction::from_sigma(f.sigma_unchecked(u, v)) != class.direction {
                        continue;
                    }
                    ddeg.push(g.degree(v) as i64 - g.degree(u) as i64);
                    ddim.push(a.simplex_dims[v] as i64 - a.simplex_dims[u] as i64);
                    dh.push(g.vertex(v).height() as i64 - g.vertex(u).height() as i64);
                }
            }
            let count = ddeg.len() as u64;
            let positive =
                |xs: &[i64]| Share::new(xs.iter().filter(|&&x| x > 0).count() as u64, count);
            Table3Row {
                class: class.label(),
                edges: count,
                mean_delta_degree: Mean::of(&ddeg).expect("class is nonempty"),
                median_delta_degree: Median::of(&ddeg).expect("class is nonempty"),
                share_delta_degree_positive: positive(&ddeg),
                mean_delta_simplex_dim: Mean::of(&ddim).expect("class is nonempty"),
                share_delta_simplex_dim_positive: positive(&ddim),
                mean_delta_height: Mean::of(&dh).expect("class is nonempty"),
            }
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Table4Row {
    pub n: u32,
    #[serde(flatten)]
    pub profile: CorridorProfile,
}

impl Table4Row {
    pub fn median(&self, target: Target) -> Option<Median> {
        self.profile.stats(target).and_then(|s| s.median_hit)
    }

    pub fn success(&self, target: Target) -> Share {
        self.profile
            .stats(target)
            .expect("all targets profiled")
            .success
    }
}

pub fn table4_rows(a: &GraphAnalysis) -> Vec<Table4Row> {
    let zones = a.zones();
    CorridorType::ALL
        .iter()
        .map(|&t| Table4Row {
            n: a.n(),
            profile: corridor_profile(&a.graph, &a.fields, t, &zones, &Target::ALL),
        })
        .collect()
}

/// All four tables for one range of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasReport {
    pub n_values: Vec<u32>,
    pub table1: Vec<Table1Row>,
    pub table2: Vec<Table2Row>,
    pub table3: Vec<Table3Row>,
    pub table4: Vec<Table4Row>,
}

impl AtlasReport {
    pub fn build(n_values: &[u32]) -> Result<Self> {
        let analyses = n_values
            .iter()
            .map(|&n| GraphAnalysis::build(n))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_analyses(&analyses))
    }

    pub fn from_analyses(analyses: &[GraphAnalysis]) -> Self {
        AtlasReport {
            n_values: analyses.iter().map(GraphAnalysis::n).collect(),
            table1: analyses.iter().flat_map(table1_rows).collect(),
            table2: analyses.iter().map(table2_row).collect(),
            table3: table3_rows(analyses),
            table4: analyses.iter().flat_map(table4_rows).collect(),
        }
    }

    pub fn table1_row(&self, n: u32, set: &RefSetName) -> Option<&Table1Row> {
        let name = set.to_string();
        self.table1
            .iter()
            .find(|r| r.n == n && r.reference_set == name)
    }

    pub fn table2_row(&self, n: u32) -> Option<&Table2Row> {
        self.table2.iter().find(|r| r.n == n)
    }

    pub fn table3_row(&self, class: DriftClass) -> Option<&Table3Row> {
        let label = class.label();
        self.table3.iter().find(|r| r.class == label)
    }

    pub fn table4_row(&self, n: u32, t: CorridorType) -> Option<&Table4Row> {
        self.table4
            .iter()
            .find(|r| r.n == n && r.profile.corridor_type == t)
    }

    /// `(file stem, CSV text)` for each table.
    pub fn to_csv(&self) -> Vec<(&'static str, String)> {
        vec![
            ("table1", csv(&self.table1_cells(true))),
            ("table2", csv(&self.table2_cells(true))),
            ("table3", csv(&self.table3_cells(true))),
            ("table4", csv(&self.table4_cells(true))),
        ]
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned plain-text tables.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let sections = [
            (
                "Table 1: edgewise directional statistics",
                self.table1_cells(false),
            ),
            (
                "Table 2: combined directional signatures",
                self.table2_cells(false),
            ),
            (
                "Table 3: drift of local invariants along directional classes (pooled)",
                self.table3_cells(false),
            ),
            (
                "Table 4: corridor access statistics",
                self.table4_cells(false),
            ),
        ];
        for (i, (title, cells)) in sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            out.push_str(title);
            out.push('\n');
            out.push_str(&aligned(cells));
        }
        out
    }

    fn table1_cells(&self, raw: bool) -> Vec<Vec<String>> {
        let mut header = vec![
            "n",
            "reference_set",
            "level_share",
            "transverse_share",
            "max_shell_radius",
        ];
        if raw {
            header.extend(["level_edges", "transverse_edges", "total_edges"]);
        }
        let mut rows = vec![header.into_iter().map(String::from).collect::<Vec<_>>()];
        for r in &self.table1 {
            let mut row = vec![
                r.n.to_string(),
                r.reference_set.clone(),
                pct(&r.level_share, raw),
                pct(&r.transverse_share, raw),
                r.max_shell_radius.to_string(),
            ];
            if raw {
                row.extend(
                    [r.tally.level, r.tally.transverse, r.tally.total].map(|x| x.to_string()),
                );
            }
            rows.push(row);
        }
        rows
    }

    fn table2_cells(&self, raw: bool) -> Vec<Vec<String>> {
        let mut header = vec!["n", "distinct_signatures", "mixed_share", "coherent_share"];
        if raw {
            header.extend([
                "distinct_signatures_both_orientations",
                "mixed_edges",
                "total_edges",
            ]);
        }
        let mut rows = vec![header.into_iter().map(String::from).collect::<Vec<_>>()];
        for r in &self.table2 {
            let mut row = vec![
                r.n.to_string(),
                r.distinct_signatures.to_string(),
                pct(&r.mixed_share, raw),
                pct(&r.coherent_share, raw),
            ];
            if raw {
                row.extend([
                    r.distinct_signatures_both_orientations.to_string(),
                    r.mixed_share.numerator.to_string(),
                    r.mixed_share.denominator.to_string(),
                ]);
            }
            rows.push(row);
        }
        rows
    }

    fn table3_cells(&self, raw: bool) -> Vec<Vec<String>> {
        let mut header = vec![
            "class",
            "mean_delta_deg",
            "median_delta_deg",
            "share_delta_deg_pos",
            "mean_delta_dim_loc",
            "share_delta_dim_loc_pos",
            "mean_delta_h",
        ];
        if raw {
            header.push("edges");
        }
        let mut rows = vec![header.into_iter().map(String::from).collect::<Vec<_>>()];
        for r in &self.table3 {
            let mut row = vec![
                r.class.clone(),
                r.mean_delta_degree.to_string(),
                r.median_delta_degree.to_string(),
                pct(&r.share_delta_degree_positive, raw),
                r.mean_delta_simplex_dim.to_string(),
                pct(&r.share_delta_simplex_dim_positive, raw),
                r.mean_delta_height.to_string(),
            ];
            if raw {
                row.push(r.edges.to_string());
            }
            rows.push(row);
        }
        rows
    }

    fn table4_cells(&self, raw: bool) -> Vec<Vec<String>> {
        let header = [
            "n",
            "corridor_type",
            "to_axis",
            "to_spine",
            "to_top_degree",
            "success_top_degree",
            "to_top_simplex",
            "success_top_simplex",
        ];
        let mut rows = vec![header.into_iter().map(String::from).collect::<Vec<_>>()];
        let median = |m: Option<Median>| m.map_or_else(|| "-".to_string(), |m| m.to_string());
        for r in &self.table4 {
            rows.push(vec![
                r.n.to_string(),
                r.profile.corridor_type.to_string(),
                median(r.median(Target::Axis)),
                median(r.median(Target::Spine)),
                median(r.median(Target::TopDegree)),
                pct(&r.success(Target::TopDegree), raw),
                median(r.median(Target::TopSimplex)),
                pct(&r.success(Target::TopSimplex), raw),
            ]);
        }
        rows
    }
}

fn pct(s: &Share, raw: bool) -> String {
    if raw {
        s.percent_1dp()
    } else {
        s.to_string()
    }
}

fn csv(cells: &[Vec<String>]) -> String {
    cells.iter().map(|row| row.join(",") + "\n").collect()
}

fn aligned(cells: &[Vec<String>]) -> String {
    let cols = cells[0].len();
    let widths: Vec<usize> = (0..cols)
        .map(|c| cells.iter().map(|r| r[c].len()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for (i, row) in cells.iter().enumerate() {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:>w$}"))
            .collect();
        let _ = writeln!(out, "{}", line.join("  ").trim_end());
        if i == 0 {
            let rule: usize = widths.iter().sum::<usize>() + 2 * (cols - 1);
            let _ = writeln!(out, "{}", "-".repeat(rule));
        }
    }
    out
}

/// Per-vertex annotations for shell pictures.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureVertex {
    pub id: VertexId,
    pub partition: Partition,
    pub x: f64,
    pub y: f64,
    pub d_ax: u32,
    pub d_sp: u32,
    /// Distance to the reference set chosen for edge classes.
    pub d_ref: u32,
    pub ax_sp_discrepancy: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EdgeShellClass {
    SameShell,
    CrossShell,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FigureEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub class: EdgeShellClass,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureData {
    pub n: u32,
    pub reference_set: String,
    pub seed: u64,
    pub vertices: Vec<FigureVertex>,
    pub edges: Vec<FigureEdge>,
    pub corridors: Vec<CorridorExport>,
}

/// Options for [`figure_data`].
#[derive(Debug, Clone)]
pub struct FigureOptions {
    /// Set whose shells drive the layout and the edge classes.
    pub reference: RefSetName,
    /// Layout jitter seed.
    pub seed: u64,
    /// If given, axial, spinal and framework corridors from this vertex.
    pub corridor_start: Option<VertexId>,
}

impl Default for FigureOptions {
    fn default() -> Self {
        FigureOptions {
            reference: RefSetName::Axis,
            seed: 0,
            corridor_start: None,
        }
    }
}

/// Shell-radial layout plus annotations: vertices with `d_Ax ≠ d_Sp`,
/// same-shell versus cross-shell edges, and optional corridor overlays.
pub fn figure_data(
    a: &GraphAnalysis,
    reference: &ReferenceSet,
    options: &FigureOptions,
) -> Result<FigureData> {
    let g = &a.graph;
    let field = DistanceField::new(g, reference)?;
    let layout = shell_radial_layout(&field, options.seed);
    let vertices = (0..g.vertex_count())
        .map(|v| FigureVertex {
            id: v,
            partition: g.vertex(v).clone(),
            x: layout[v].0,
            y: layout[v].1,
            d_ax: a.fields.axis.dist(v),
            d_sp: a.fields.spine.dist(v),
            d_ref: field.dist(v),
            ax_sp_discrepancy: a.fields.axis.dist(v) != a.fields.spine.dist(v),
        })
        .collect();
    let edges = g
        .edges()
        .iter()
        .map(|&(u, v)| FigureEdge {
            u,
            v,
            class: if field.dist(u) == field.dist(v) {
                EdgeShellClass::SameShell
            } else {
                EdgeShellClass::CrossShell
            },
        })
        .collect();
    let corridors = match options.corridor_start {
        Some(start) => CorridorType::ALL
            .iter()
            .map(|t| canonical_corridor(g, t.field(&a.fields), start).map(|c| c.to_export(g)))
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    Ok(FigureData {
        n: g.n(),
        reference_set: reference.name().to_string(),
        seed: options.seed,
        vertices,
        edges,
        corridors,
    })
}

// Shell r sits on the circle of radius r; vertices spread evenly in id order,
// each ring rotated by a seeded offset. Coordinates are rounded to 1e-6.
fn shell_radial_layout(field: &DistanceField, seed: u64) -> Vec<(f64, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut coords = vec![(0.0, 0.0); field.distances().len()];
    for r in 0..=field.max_radius() {
        let shell = field.shell(r);
        let offset: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
        let radius = if r == 0 && shell.len() == 1 {
            0.0
        } else {
            r as f64 + 0.5
        };
        for (k, &v) in shell.iter().enumerate() {
            let angle = offset + std::f64::consts::TAU * k as f64 / shell.len() as f64;
            let round = |x: f64| (x * 1e6).round() / 1e6;
            coords[v] = (round(radius * angle.cos()), round(radius * angle.sin()));
        }
    }
    coords
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_edges_partition_the_edge_list() {
        let a = GraphAnalysis::build(4).unwrap();
        let fig = figure_data(&a, &a.sets.axis, &FigureOptions::default()).unwrap();
        assert_eq!(fig.edges.len(), 5);
        let cross = fig
            .edges
            .iter()
            .filter(|e| e.class == EdgeShellClass::CrossShell)
            .count();
        // only (2,1,1)-(3,1) stays inside shell 1
        assert_eq!(cross, 4);
        assert!(fig.vertices.iter().all(|v| !v.ax_sp_discrepancy));
    }

    #[test]
    fn figure_discrepancies_n10() {
        let a = GraphAnalysis::build(10).unwrap();
        let options = FigureOptions {
            corridor_start: Some(0),
            ..FigureOptions::default()
        };
        let fig = figure_data(&a, &a.sets.axis, &options).unwrap();
        assert!(fig.vertices.iter().any(|v| v.ax_sp_discrepancy));
        assert_eq!(fig.corridors.len(), 3);
        assert_eq!(fig, figure_data(&a, &a.sets.axis, &options).unwrap());
    }

    #[test]
    fn level_means_are_zero() {
        let analyses: Vec<_> = (5..=7).map(|n| GraphAnalysis::build(n).unwrap()).collect();
        for row in table3_rows(&analyses)
            .iter()
            .filter(|r| r.class.ends_with("level"))
        {
            assert!(row.mean_delta_degree.is_zero());
            assert!(row.mean_delta_simplex_dim.is_zero());
            assert!(row.mean_delta_height.is_zero());
        }
    }

    #[test]
    fn whole_set_row() {
        let g = PartitionGraph::build(6).unwrap();
        let all =
            ReferenceSet::new(&g, RefSetName::Custom("all".into()), 0..g.vertex_count()).unwrap();
        let f = DistanceField::new(&g, &all).unwrap();
        let row = table1_row(&g, &f);
        assert_eq!(
            (
                row.level_share.percent_1dp(),
                row.transverse_share.percent_1dp(),
                row.max_shell_radius
            ),
            ("100.0".to_string(), "0.0".to_string(), 0)
        );
    }

    #[test]
    fn text_render_is_aligned() {
        let report = AtlasReport::build(&[6]).unwrap();
        let text = report.to_text();
        assert!(text.starts_with("Table 1"));
        assert_eq!(report.to_csv().len(), 4);
    }
}
