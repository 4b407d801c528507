//! Byte-stable text exports of graphs and per-vertex fields.

use std::fmt::Write as _;

use serde::Serialize;

use crate::atlas::GraphAnalysis;
use crate::graph::{PartitionGraph, VertexId};
use crate::partitions::Partition;

/// Undirected DOT graph; vertices are quoted partition labels.
pub fn to_dot(g: &PartitionGraph) -> String {
    let mut out = format!("graph G{} {{\n", g.n());
    for p in g.vertices() {
        let _ = writeln!(out, "  \"{p}\";");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  \"{}\" -- \"{}\";", g.vertex(u), g.vertex(v));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphJson<'a> {
    n: u32,
    vertices: &'a [Partition],
    edges: &'a [(VertexId, VertexId)],
}

/// `{"n": .., "vertices": [[parts], ..], "edges": [[u, v], ..]}`.
pub fn to_json(g: &PartitionGraph) -> String {
    serde_json::to_string(&GraphJson {
        n: g.n(),
        vertices: g.vertices(),
        edges: g.edges(),
    })
    .expect("graph serializes")
}

pub const FIELD_CSV_HEADER: &str =
    "partition,d_M,d_Ax,d_Sp,d_Fr,degree,local_simplex_dim,height,support";

/// One row per vertex in canonical order. Partitions are quoted since
/// their text form contains commas.
pub fn field_csv(a: &GraphAnalysis) -> String {
    let g = &a.graph;
    let mut out = String::from(FIELD_CSV_HEADER);
    out.push('\n');
    for v in 0..g.vertex_count() {
        let p = g.vertex(v);
        let [m, ax, sp, fr] = a.fields.as_array().map(|f| f.dist(v));
        let _ = writeln!(
            out,
            "\"{p}\",{m},{ax},{sp},{fr},{},{},{},{}",
            g.degree(v),
            a.simplex_dims[v],
            p.height(),
            p.support()
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_n2() {
        let g = PartitionGraph::build(2).unwrap();
        assert_eq!(
            to_dot(&g),
            "graph G2 {\n  \"[2]\";\n  \"[1,1]\";\n  \"[2]\" -- \"[1,1]\";\n}\n"
        );
    }

    #[test]
    fn json_n3() {
        let g = PartitionGraph::build(3).unwrap();
        assert_eq!(
            to_json(&g),
            r#"{"n":3,"vertices":[[3],[2,1],[1,1,1]],"edges":[[0,1],[1,2]]}"#
        );
    }

    #[test]
    fn field_csv_n4() {
        let a = GraphAnalysis::build(4).unwrap();
        let csv = field_csv(&a);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[0], FIELD_CSV_HEADER);
        // (2,2): off the chain, on the axis/spine/framework
        assert_eq!(lines[3], "\"[2,2]\",1,0,0,0,2,2,6,2");
    }
}
