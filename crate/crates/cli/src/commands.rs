//! One function per subcommand. Each returns named artifacts; `main` decides
//! whether they go to stdout or into the output directory.

use std::fmt::Write as _;

use partgraph::atlas::{figure_data, FigureOptions};
use partgraph::corridors::{canonical_corridor, corridor_to_neighborhood};
use partgraph::export;
use partgraph::refsets::{self, RefSetFile};
use partgraph::verify::{run_all, VerifyConfig};
use partgraph::{
    AtlasReport, DistanceField, GraphAnalysis, Partition, PartitionGraph, RefSetName, ReferenceSet,
};
use serde::Serialize;

use crate::args::{Command, Format, NRange, RunConfig};
use crate::error::{CliError, ErrorKind};

pub struct Artifact {
    pub name: String,
    pub content: String,
}

impl Artifact {
    fn new(name: impl Into<String>, content: impl Into<String>) -> Self {
        Artifact {
            name: name.into(),
            content: content.into(),
        }
    }
}

/// Artifacts to emit, plus an error to report after emitting them.
pub struct Outcome {
    pub artifacts: Vec<Artifact>,
    pub failure: Option<CliError>,
}

impl From<Vec<Artifact>> for Outcome {
    fn from(artifacts: Vec<Artifact>) -> Self {
        Outcome {
            artifacts,
            failure: None,
        }
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome, CliError> {
    match cfg.command {
        Command::Build => cmd_build(cfg).map(Into::into),
        Command::Stats => cmd_stats(cfg).map(Into::into),
        Command::Field => cmd_field(cfg).map(Into::into),
        Command::Corridor => cmd_corridor(cfg).map(Into::into),
        Command::Verify => cmd_verify(cfg),
        Command::Export => cmd_export(cfg).map(Into::into),
    }
}

fn unsupported(cmd: &str, format: Format) -> CliError {
    CliError::new(
        ErrorKind::Usage,
        format!("{cmd} does not support --format {format:?}").to_lowercase(),
    )
}

fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output serializes");
    s.push('\n');
    s
}

/// `(1^4)`, `(2,1,1)`, `(3,2^3)`: runs of three or more equal parts get an exponent.
pub fn compact(p: &Partition) -> String {
    let mut pieces = Vec::new();
    let parts = p.parts();
    let mut i = 0;
    while i < parts.len() {
        let run = parts[i..].iter().take_while(|&&x| x == parts[i]).count();
        if run >= 3 {
            pieces.push(format!("{}^{}", parts[i], run));
        } else {
            pieces.extend(std::iter::repeat_n(parts[i].to_string(), run));
        }
        i += run;
    }
    format!("({})", pieces.join(","))
}

fn csv_partition(p: &Partition) -> String {
    format!("\"{p}\"")
}

#[derive(Serialize)]
struct BuildSummary {
    n: u32,
    vertices: usize,
    edges: usize,
    connected: bool,
    min_degree: usize,
    max_degree: usize,
}

fn summarize(g: &PartitionGraph) -> BuildSummary {
    BuildSummary {
        n: g.n(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        connected: g.is_connected(),
        min_degree: g.min_degree(),
        max_degree: g.max_degree(),
    }
}

pub fn cmd_build(cfg: &RunConfig) -> Result<Vec<Artifact>, CliError> {
    let summaries = cfg
        .require_n()?
        .values()
        .into_iter()
        .map(|n| PartitionGraph::build(n).map(|g| summarize(&g)))
        .collect::<Result<Vec<_>, _>>()?;
    let content = match cfg.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = String::new();
            for b in &summaries {
                writeln!(
                    s,
                    "n={} vertices={} edges={} connected={} min_degree={} max_degree={}",
                    b.n, b.vertices, b.edges, b.connected, b.min_degree, b.max_degree
                )
                .unwrap();
            }
            return Ok(vec![Artifact::new("build.txt", s)]);
        }
        Format::Csv => {
            let mut s = String::from("n,vertices,edges,connected,min_degree,max_degree\n");
            for b in &summaries {
                writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    b.n, b.vertices, b.edges, b.connected, b.min_degree, b.max_degree
                )
                .unwrap();
            }
            return Ok(vec![Artifact::new("build.csv", s)]);
        }
        Format::Json => json(&summaries),
        f => return Err(unsupported("build", f)),
    };
    Ok(vec![Artifact::new("build.json", content)])
}

pub fn cmd_stats(cfg: &RunConfig) -> Result<Vec<Artifact>, CliError> {
    let n_values = cfg.n.clone().unwrap_or(NRange(8..=12)).values();
    let report = AtlasReport::build(&n_values)?;
    Ok(match cfg.format.unwrap_or(Format::Text) {
        Format::Text => vec![Artifact::new("atlas.txt", report.to_text())],
        Format::Csv => report
            .to_csv()
            .into_iter()
            .map(|(stem, body)| Artifact::new(format!("{stem}.csv"), body))
            .collect(),
        Format::Json => vec![Artifact::new(
            "atlas.json",
            format!("{}\n", report.to_json()),
        )],
        f => return Err(unsupported("stats", f)),
    })
}

/// Resolves `--refset` against `g`: a canonical name or `@path` to a JSON file.
pub fn resolve_refset(g: &PartitionGraph, refset_arg: &str) -> Result<ReferenceSet, CliError> {
    let refset_err = |e: partgraph::Error| match e {
        partgraph::Error::NoSelfConjugate { .. } => CliError::from(e),
        other => CliError::new(ErrorKind::UnknownRefset, other.to_string()),
    };
    if let Some(path) = refset_arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path)?;
        return RefSetFile::from_json(&text)
            .and_then(|f| f.resolve(g))
            .map_err(refset_err);
    }
    match refset_arg.parse::<RefSetName>().map_err(refset_err)? {
        RefSetName::Chain => Ok(refsets::main_chain(g)),
        RefSetName::Axis => refsets::axis(g).map_err(refset_err),
        RefSetName::Spine => refsets::spine(g).map_err(refset_err),
        RefSetName::Framework => Ok(refsets::framework(g)),
        RefSetName::Custom(label) => Err(CliError::new(
            ErrorKind::UnknownRefset,
            format!("custom reference set {label:?} needs a file: use --refset @path.json"),
        )),
    }
}

fn single_graph(cfg: &RunConfig) -> Result<PartitionGraph, CliError> {
    Ok(PartitionGraph::build(cfg.require_n()?.single()?)?)
}

pub fn cmd_field(cfg: &RunConfig) -> Result<Vec<Artifact>, CliError> {
    let format = cfg.format.unwrap_or(Format::Csv);
    let Some(refset_arg) = &cfg.refset else {
        let a = GraphAnalysis::build(cfg.require_n()?.single()?)?;
        return match format {
            Format::Csv => Ok(vec![Artifact::new(
                format!("field_n{}.csv", a.n()),
                export::field_csv(&a),
            )]),
            f => Err(unsupported("field without --refset", f)),
        };
    };
    let g = single_graph(cfg)?;
    let set = resolve_refset(&g, refset_arg)?;
    let f = DistanceField::new(&g, &set)?;
    let obs = g.all_observables();
    let stem = format!(
        "field_n{}_{}",
        g.n(),
        set.name().to_string().replace(':', "_")
    );
    match format {
        Format::Csv => {
            let mut s = String::from("partition,d,degree,local_simplex_dim,height,support\n");
            for (v, o) in obs.iter().enumerate() {
                writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    csv_partition(g.vertex(v)),
                    f.dist(v),
                    o.degree,
                    o.local_simplex_dim,
                    o.height,
                    o.support
                )
                .unwrap();
            }
            Ok(vec![Artifact::new(format!("{stem}.csv"), s)])
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Row<'a> {
                partition: &'a Partition,
                d: u32,
                #[serde(flatten)]
                observables: &'a partgraph::VertexObservables,
            }
            #[derive(Serialize)]
            struct Field<'a> {
                n: u32,
                reference_set: String,
                max_radius: u32,
                vertices: Vec<Row<'a>>,
            }
            let rows = (0..g.vertex_count())
                .map(|v| Row {
                    partition: g.vertex(v),
                    d: f.dist(v),
                    observables: &obs[v],
                })
                .collect();
            let body = Field {
                n: g.n(),
                reference_set: set.name().to_string(),
                max_radius: f.max_radius(),
                vertices: rows,
            };
            Ok(vec![Artifact::new(format!("{stem}.json"), json(&body))])
        }
        f => Err(unsupported("field", f)),
    }
}

pub fn cmd_corridor(cfg: &RunConfig) -> Result<Vec<Artifact>, CliError> {
    let g = single_graph(cfg)?;
    let start_text = cfg
        .start
        .as_deref()
        .ok_or_else(|| CliError::new(ErrorKind::Usage, "--start is required for corridor"))?;
    let start: Partition = start_text.parse()?;
    let start = g.id_of(&start).ok_or_else(|| {
        CliError::new(
            ErrorKind::StartNotAVertex,
            format!("{start} is not a partition of {}", g.n()),
        )
    })?;
    let refset_arg = cfg
        .refset
        .as_deref()
        .ok_or_else(|| CliError::new(ErrorKind::Usage, "--to/--refset is required for corridor"))?;
    let set = resolve_refset(&g, refset_arg)?;
    let f = DistanceField::new(&g, &set)?;
    let corridor = match cfg.radius {
        Some(r) => corridor_to_neighborhood(&g, &f, start, r)?,
        None => canonical_corridor(&g, &f, start)?,
    };
    let stem = format!("corridor_n{}", g.n());
    Ok(vec![match cfg.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = String::new();
            for (&v, d) in corridor.vertices().iter().zip(corridor.distances()) {
                writeln!(s, "{}  d={d}", compact(g.vertex(v))).unwrap();
            }
            Artifact::new(format!("{stem}.txt"), s)
        }
        Format::Csv => {
            let mut s = String::from("step,partition,d\n");
            for (i, (&v, d)) in corridor
                .vertices()
                .iter()
                .zip(corridor.distances())
                .enumerate()
            {
                writeln!(s, "{i},{},{d}", csv_partition(g.vertex(v))).unwrap();
            }
            Artifact::new(format!("{stem}.csv"), s)
        }
        Format::Json => Artifact::new(format!("{stem}.json"), json(&corridor.to_export(&g))),
        f => return Err(unsupported("corridor", f)),
    }])
}

pub fn cmd_verify(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let mut vc = VerifyConfig::new(cfg.level);
    vc.seed = cfg.seed;
    if let Some(n) = &cfg.n {
        vc.range = n.0.clone();
    }
    let report = run_all(&vc)?;
    let artifact = match cfg.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut s = String::new();
            for r in &report.results {
                writeln!(s, "{r}").unwrap();
            }
            for (n, why) in &report.skipped {
                writeln!(s, "SKIP n={n}: {why}").unwrap();
            }
            Artifact::new("verify.txt", s)
        }
        Format::Json => Artifact::new("verify.json", json(&report)),
        f => return Err(unsupported("verify", f)),
    };
    let failure = (!report.all_passed()).then(|| {
        let failed: Vec<_> = report
            .results
            .iter()
            .filter(|r| !r.passed)
            .map(|r| r.property)
            .collect();
        CliError::new(
            ErrorKind::VerificationFailed,
            format!("failed properties: {}", failed.join(", ")),
        )
    });
    Ok(Outcome {
        artifacts: vec![artifact],
        failure,
    })
}

pub fn cmd_export(cfg: &RunConfig) -> Result<Vec<Artifact>, CliError> {
    if cfg.figure {
        let a = GraphAnalysis::build(cfg.require_n()?.single()?)?;
        let reference = resolve_refset(&a.graph, cfg.refset.as_deref().unwrap_or("axis"))?;
        let corridor_start = match &cfg.start {
            Some(text) => {
                let p: Partition = text.parse()?;
                Some(a.graph.id_of(&p).ok_or_else(|| {
                    CliError::new(
                        ErrorKind::StartNotAVertex,
                        format!("{p} is not a partition of {}", a.n()),
                    )
                })?)
            }
            None => None,
        };
        let options = FigureOptions {
            reference: reference.name().clone(),
            seed: cfg.seed,
            corridor_start,
        };
        let fig = figure_data(&a, &reference, &options)?;
        return match cfg.format.unwrap_or(Format::Json) {
            Format::Json => Ok(vec![Artifact::new(
                format!("figure_n{}.json", a.n()),
                json(&fig),
            )]),
            f => Err(unsupported("export --figure", f)),
        };
    }
    let g = single_graph(cfg)?;
    Ok(vec![match cfg.format.unwrap_or(Format::Dot) {
        Format::Dot => Artifact::new(format!("graph_n{}.dot", g.n()), export::to_dot(&g)),
        Format::Json => Artifact::new(
            format!("graph_n{}.json", g.n()),
            format!("{}\n", export::to_json(&g)),
        ),
        f => return Err(unsupported("export", f)),
    }])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_notation() {
        let p = |v: Vec<u32>| Partition::new(v).unwrap();
        assert_eq!(compact(&p(vec![1, 1, 1, 1])), "(1^4)");
        assert_eq!(compact(&p(vec![2, 1, 1])), "(2,1,1)");
        assert_eq!(compact(&p(vec![2, 2])), "(2,2)");
        assert_eq!(compact(&p(vec![3, 2, 2, 2, 1])), "(3,2^3,1)");
        assert_eq!(compact(&p(vec![4])), "(4)");
    }
}
