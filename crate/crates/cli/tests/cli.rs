use std::process::{Command, Output};

fn partgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partgraph"))
        .args(args)
        .env_remove("PARTGRAPH_OUT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn error_record(o: &Output) -> serde_json::Value {
    let text = String::from_utf8(o.stderr.clone()).unwrap();
    assert_eq!(
        text.lines().count(),
        1,
        "diagnostic should be one line: {text}"
    );
    serde_json::from_str(text.trim()).unwrap()
}

#[test]
fn corridor_from_column_to_axis() {
    let o = partgraph(&[
        "corridor",
        "--n",
        "4",
        "--start",
        "[1,1,1,1]",
        "--to",
        "axis",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(1^4)  d=2\n(2,1,1)  d=1\n(2,2)  d=0\n");
}

#[test]
fn corridor_stops_at_neighbourhood() {
    let o = partgraph(&[
        "corridor", "--n", "12", "--start", "[12]", "--refset", "spine", "--radius", "2",
        "--format", "csv",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert_eq!(out.lines().last().unwrap().rsplit(',').next(), Some("2"));
}

#[test]
fn stats_csv_writes_four_tables() {
    let dir = tempfile::tempdir().unwrap();
    let o = partgraph(&[
        "stats",
        "--n",
        "8..12",
        "--format",
        "csv",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(o.status.success());
    for k in 1..=4 {
        let body = std::fs::read_to_string(dir.path().join(format!("table{k}.csv"))).unwrap();
        assert!(body.lines().count() > 1);
    }
    let t1 = std::fs::read_to_string(dir.path().join("table1.csv")).unwrap();
    assert!(t1
        .lines()
        .any(|l| l.starts_with("8,chain,") && l.contains("36.2")));
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_partgraph"))
        .args(["export", "--n", "5"])
        .env("PARTGRAPH_OUT", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let dot = std::fs::read_to_string(dir.path().join("graph_n5.dot")).unwrap();
    assert!(dot.starts_with("graph G5 {"));
    assert_eq!(dot.matches(" -- ").count(), 9);
}

#[test]
fn config_file_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    std::fs::write(&cfg, "n = 4\nformat = \"json\"\n").unwrap();
    let o = partgraph(&["build", "--config", cfg.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["vertices"], 5);
    assert_eq!(v[0]["edges"], 5);
    let o = partgraph(&[
        "build",
        "--config",
        cfg.to_str().unwrap(),
        "--format",
        "csv",
    ]);
    assert!(stdout(&o).starts_with("n,vertices"));
}

#[test]
fn custom_refset_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.json");
    std::fs::write(
        &path,
        r#"{"name": "corners", "members": [[6], [1,1,1,1,1,1]]}"#,
    )
    .unwrap();
    let arg = format!("@{}", path.display());
    let o = partgraph(&["field", "--n", "6", "--refset", &arg]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l.starts_with("\"[6]\",0,")));
    assert_eq!(out.lines().count(), 1 + 11);

    std::fs::write(&path, r#"{"name": "bad", "members": [[5]]}"#).unwrap();
    let o = partgraph(&["field", "--n", "6", "--refset", &arg]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn verify_passes_quick() {
    let o = partgraph(&["verify", "--level", "quick"]);
    assert!(o.status.success());
    assert!(stdout(&o)
        .lines()
        .all(|l| l.starts_with("PASS") || l.starts_with("SKIP")));
}

#[test]
fn error_paths_have_distinct_codes() {
    let cases: [(&[&str], i32, &str); 7] = [
        (&["build"], 2, "usage"),
        (
            &["corridor", "--n", "4", "--start", "[1,2,1]", "--to", "axis"],
            3,
            "partition_syntax",
        ),
        (&["build", "--n", "0"], 4, "n_out_of_range"),
        (&["build", "--n", "41"], 4, "n_out_of_range"),
        (
            &[
                "corridor", "--n", "4", "--start", "[3,1]", "--to", "nowhere",
            ],
            5,
            "unknown_refset",
        ),
        (
            &["corridor", "--n", "4", "--start", "[3,2]", "--to", "axis"],
            6,
            "start_not_a_vertex",
        ),
        (
            &["field", "--n", "4", "--refset", "@/nonexistent/refset.json"],
            8,
            "io",
        ),
    ];
    for (args, code, kind) in cases {
        let o = partgraph(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        let rec = error_record(&o);
        assert_eq!(rec["error"], kind);
        assert_eq!(rec["code"], code);
    }
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("bad.toml");
    std::fs::write(&cfg, "colour = 3\n").unwrap();
    assert_eq!(
        partgraph(&["stats", "--config", cfg.to_str().unwrap()])
            .status
            .code(),
        Some(9)
    );
}

#[test]
fn figure_export_is_seeded() {
    let args = [
        "export", "--n", "10", "--figure", "--refset", "spine", "--start", "[10]", "--seed", "3",
    ];
    let (a, b) = (partgraph(&args), partgraph(&args));
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["vertices"].as_array().unwrap().len(), 42);
    assert_eq!(v["corridors"].as_array().unwrap().len(), 3);
    assert_eq!(v["reference_set"], "spine");
}
