use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use epg_core::constructions::fig2_fixture;
use epg_core::{derived_graph, parse_graph, parse_representation};
use serde_json::Value;

fn epg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epg")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("epg-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn snapshot(name: &str) -> String {
    fs::read_to_string(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/snapshots").join(name))
        .unwrap()
}

#[test]
fn construct_then_validate_round_trip() {
    let dir = scratch("construct");
    for which in [&["star", "--n", "4"][..], &["kmn", "--m", "3", "--n", "4"], &["h2"], &["fig2"], &["h1", "--size", "4"]] {
        let rep = dir.join("r.json");
        let graph = dir.join("g.json");
        let mut args = vec!["construct"];
        args.extend_from_slice(which);
        args.extend_from_slice(&["-o", s(&rep), "--graph", s(&graph)]);
        let o = epg(&args);
        assert!(o.status.success(), "{which:?}: {}", String::from_utf8_lossy(&o.stderr));
        let g = parse_graph(&fs::read_to_string(&graph).unwrap()).unwrap();
        let r = parse_representation(&fs::read_to_string(&rep).unwrap()).unwrap();
        assert_eq!(derived_graph(&r), g, "{which:?}");

        let o = epg(&["validate", "--graph", s(&graph), "--rep", s(&rep)]);
        assert_eq!(o.status.code(), Some(0), "{which:?}");
        let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(report["ok"], true);
    }
}

#[test]
fn validate_reports_a_missing_edge() {
    let dir = scratch("validate");
    let graph = dir.join("g.json");
    let rep = dir.join("r.json");
    fs::write(&graph, r#"{"vertices":["x","y"],"edges":[["x","y"]]}"#).unwrap();
    fs::write(&rep, r#"{"paths":{"x":[[0,0],[1,0]],"y":[[0,1],[1,1]]}}"#).unwrap();
    let o = epg(&["validate", "--graph", s(&graph), "--rep", s(&rep)]);
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["ok"], false);
    assert_eq!(report["missing_edges"], serde_json::json!([["x", "y"]]));

    // monotonicity and bend budget are opt-in checks
    fs::write(&rep, r#"{"paths":{"x":[[0,0],[2,0],[2,1],[1,1]],"y":[[1,0],[2,0]]}}"#).unwrap();
    let ok = epg(&["validate", "--graph", s(&graph), "--rep", s(&rep)]);
    assert_eq!(ok.status.code(), Some(0));
    let strict = epg(&["validate", "--graph", s(&graph), "--rep", s(&rep), "--monotonic", "--max-bends", "1"]);
    assert_eq!(strict.status.code(), Some(1));
    let report: Value = serde_json::from_str(&stdout(&strict)).unwrap();
    assert_eq!(report["nonmonotonic_vertices"], serde_json::json!(["x"]));
}

#[test]
fn malformed_input_is_a_usage_error() {
    let dir = scratch("malformed");
    let rep = dir.join("r.json");
    fs::write(&rep, r#"{"paths":{"x":[[0,0],[1,1]]}}"#).unwrap();
    let o = epg(&["analyze", "--rep", s(&rep)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("x"));
    assert_eq!(epg(&["analyze", "--rep", s(&dir.join("absent.json"))]).status.code(), Some(2));
    assert_eq!(epg(&["search", "--graph", s(&rep), "--grid", "3by3"]).status.code(), Some(2));
}

#[test]
fn bounds_print_exact_fractions() {
    let o = epg(&["bounds", "mlbl2", "--m", "3", "--n", "36", "--k", "3"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["lhs"], "36");
    assert_eq!(v["rhs"], "141/4");
    assert_eq!(v["violated"], true);

    let t: Value = serde_json::from_str(&stdout(&epg(&["bounds", "threshold", "--m", "4"]))).unwrap();
    assert_eq!(t["threshold"], "117");

    let v: Value =
        serde_json::from_str(&stdout(&epg(&["bounds", "verdict", "--m", "2", "--n", "3", "--k", "0"]))).unwrap();
    assert_eq!(v["in_class"], "no");
}

#[test]
fn bounds_exit_codes() {
    assert_eq!(epg(&["bounds", "heldt", "--m", "4"]).status.code(), Some(0));
    assert_eq!(epg(&["bounds", "heldt", "--m", "5"]).status.code(), Some(3));
    assert_eq!(epg(&["bounds", "lbl1", "--m", "5", "--n", "2", "--k", "1"]).status.code(), Some(2));
    assert_eq!(epg(&["bounds", "lbl1", "--m", "3"]).status.code(), Some(2));
}

#[test]
fn transform_exit_codes() {
    let dir = scratch("transform");
    let rep = dir.join("r.json");
    let lines = dir.join("lines.json");
    // two corners meeting at their bends: no edge shared, but not separable
    fs::write(&rep, r#"{"paths":{"p":[[0,1],[1,1],[1,2]],"q":[[2,1],[1,1],[1,0]]}}"#).unwrap();
    assert_eq!(epg(&["transform", "b1-to-b3m", "--rep", s(&rep)]).status.code(), Some(3));
    let check = epg(&["transform", "b1-to-b3m", "--rep", s(&rep), "--check-only"]);
    assert_eq!(check.status.code(), Some(3));
    let conflicts: Value = serde_json::from_str(&stdout(&check)).unwrap();
    assert_eq!(conflicts[0]["vertices"], serde_json::json!(["p", "q"]));

    fs::write(&rep, r#"{"paths":{"p":[[0,0],[0,1],[1,1],[1,2]]}}"#).unwrap();
    assert_eq!(epg(&["transform", "b1-to-b3m", "--rep", s(&rep)]).status.code(), Some(3));

    let (g, r) = fig2_fixture();
    fs::write(&rep, epg_core::representation_to_json(&r)).unwrap();
    let o = epg(&["transform", "b1-to-b3m", "--rep", s(&rep), "--lines", s(&lines)]);
    assert_eq!(o.status.code(), Some(0));
    let out = parse_representation(&stdout(&o)).unwrap();
    assert_eq!(derived_graph(&out), g);
    assert!(out.all_monotonic() && out.max_bends() <= 3);
    let table: Value = serde_json::from_str(&fs::read_to_string(&lines).unwrap()).unwrap();
    assert_eq!(table.as_array().unwrap().len(), r.len());
}

#[test]
fn search_found_and_exhausted() {
    let dir = scratch("search");
    let graph = dir.join("g.json");
    fs::write(&graph, epg_core::graph_to_json(&epg_core::Graph::cycle(4))).unwrap();

    let none = epg(&["search", "--graph", s(&graph), "--max-bends", "0", "--grid", "4x1"]);
    assert_eq!(none.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&none.stderr).contains("exhausted"));

    let found = epg(&["search", "--graph", s(&graph), "--max-bends", "1", "--grid", "3x3"]);
    assert_eq!(found.status.code(), Some(0));
    let r = parse_representation(&stdout(&found)).unwrap();
    assert_eq!(derived_graph(&r), epg_core::Graph::cycle(4));

    let upto = epg(&["search", "--graph", s(&graph), "--grid", "3x3", "--upto", "2"]);
    let v: Value = serde_json::from_str(&stdout(&upto)).unwrap();
    assert_eq!(v["bend_number_upto"], 1);

    let limited = epg(&["search", "--graph", s(&graph), "--max-bends", "2", "--grid", "5x5", "--node-limit", "1"]);
    assert_eq!(limited.status.code(), Some(1));
}

#[test]
fn renders_match_snapshots() {
    let dir = scratch("render");
    let rep = dir.join("r.json");
    fs::write(&rep, epg_core::representation_to_json(&fig2_fixture().1)).unwrap();
    let svg = epg(&["render", "svg", "--rep", s(&rep), "--offset", "--labels", "--cell", "20"]);
    assert!(svg.status.success());
    assert_eq!(stdout(&svg), snapshot("fig2_offset.svg"));
    let ascii = epg(&["render", "ascii", "--rep", s(&rep)]);
    assert_eq!(stdout(&ascii), snapshot("fig2.txt"));
    assert_eq!(epg(&["render", "svg", "--rep", s(&rep), "--cell", "2"]).status.code(), Some(2));
}
