use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use symlab::io::edge_list;
use symlab::report::SCHEMA;
use symlab_core::graph::families;

fn symlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symlab"))
        .args(args)
        .output()
        .expect("symlab runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn validated(text: &str) -> Value {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let compiled = jsonschema::JSONSchema::compile(&schema).unwrap();
    let report: Value = serde_json::from_str(text).unwrap();
    if let Err(errors) = compiled.validate(&report) {
        let msgs: Vec<String> = errors.map(|e| format!("{} at {}", e, e.instance_path)).collect();
        panic!("report does not match the schema: {msgs:?}");
    }
    report
}

fn read_report(path: &Path) -> Value {
    validated(&fs::read_to_string(path).unwrap())
}

#[test]
fn build_full_tier_writes_a_valid_report() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let gamma = dir.path().join("gamma.json");
    let out = symlab(&[
        "build",
        "example-6.3",
        "--tier",
        "full",
        "--json",
        json.to_str().unwrap(),
        "--graph-out",
        gamma.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let r = read_report(&json);
    assert_eq!(r["facts"]["aut_gamma_order"], "4000");
    assert_eq!(r["facts"]["group_order"], "125");
    assert_eq!(r["facts"]["case"], "case 2");
    assert_eq!(r["tier"], "full");
    assert!(r["discrepancies"].as_array().unwrap().is_empty());
    assert!(r.get("timing_ms").is_none());
    let g = symlab::io::read_graph(&gamma).unwrap();
    assert_eq!(g.order(), 125);
    assert_eq!(g.valency(), Some(8));
}

#[test]
fn build_construction_ii_to_stdout() {
    let out = symlab(&["build", "construction-II", "--n", "2", "--json", "-"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let r = validated(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(r["facts"]["group_order"], "19683");
    assert_eq!(r["facts"]["aut_hs_order"], "4");
    assert_eq!(r["command"], serde_json::json!(["build", "construction-II", "--tier", "fast", "--n", "2"]));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for p in [&a, &b] {
        let out = symlab(&["build", "example-6.5", "--json", p.to_str().unwrap()]);
        assert_eq!(code(&out), 0);
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn timing_is_opt_in() {
    let out = symlab(&["--timing", "build", "example-6.3", "--json", "-"]);
    assert_eq!(code(&out), 0);
    let r = validated(&String::from_utf8(out.stdout).unwrap());
    assert!(r["timing_ms"].is_object());
}

#[test]
fn unknown_entry_is_an_input_error() {
    let out = symlab(&["build", "nosuch"]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("example-6.3"));
}

#[test]
fn bad_arguments_are_input_errors() {
    assert_eq!(code(&symlab(&["build"])), 3);
    assert_eq!(code(&symlab(&["frobnicate"])), 3);
    assert_eq!(code(&symlab(&["--help"])), 0);
}

#[test]
fn dot_output_over_the_limit_is_a_cap_error() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let out = symlab(&["build", "example-6.5", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&out), 4);
}

#[test]
fn dot_output_draws_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("g.dot");
    let out = symlab(&["build", "example-6.3", "--dot", dot.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("graph example_6_3 {"));
    assert_eq!(text.matches(" -- ").count(), 125 * 8 / 2);
}

#[test]
fn classify_petersen() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("petersen.txt");
    fs::write(&path, edge_list(&families::petersen())).unwrap();
    let json = dir.path().join("r.json");
    let out = symlab(&["classify", path.to_str().unwrap(), "--cayley", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let r = read_report(&json);
    assert_eq!(r["facts"]["aut_order"], "120");
    assert_eq!(r["facts"]["cayley"], false);
    assert_eq!(r["evidence"], "full");
    let p = &r["profiles"][0];
    assert_eq!(p["basics"]["girth"], 5);
    assert!(p["case"].is_null());
}

#[test]
fn classify_line_graph_of_k33() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lk33.txt");
    let lk33 = families::complete_bipartite(3, 3).line_graph().unwrap();
    fs::write(&path, edge_list(&lk33)).unwrap();
    let out = symlab(&["classify", path.to_str().unwrap(), "--cayley", "--json", "-"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let r = validated(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(r["facts"]["aut_order"], "72");
    assert_eq!(r["facts"]["cayley"], true);
    let p = &r["profiles"][0];
    assert_eq!(p["locally_2kn"], 2);
    assert_eq!(p["case"]["label"], "3-CH");
}

#[test]
fn classify_rejects_a_group_that_is_not_automorphic() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("c5.txt");
    fs::write(&graph, edge_list(&families::cycle(5))).unwrap();
    let group = dir.path().join("g.json");
    fs::write(&group, r#"{"degree": 5, "generators": [[1, 0, 2, 3, 4]]}"#).unwrap();
    let out = symlab(&["classify", graph.to_str().unwrap(), "--group", group.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
}

#[test]
fn verify_paper_subset() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("v.json");
    let out = symlab(&["verify-paper", "--criteria", "8,9", "--json", json.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let r = read_report(&json);
    let ids: Vec<u64> = r["criteria"].as_array().unwrap().iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, [8, 9]);
    assert!(r["criteria"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout.lines().filter(|l| l.starts_with("criterion")).count(), 2);
}

#[test]
fn verify_paper_reports_the_construction_ii_discrepancy() {
    let out = symlab(&["verify-paper", "--criteria", "7", "--json", "-"]);
    assert_eq!(code(&out), 2);
    let r = validated(&String::from_utf8(out.stdout).unwrap());
    assert_eq!(r["criteria"][0]["status"], "fail");
    assert_eq!(r["discrepancies"].as_array().unwrap().len(), 1);
}

#[test]
fn unknown_criterion_is_an_input_error() {
    assert_eq!(code(&symlab(&["verify-paper", "--criteria", "12"])), 3);
}
