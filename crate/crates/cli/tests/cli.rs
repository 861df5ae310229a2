use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;

fn run(args: &[&str], input: &str) -> (i32, String, String) {
    let mut argv = vec!["tropbasis"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = tropbasis::run(argv, &mut input.as_bytes(), &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str], input: &str) -> Value {
    let (code, out, err) = run(args, input);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn catalog(name: &str) -> String {
    run(&["catalog", name], "").1
}

#[test]
fn binary_pipeline_through_stdin() {
    let bin = env!("CARGO_BIN_EXE_tropbasis");
    let fano = Command::new(bin).args(["catalog", "fano"]).output().unwrap();
    assert!(fano.status.success());
    let mut child = Command::new(bin)
        .args(["bm", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(&fano.stdout).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["format"], "bm-result/v1");
    assert_eq!(v["members"].as_array().unwrap().len(), 7);
    assert!(v["members"][0]["witness"].is_array());
}

#[test]
fn r6_is_not_unique() {
    let v = json(&["unique", "-"], &catalog("r6"));
    assert_eq!(v["unique"], false);
    assert_eq!(v["bm"], serde_json::json!([[1, 2, 3], [4, 5, 6]]));
    assert!(v["greedy_basis"].as_array().unwrap().len() > 2);
}

#[test]
fn axiom_two_violation_exits_3() {
    let bad = r#"{"format":"matroid-circuits/v1","n":3,"circuits":[[1],[1,2,3]]}"#;
    let (code, out, err) = run(&["validate", "-"], bad);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.starts_with("error[axiom-2]:"), "{err}");
    assert_eq!(err.trim_end().lines().count(), 1);
}

#[test]
fn other_input_errors_exit_3() {
    let (code, _, err) = run(&["validate", "-"], "not json");
    assert_eq!((code, err.starts_with("error[parse]")), (3, true));
    let (code, _, _) = run(&["validate", "/nonexistent/file.json"], "");
    assert_eq!(code, 3);
    let (code, _, err) = run(&["bm", "-"], &run(&["simplify", "-"], r#"{"format":"matroid-circuits/v1","n":3,"circuits":[[1,2]]}"#).1);
    assert_eq!(code, 0, "{err}");
    let (code, _, err) = run(&["bm", "-"], r#"{"format":"matroid-circuits/v1","n":3,"circuits":[[1,2]]}"#);
    assert_eq!((code, err.starts_with("error[not-simple]")), (3, true), "{err}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&["frobnicate"], "").0, 2);
    assert_eq!(run(&["catalog", "nope"], "").0, 2);
    assert_eq!(run(&["--jobs", "0", "catalog", "fano"], "").0, 2);
    assert_eq!(run(&["minimal-basis", "--order", "x", "--shuffle-seed", "1", "-"], "").0, 2);
    let (code, out, _) = run(&["--help"], "");
    assert_eq!(code, 0);
    assert!(out.contains("enumerate-bases"));
}

#[test]
fn caps_exit_4() {
    let (code, _, err) = run(&["--max-n", "6", "bm", "-"], &catalog("fano"));
    assert_eq!(code, 4);
    assert!(err.starts_with("error[limit-exceeded]"), "{err}");
    let (code, _, _) = run(&["--max-n", "6", "--force", "bm", "-"], &catalog("fano"));
    assert_eq!(code, 0);
}

#[test]
fn emitted_matroids_round_trip() {
    let graph = r#"{"format":"graph/v1","vertices":4,"edges":[[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;
    let gf2 = r#"{"format":"gf2-matrix/v1","rows":["1001101","0101011","0010111"]}"#;
    let mut emitted = vec![
        run(&["from-graph", "-"], graph).1,
        run(&["from-gf2", "-"], gf2).1,
        run(&["dual", "-"], &catalog("p7")).1,
        run(&["delete", "-e", "1,7", "-"], &catalog("fano")).1,
        run(&["contract", "-e", "2", "-"], &catalog("r10")).1,
    ];
    for name in ["fano", "nonfano", "p7", "r6", "r10", "u24", "k4_graphic"] {
        emitted.push(catalog(name));
    }
    for text in emitted {
        let first: Value = serde_json::from_str(&text).unwrap();
        let again: Value = serde_json::from_str(&run(&["validate", "-"], &text).1).unwrap();
        assert_eq!(first["n"], again["n"]);
        assert_eq!(first["circuits"], again["circuits"]);
        assert!(first["tool_version"].is_string());
    }
    // the GF(2) matrix above represents the Fano plane
    assert_eq!(json(&["from-gf2", "-"], gf2)["circuits"].as_array().unwrap().len(), 14);
}

#[test]
fn simplify_reports_element_map() {
    let m = r#"{"format":"matroid-circuits/v1","n":4,"circuits":[[1],[2,3],[2,4],[3,4]]}"#;
    let v = json(&["simplify", "-"], m);
    assert_eq!(v["n"], 1);
    assert_eq!(v["element_map"], serde_json::json!([2]));
}

#[test]
fn output_is_independent_of_jobs() {
    for (cmd, name) in [("enumerate-bases", "nonfano"), ("bm", "r10"), ("is-binary", "p7"), ("unique", "p7")] {
        let one = run(&["--jobs", "1", cmd, "-"], &catalog(name));
        let eight = run(&["--jobs", "8", cmd, "-"], &catalog(name));
        assert_eq!(one, eight, "{cmd} {name}");
    }
}

#[test]
fn shuffled_greedy_runs_end_in_a_minimal_basis() {
    let m = catalog("nonfano");
    let bases = json(&["enumerate-bases", "-"], &m)["bases"].clone();
    for seed in 0..8 {
        let v = json(&["minimal-basis", "--shuffle-seed", &seed.to_string(), "-"], &m);
        let kept = v["kept"].clone();
        assert!(bases.as_array().unwrap().contains(&kept), "seed {seed}: {kept}");
    }
}

#[test]
fn basis_and_closure_files() {
    let dir = tempfile::tempdir().unwrap();
    let six = r#"{"format":"circuit-subset/v1","circuits":[[1,2,4],[1,3,5],[1,6,7],[2,3,6],[2,5,7],[3,4,7]]}"#;
    let path = dir.path().join("six.json");
    std::fs::write(&path, six).unwrap();
    let p = path.to_str().unwrap();

    let check = json(&["is-basis", "--basis", p, "-"], &catalog("fano"));
    assert_eq!(check["is_basis"], false);
    let w: Vec<usize> = serde_json::from_value(check["witness"].clone()).unwrap();
    // the witness is separated by the missing line {4,5,6} alone
    assert_eq!(w.iter().filter(|e| [4, 5, 6].contains(e)).count(), 1);

    let closure = json(&["closure", "--seed-set", p, "-"], &catalog("fano"));
    assert_eq!(closure["format"], "circuit-subset/v1");
    assert_eq!(closure["complete"], false);

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"format":"circuit-subset/v1","circuits":[[1,2,3]]}"#).unwrap();
    let (code, _, err) = run(&["is-basis", "--basis", bad.to_str().unwrap(), "-"], &catalog("fano"));
    assert_eq!(code, 3, "{err}");
}

#[test]
fn text_output() {
    let (code, out, _) = run(&["--output", "text", "info", "-"], &catalog("u24"));
    assert_eq!(code, 0);
    assert!(out.contains("U_{2,4}"));
    assert!(out.contains("rank = 2"));
}

#[test]
fn graph_commands() {
    let c5 = r#"{"format":"graph/v1","vertices":5,"edges":[[1,2],[2,3],[3,4],[4,5],[5,1]]}"#;
    let v = json(&["induced-cycles", "-"], c5);
    assert_eq!(v["circuits"], serde_json::json!([[1, 2, 3, 4, 5]]));
    let v = json(&["splitting-cuts", "-"], c5);
    assert_eq!(v["circuits"].as_array().unwrap().len(), 0);
    let multi = r#"{"format":"graph/v1","vertices":2,"edges":[[1,2],[1,2]]}"#;
    assert_eq!(run(&["induced-cycles", "-"], multi).0, 3);
}
