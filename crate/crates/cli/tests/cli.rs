use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_tilderep"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tilderep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn zoo_file(name: &str) -> PathBuf {
    let out = run(&["zoo", "emit", name, "--json"]);
    assert!(out.status.success());
    scratch(&format!("{name}.json"), std::str::from_utf8(&out.stdout).unwrap())
}

const TRIVIAL: &str = r#"{"labels":["1"],"table":[[0]]}"#;

#[test]
fn analyze_verdicts() {
    let pt3 = zoo_file("pt3");
    let out = run(&["analyze", pt3.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["ei"], true);
    assert_eq!(r["right_restriction"], true);
    assert_eq!(r["left_restriction"], false);

    let ex = zoo_file("ei-neither-restriction");
    let r = json(&run(&["analyze", ex.to_str().unwrap(), "--json"]));
    assert_eq!(r["right_restriction"], false);
    assert_eq!(r["left_restriction"], false);
    assert_eq!(r["ei"], true);

    let one = scratch("one.json", TRIVIAL);
    let r = json(&run(&["analyze", one.to_str().unwrap(), "--json"]));
    for key in ["ehresmann", "right_restriction", "left_restriction", "ei", "weakly_ample"] {
        assert_eq!(r[key], true, "{key}");
    }
}

#[test]
fn verify_iso_exit_codes() {
    let pt3 = zoo_file("pt3");
    let out = run(&["verify-iso", pt3.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);

    let ex = zoo_file("ei-neither-restriction");
    let out = run(&["verify-iso", ex.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(1));
    let r = json(&out);
    assert_eq!(r["phi"]["holds"], false);
    assert!(r["phi"]["witness"].is_array());
    let out = run(&["verify-iso", ex.to_str().unwrap(), "--json", "--ut3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["ut3"]["holds"], true);

    let one = scratch("one-iso.json", TRIVIAL);
    assert_eq!(run(&["verify-iso", one.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn reps_on_pt2_and_a_group() {
    let pt2 = zoo_file("pt2");
    let out = run(&["reps", pt2.to_str().unwrap(), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["simple_dims"], serde_json::json!([1, 2, 1, 1]));
    assert_eq!(r["projective_dims"], serde_json::json!([1, 2, 3, 1]));
    assert_eq!(
        r["cartan"],
        serde_json::json!([[1, 0, 0, 0], [0, 1, 1, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    );
    assert_eq!(r["checks"]["pt_cartan_formula"], true);

    // Z2 with its identity as the only projection.
    let z2 = scratch("z2.json", r#"{"labels":["1","g"],"table":[[0,1],[1,0]],"projections":[0]}"#);
    let r = json(&run(&["reps", z2.to_str().unwrap(), "--json"]));
    assert_eq!(r["cartan"], serde_json::json!([[1, 0], [0, 1]]));
    assert_eq!(r["passed"], true);

    let ex = zoo_file("ei-neither-restriction");
    assert_eq!(run(&["reps", ex.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn malformed_input_exits_with_two() {
    let bad = scratch("bad.json", "{");
    assert_eq!(run(&["analyze", bad.to_str().unwrap()]).status.code(), Some(2));
    let not_assoc = scratch("na.json", r#"{"labels":["a","b"],"table":[[1,0],[0,0]]}"#);
    assert_eq!(run(&["analyze", not_assoc.to_str().unwrap()]).status.code(), Some(2));
    let pt2 = zoo_file("pt2");
    let out = run(&["analyze", pt2.to_str().unwrap(), "--max-size", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(run(&["analyze", "/nonexistent/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["zoo", "emit", "pt9"]).status.code(), Some(2));
}

#[test]
fn reports_are_identical_across_thread_counts() {
    let pt3 = zoo_file("pt3");
    let path = pt3.to_str().unwrap();
    for cmd in ["analyze", "verify-iso", "reps"] {
        let one = run(&[cmd, path, "--json", "--threads", "1"]);
        let four = run(&[cmd, path, "--json", "--threads", "4"]);
        let env = bin().args([cmd, path, "--json"]).env("TILDEREP_THREADS", "2").output().unwrap();
        assert_eq!(one.stdout, four.stdout, "{cmd}");
        assert_eq!(one.stdout, env.stdout, "{cmd}");
    }
}

#[test]
fn zoo_emit_carries_family() {
    let out = run(&["zoo", "emit", "pt2"]);
    let r = json(&out);
    assert_eq!(r["family"], serde_json::json!({"name": "pt", "n": 2}));
    assert_eq!(r["labels"].as_array().unwrap().len(), 9);
    let list = String::from_utf8(run(&["zoo", "list"]).stdout).unwrap();
    assert!(list.contains("non-embeddable"));
}

#[test]
fn young_tables() {
    let r = json(&run(&["young", "3", "--json"]));
    assert_eq!(r["hook_dimensions"], serde_json::json!([1, 2, 1]));
    assert_eq!(run(&["young", "40"]).status.code(), Some(2));
}

#[test]
fn acceptance_prints_json_lines() {
    let out = run(&["acceptance"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let lines: Vec<Value> = String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 10);
    assert!(lines.iter().all(|l| l["passed"] == true));
}
