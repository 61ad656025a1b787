use std::fs;
use std::path::{Path, PathBuf};

use povd::cli::{run_command, CommandOutcome, EXIT_GUARD, EXIT_NO, EXIT_USAGE, EXIT_YES};
use tempfile::TempDir;

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    fs::write(&p, text).unwrap();
    p
}

fn run(args: &[&str]) -> (CommandOutcome, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["povd"];
    full.extend_from_slice(args);
    let res = run_command(full, &mut out, &mut err);
    (res, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const TRIANGLE: &str = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n";
const TWO_TRIANGLES: &str = "p edge 6 6\ne 1 2\ne 2 3\ne 1 3\ne 4 5\ne 5 6\ne 4 6\n";
const T2: &str = "p edge 7 6\ne 1 2\ne 1 3\ne 1 4\ne 2 5\ne 3 6\ne 4 7\n";

#[test]
fn solve_triangle_and_two_triangles() {
    let dir = TempDir::new().unwrap();
    let tri = file(&dir, "tri.gr", TRIANGLE);
    let (res, out, _) = run(&["solve", "-k", "1", s(&tri)]);
    assert_eq!(res.code, EXIT_YES);
    assert_eq!(res.report.unwrap().witness.unwrap().len(), 1);
    assert!(out.contains("verdict: yes"));

    let two = file(&dir, "two.gr", TWO_TRIANGLES);
    for extra in [None, Some("--kernelize-first")] {
        let mut args = vec!["solve", "-k", "1", s(&two)];
        args.extend(extra);
        let (res, _, _) = run(&args);
        assert_eq!(res.code, EXIT_NO);
        assert_eq!(res.report.unwrap().witness, None);
    }
}

#[test]
fn json_report_shape() {
    let dir = TempDir::new().unwrap();
    let tri = file(&dir, "tri.gr", TRIANGLE);
    let (_, out, _) = run(&["solve", "-k", "1", "--json", "--kernelize-first", s(&tri)]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    for key in ["command", "n", "m", "k", "verdict", "witness", "kernel", "stats"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    assert!(v.get("trace").is_none());
    assert_eq!(v["verdict"], "yes");
    for key in ["nodes", "max_depth", "millis"] {
        assert!(v["stats"].get(key).is_some());
    }

    let (res, out, _) = run(&["kernelize", "-k", "1", "--trace", "--json", s(&tri)]);
    assert_eq!(res.code, EXIT_YES);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["trace"].is_array());
    assert_eq!(v["kernel"]["verdict"], "reduced");
}

#[test]
fn check_and_oracle() {
    let dir = TempDir::new().unwrap();
    let t2 = file(&dir, "t2.gr", T2);
    let centre = file(&dir, "centre.sol", "1\n");
    let leaf = file(&dir, "leaf.sol", "c nothing deleted\n");
    assert_eq!(run(&["check", s(&t2), "--solution", s(&centre)]).0.code, EXIT_YES);
    assert_eq!(run(&["check", s(&t2), "--solution", s(&leaf)]).0.code, EXIT_NO);

    let (res, _, _) = run(&["oracle", "-k", "1", "--json", s(&t2)]);
    assert_eq!(res.code, EXIT_YES);
    assert_eq!(res.report.unwrap().witness, Some(vec![1]));
    assert_eq!(run(&["oracle", "-k", "0", s(&t2)]).0.code, EXIT_NO);

    let big = file(&dir, "big.gr", "p edge 21 0\n");
    let (res, _, err) = run(&["oracle", "-k", "1", s(&big)]);
    assert_eq!(res.code, EXIT_GUARD);
    assert!(err.contains("error"));
}

#[test]
fn bad_input_is_a_usage_error() {
    let dir = TempDir::new().unwrap();
    let bad = file(&dir, "bad.gr", "p edge 2 1\ne 1 1\n");
    let (res, _, err) = run(&["solve", "-k", "1", s(&bad)]);
    assert_eq!(res.code, EXIT_USAGE);
    assert!(err.contains("line 2"), "{err}");
    assert_eq!(run(&["solve", s(&bad)]).0.code, EXIT_USAGE);
    assert_eq!(run(&["solve", "-k", "1", "/nonexistent/x.gr"]).0.code, EXIT_USAGE);
    assert_eq!(run(&["frobnicate"]).0.code, EXIT_USAGE);
}

#[test]
fn gen_then_solve_and_bench() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("planted.gr");
    let (res, _, _) = run(&[
        "gen", "--family", "planted_yes", "--n", "40", "--k", "2", "--seed", "3", "-o", s(&out),
    ]);
    assert_eq!(res.code, EXIT_YES);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.contains("c planted"));
    assert_eq!(run(&["solve", "-k", "2", "--kernelize-first", s(&out)]).0.code, EXIT_YES);

    let spec = file(
        &dir,
        "spec.json",
        r#"[{"family":"disjoint_triangles","k":2,"seed":1},{"family":"random_gnm","n":10,"m":14,"k":2,"seed":7}]"#,
    );
    let csv_path = dir.path().join("bench.csv");
    let (res, _, err) = run(&["bench", "--spec", s(&spec), "-o", s(&csv_path)]);
    assert_eq!(res.code, EXIT_YES, "{err}");
    let mut reader = csv::Reader::from_path(&csv_path).unwrap();
    let headers = reader.headers().unwrap().clone();
    assert_eq!(&headers[0], "family");
    assert!(headers.iter().any(|h| h == "rule6_count"));
    assert_eq!(reader.records().count(), 2);
}
