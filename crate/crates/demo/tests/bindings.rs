use povd_demo::{analyze, kernelize_graph, solve};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

const T2: &str = "p edge 7 6\ne 1 2\ne 1 3\ne 1 4\ne 2 5\ne 3 6\ne 4 7\n";

#[test]
fn analyze_reports_obstruction() {
    let v = parse(analyze(T2));
    assert_eq!(v["n"], 7);
    assert_eq!(v["pathwidth_at_most_one"], false);
    assert_eq!(v["obstruction"]["kind"], "T2");
    assert_eq!(v["obstruction"]["vertices"][0], 1);
    assert_eq!(v["edges"].as_array().unwrap().len(), 6);

    let c6 = "p edge 7 7\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\ne 1 7\n";
    let v = parse(analyze(c6));
    assert!(v["obstruction"].is_null());
    assert_eq!(v["components"][0]["shape"], "cycle_with_hairs");
}

#[test]
fn kernelize_keeps_input_labels() {
    // triangle plus a separate path: the path is removed, the triangle stays
    let g = "p edge 6 5\ne 1 2\ne 2 3\ne 1 3\ne 4 5\ne 5 6\n";
    let v = parse(kernelize_graph(g, 1));
    assert_eq!(v["verdict"], "reduced");
    assert_eq!(v["kernel"]["vertices"], serde_json::json!([1, 2, 3]));
    assert_eq!(v["trace"][0]["rule"], 1);
    assert_eq!(v["trace"][0]["vertices"], serde_json::json!([4, 5, 6]));
}

#[test]
fn solve_and_errors() {
    let v = parse(solve(T2, 1, true));
    assert_eq!(v["verdict"], "yes");
    assert_eq!(v["witness"], serde_json::json!([1]));
    assert_eq!(parse(solve(T2, 0, false))["verdict"], "no");
    assert!(parse(solve("e 1 2", 1, false))["error"].is_string());
    assert!(parse(solve(T2, 40, false))["error"].is_string());
}
