//! Browser bindings. Each export takes graph text in the `p edge` format and
//! returns a JSON string; failures come back as `{"error": "..."}`.
//! Vertices in the JSON are 1-indexed, as in the input.

use povd::cli::parse_graph;
use povd::graph::{Graph, VertexId};
use povd::recognition::{classify_component, find_obstruction, is_pathwidth_at_most_one, ComponentKind};
use povd::workbench::{run_pipeline, Pipeline};
use povd::{kernelize, Instance, KernelVerdict};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest budget the page will search with; the search grows like `7^k`.
pub const MAX_K: usize = 6;
pub const MAX_N: usize = 2000;

fn label(v: VertexId) -> u64 {
    v.0 as u64 + 1
}

fn labels(vs: &[VertexId]) -> Vec<u64> {
    vs.iter().map(|&v| label(v)).collect()
}

fn edges(g: &Graph) -> Vec<[u64; 2]> {
    g.edges().map(|(a, b)| [label(a), label(b)]).collect()
}

fn load(text: &str) -> Result<Graph, String> {
    let g = parse_graph(text).map_err(|e| e.to_string())?.graph;
    if g.n() > MAX_N {
        return Err(format!("the demo accepts at most {MAX_N} vertices"));
    }
    Ok(g)
}

fn check_k(k: usize) -> Result<(), String> {
    if k > MAX_K {
        return Err(format!("the demo searches with k <= {MAX_K}"));
    }
    Ok(())
}

/// Whole-graph view: vertices, edges, pathwidth-one test, first obstruction
/// and per-component shape.
pub fn analyze_value(text: &str) -> Result<Value, String> {
    let g = load(text)?;
    let obstruction = find_obstruction(&g);
    let components: Vec<Value> = g
        .connected_components()
        .iter()
        .map(|c| {
            let shape = if obstruction.is_some() {
                let sub = g.induced_subgraph(&c.members).expect("live");
                if is_pathwidth_at_most_one(&sub) { "caterpillar" } else { "other" }
            } else {
                match classify_component(&g, c) {
                    ComponentKind::CaterpillarTree => "caterpillar",
                    ComponentKind::CycleWithHairs(_) => "cycle_with_hairs",
                    ComponentKind::Other => "other",
                }
            };
            json!({ "vertices": labels(&c.members), "shape": shape })
        })
        .collect();
    Ok(json!({
        "n": g.n(),
        "m": g.m(),
        "vertices": labels(&g.vertices().collect::<Vec<_>>()),
        "edges": edges(&g),
        "pathwidth_at_most_one": is_pathwidth_at_most_one(&g),
        "obstruction": obstruction.map(|ob| json!({
            "kind": format!("{:?}", ob.kind),
            "vertices": labels(&ob.vertices),
        })),
        "components": components,
    }))
}

/// Runs the reduction rules and reports the kernel plus the rule trace.
pub fn kernelize_value(text: &str, k: usize) -> Result<Value, String> {
    let g = load(text)?;
    let res = kernelize(Instance::new(g, k));
    let verdict = match res.verdict {
        KernelVerdict::Reduced => "reduced",
        KernelVerdict::TrivialYes => "trivial_yes",
        KernelVerdict::TrivialNo => "trivial_no",
    };
    let trace: Vec<Value> = res
        .trace
        .entries
        .iter()
        .map(|e| {
            json!({
                "rule": e.rule,
                "vertices": labels(&e.vertices),
                "k_before": e.k_before,
                "k_after": e.k_after,
                "detail": e.detail,
            })
        })
        .collect();
    // the canonical NO triangle does not share ids with the input
    let kernel = (res.verdict != KernelVerdict::TrivialNo).then(|| {
        json!({
            "vertices": labels(&res.instance.graph.vertices().collect::<Vec<_>>()),
            "edges": edges(&res.instance.graph),
        })
    });
    Ok(json!({
        "verdict": verdict,
        "k": res.instance.k,
        "n": res.instance.graph.n(),
        "m": res.instance.graph.m(),
        "kernel": kernel,
        "trace": trace,
    }))
}

/// Decides the instance and returns a deletion set when one exists.
pub fn solve_value(text: &str, k: usize, kernelize_first: bool) -> Result<Value, String> {
    check_k(k)?;
    let g = load(text)?;
    let pipeline = if kernelize_first {
        Pipeline::KernelizeThenSolve
    } else {
        Pipeline::Solve
    };
    let out = run_pipeline(&Instance::new(g, k), pipeline);
    Ok(json!({
        "verdict": out.verdict.to_string(),
        "witness": out.witness.as_deref().map(labels),
        "stats": {
            "nodes": out.stats.nodes_visited,
            "max_depth": out.stats.max_depth,
            "base_cases": out.stats.base_cases,
        },
    }))
}

fn finish(res: Result<Value, String>) -> String {
    res.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

#[wasm_bindgen]
pub fn analyze(text: &str) -> String {
    finish(analyze_value(text))
}

#[wasm_bindgen(js_name = kernelize)]
pub fn kernelize_graph(text: &str, k: u32) -> String {
    finish(kernelize_value(text, k as usize))
}

#[wasm_bindgen]
pub fn solve(text: &str, k: u32, kernelize_first: bool) -> String {
    finish(solve_value(text, k as usize, kernelize_first))
}
