//! Polynomial-time data reduction to an instance with `O(k^4)` vertices.
//!
//! Six rules are applied to a global fixpoint:
//!
//! 1. drop a component that already has pathwidth at most one;
//! 2. keep only one of several pendant neighbours of a vertex;
//! 3. drop a vertex `u` whose every pair of neighbours has at least `k + 2`
//!    further common neighbours;
//! 4. take `u` into the solution if a matching of size `k + 3` avoids `u` and
//!    has an endpoint in `N(u)` on every edge;
//! 5. shorten long degree-two runs on caterpillar spines by contracting one
//!    spine edge;
//! 6. answer NO once the reduced graph exceeds the kernel size bound.
//!
//! Every rule scans vertices in ascending id order and fires on the first
//! match, so kernels and traces are reproducible.

use std::collections::HashMap;

use serde::Serialize;

use crate::graph::{Graph, VertexId};
use crate::matching::{maximum_matching, rule4_auxiliary_graph};
use crate::recognition::is_pathwidth_at_most_one;

/// A graph together with a deletion budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
}

impl Instance {
    pub fn new(graph: Graph, k: usize) -> Self {
        Instance { graph, k }
    }

    /// Canonical NO instance: a triangle with budget zero.
    pub fn trivial_no() -> Self {
        Instance {
            graph: Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]),
            k: 0,
        }
    }
}

/// One rule application.
///
/// `vertices` depends on the rule: the removed component (1); the vertex,
/// the kept pendant, then the deleted pendants (2); the deleted vertex (3, 4);
/// the contracted edge as `[absorbed, survivor]` (5); nothing (6).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub rule: u8,
    pub vertices: Vec<VertexId>,
    pub k_before: i64,
    pub k_after: i64,
    pub detail: String,
}

impl TraceEntry {
    /// Rule 4 fired with no budget left: the instance is NO.
    pub fn exhausted_budget(&self) -> bool {
        self.k_after < 0
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct KernelTrace {
    pub entries: Vec<TraceEntry>,
}

impl KernelTrace {
    /// Firings per rule, indexed `rule - 1`.
    pub fn rule_counts(&self) -> [usize; 6] {
        let mut counts = [0; 6];
        for e in &self.entries {
            counts[usize::from(e.rule) - 1] += 1;
        }
        counts
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum KernelVerdict {
    Reduced,
    TrivialYes,
    TrivialNo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub instance: Instance,
    pub trace: KernelTrace,
    pub verdict: KernelVerdict,
}

/// `34k^4 + 120k^3 + 103k^2 + k`: the largest vertex count of a reduced YES
/// instance.
pub fn kernel_size_bound(k: usize) -> u128 {
    let k = k as u128;
    34 * k.pow(4) + 120 * k.pow(3) + 103 * k.pow(2) + k
}

/// `false` when `m > (k + 1)(n - 1)`, which rules out any solution: a
/// pathwidth-one graph is a forest, and each deleted vertex carries at most
/// `n - 1` edges.
pub fn edge_bound_check(inst: &Instance) -> bool {
    let n = inst.graph.n() as u128;
    if n == 0 {
        return true;
    }
    inst.graph.m() as u128 <= (inst.k as u128 + 1) * (n - 1)
}

fn entry(rule: u8, vertices: Vec<VertexId>, k_before: usize, k_after: i64, detail: String) -> TraceEntry {
    TraceEntry {
        rule,
        vertices,
        k_before: k_before as i64,
        k_after,
        detail,
    }
}

/// Rule 1: remove the lowest component of pathwidth at most one.
pub fn apply_rule1(inst: &mut Instance) -> Option<TraceEntry> {
    let g = &inst.graph;
    let comp = g.connected_components().into_iter().find(|c| {
        let sub = g.induced_subgraph(&c.members).expect("component members are live");
        is_pathwidth_at_most_one(&sub)
    })?;
    for &v in &comp.members {
        inst.graph.remove_vertex(v).expect("live");
    }
    let k = inst.k;
    Some(entry(
        1,
        comp.members.clone(),
        k,
        k as i64,
        format!("removed caterpillar component of {} vertices", comp.len()),
    ))
}

/// Rule 2: for the lowest vertex with two or more pendant neighbours, delete
/// all of them but the lowest.
pub fn apply_rule2(inst: &mut Instance) -> Option<TraceEntry> {
    let g = &inst.graph;
    let (u, pendants) = g.vertices().find_map(|u| {
        let pendants: Vec<VertexId> = g.neighbors(u).filter(|&w| g.degree(w) == 1).collect();
        (pendants.len() >= 2).then_some((u, pendants))
    })?;
    for &p in &pendants[1..] {
        inst.graph.remove_vertex(p).expect("live");
    }
    let mut vertices = vec![u];
    vertices.extend(&pendants);
    let k = inst.k;
    Some(entry(
        2,
        vertices,
        k,
        k as i64,
        format!("deleted {} of its pendants", pendants.len() - 1),
    ))
}

/// The graph on the same vertices with an edge `{x, y}` whenever `x` and `y`
/// have at least `k + 3` common neighbours.
pub fn rule3_auxiliary_graph(g: &Graph, k: usize) -> Graph {
    let mut aux = g.edgeless_copy();
    let vs: Vec<VertexId> = g.vertices().collect();
    for (i, &x) in vs.iter().enumerate() {
        for &y in &vs[i + 1..] {
            if g.common_neighbors(x, y) >= k + 3 {
                aux.add_edge(x, y).expect("distinct live vertices");
            }
        }
    }
    aux
}

/// Rule 3 condition checked straight from its statement: every pair of
/// neighbours of `u` has `k + 2` common neighbours besides `u`.
pub fn rule3_qualifies_direct(g: &Graph, u: VertexId, k: usize) -> bool {
    let nbrs: Vec<VertexId> = g.neighbors(u).collect();
    if nbrs.len() < 2 {
        return false;
    }
    nbrs.iter().enumerate().all(|(i, &v)| {
        nbrs[i + 1..].iter().all(|&w| {
            let others = g
                .neighbors(v)
                .filter(|&z| z != u && g.has_edge(z, w))
                .count();
            others >= k + 2
        })
    })
}

/// Rule 3: delete the lowest vertex of degree at least two whose
/// neighbourhood is a clique in [`rule3_auxiliary_graph`].
pub fn apply_rule3(inst: &mut Instance) -> Option<TraceEntry> {
    let g = &inst.graph;
    let k = inst.k;
    let mut aux_edge: HashMap<(VertexId, VertexId), bool> = HashMap::new();
    let mut adjacent_in_aux = |x: VertexId, y: VertexId| {
        let key = if x < y { (x, y) } else { (y, x) };
        *aux_edge
            .entry(key)
            .or_insert_with(|| g.common_neighbors(x, y) >= k + 3)
    };
    let u = g.vertices().find(|&u| {
        let nbrs: Vec<VertexId> = g.neighbors(u).collect();
        if nbrs.len() < 2 || nbrs.iter().any(|&v| g.degree(v) < k + 3) {
            return false;
        }
        nbrs.iter()
            .enumerate()
            .all(|(i, &v)| nbrs[i + 1..].iter().all(|&w| adjacent_in_aux(v, w)))
    })?;
    let degree = g.degree(u);
    inst.graph.remove_vertex(u).expect("live");
    Some(entry(
        3,
        vec![u],
        k,
        k as i64,
        format!("all {degree} neighbours pairwise share {} others", k + 2),
    ))
}

/// Rule 4: delete the lowest vertex `u` admitting a matching of size `k + 3`
/// that avoids `u` and touches `N(u)` on every edge, and spend one unit of
/// budget. At `k = 0` the entry reports `k_after = -1`.
pub fn apply_rule4(inst: &mut Instance) -> Option<TraceEntry> {
    let g = &inst.graph;
    let k = inst.k;
    // every matching edge has its own endpoint in N(u)
    let (u, size) = g.vertices().filter(|&u| g.degree(u) >= k + 3).find_map(|u| {
        let aux = rule4_auxiliary_graph(g, u).expect("live");
        let size = maximum_matching(&aux).len();
        (size >= k + 3).then_some((u, size))
    })?;
    inst.graph.remove_vertex(u).expect("live");
    let k_after = k as i64 - 1;
    if k > 0 {
        inst.k -= 1;
    }
    Some(entry(
        4,
        vec![u],
        k,
        k_after,
        format!("matching of size {size} around its neighbourhood"),
    ))
}

/// A contractible spine run `x, v1..v5, y` (see [`apply_rule5`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineRun {
    pub x: VertexId,
    pub run: [VertexId; 5],
    pub y: VertexId,
}

/// Finds the lexicographically least run `v1..v5` of vertices that have
/// degree two once the pendant vertices of `g` are stripped, whose outer
/// neighbours `x` and `y` make seven distinct, non-adjacent-ends vertices.
pub fn find_spine_run(g: &Graph) -> Option<SpineRun> {
    let in_core = |v: VertexId| g.degree(v) != 1;
    let core_nbrs = |v: VertexId| -> Vec<VertexId> { g.neighbors(v).filter(|&w| in_core(w)).collect() };
    let core_deg2 = |v: VertexId| in_core(v) && g.neighbors(v).filter(|&w| in_core(w)).count() == 2;

    for v1 in g.vertices().filter(|&v| core_deg2(v)) {
        let ends = core_nbrs(v1);
        for (dir, &v2) in ends.iter().enumerate() {
            let x = ends[1 - dir];
            let mut run = [v1, v2, v2, v2, v2];
            let mut ok = true;
            for i in 1..5 {
                if !core_deg2(run[i]) {
                    ok = false;
                    break;
                }
                if i < 4 {
                    let nb = core_nbrs(run[i]);
                    run[i + 1] = if nb[0] == run[i - 1] { nb[1] } else { nb[0] };
                }
            }
            if !ok {
                continue;
            }
            let nb = core_nbrs(run[4]);
            let y = if nb[0] == run[3] { nb[1] } else { nb[0] };
            let mut all = vec![x, y];
            all.extend_from_slice(&run);
            all.sort_unstable();
            all.dedup();
            if all.len() == 7 && !g.has_edge(x, y) {
                return Some(SpineRun { x, run, y });
            }
        }
    }
    None
}

/// Rule 5: contract `(v2, v3)` of the least [`SpineRun`]. `v3` survives.
pub fn apply_rule5(inst: &mut Instance) -> Option<TraceEntry> {
    let SpineRun { run, .. } = find_spine_run(&inst.graph)?;
    let report = inst
        .graph
        .contract_edge(run[1], run[2])
        .expect("spine edge exists");
    assert!(
        !report.collapsed_parallel(),
        "spine contraction merged parallel edges"
    );
    let k = inst.k;
    Some(entry(
        5,
        vec![run[1], run[2]],
        k,
        k as i64,
        "contracted the second edge of a run of five spine vertices".into(),
    ))
}

/// Rule 6: too many vertices left for a YES instance.
pub fn apply_rule6(inst: &mut Instance) -> Option<TraceEntry> {
    let bound = kernel_size_bound(inst.k);
    let n = inst.graph.n();
    if n as u128 <= bound {
        return None;
    }
    let k = inst.k;
    *inst = Instance::trivial_no();
    Some(entry(6, Vec::new(), k, 0, format!("n = {n} exceeds bound {bound}")))
}

type Rule = fn(&mut Instance) -> Option<TraceEntry>;

const RULES: [Rule; 5] = [apply_rule1, apply_rule2, apply_rule3, apply_rule4, apply_rule5];

/// Runs the rules to a fixpoint. Each rule is applied until it stops firing;
/// after any firing the pass restarts from rule 1. Rule 6 is only consulted
/// once rules 1 to 5 are all quiet.
pub fn kernelize(inst: Instance) -> KernelResult {
    let mut inst = inst;
    let mut trace = KernelTrace::default();
    'pass: loop {
        // rerun after every firing: deletions can tip the edge count over
        if !edge_bound_check(&inst) {
            return KernelResult {
                instance: Instance::trivial_no(),
                trace,
                verdict: KernelVerdict::TrivialNo,
            };
        }
        if inst.graph.is_empty() {
            return KernelResult {
                instance: inst,
                trace,
                verdict: KernelVerdict::TrivialYes,
            };
        }
        for rule in RULES {
            let mut fired = false;
            while let Some(e) = rule(&mut inst) {
                let exhausted = e.exhausted_budget();
                trace.entries.push(e);
                if exhausted {
                    return KernelResult {
                        instance: Instance::trivial_no(),
                        trace,
                        verdict: KernelVerdict::TrivialNo,
                    };
                }
                fired = true;
            }
            if fired {
                continue 'pass;
            }
        }
        if let Some(e) = apply_rule6(&mut inst) {
            trace.entries.push(e);
            return KernelResult {
                instance: inst,
                trace,
                verdict: KernelVerdict::TrivialNo,
            };
        }
        return KernelResult {
            instance: inst,
            trace,
            verdict: KernelVerdict::Reduced,
        };
    }
}

/// Maps a deletion set of the kernel back to one of the original graph,
/// undoing the trace from last to first. The size grows by exactly the
/// number of rule 4 firings.
pub fn lift_solution(trace: &KernelTrace, kernel_solution: &[VertexId]) -> Vec<VertexId> {
    let mut s: Vec<VertexId> = kernel_solution.to_vec();
    for e in trace.entries.iter().rev() {
        match e.rule {
            2 => {
                let (u, kept) = (e.vertices[0], e.vertices[1]);
                if let Some(pos) = s.iter().position(|&w| w == kept) {
                    s.swap_remove(pos);
                    if !s.contains(&u) {
                        s.push(u);
                    }
                }
            }
            4 => s.push(e.vertices[0]),
            // 1 and 3 only delete vertices no solution needs; 5 keeps the
            // survivor's id and either endpoint of the contracted edge serves
            _ => {}
        }
    }
    s.sort_unstable();
    s
}
