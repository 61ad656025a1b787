//! Bounded search tree for pathwidth-one vertex deletion.
//!
//! Every graph of pathwidth greater than one contains a triangle, a 4-cycle
//! or a `T2`, and one of its at most seven vertices must be deleted. Branching
//! on those vertices gives a tree of depth at most `k` and fan-out at most 7.
//! Once no obstruction remains, each component is a caterpillar or a cycle
//! with hairs, and each of the latter costs exactly one deletion.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError, VertexId};
use crate::kernel::{edge_bound_check, Instance};
use crate::recognition::{
    classify_component, find_obstruction, is_pathwidth_at_most_one, ComponentKind,
};

/// A deletion set, plus whether it was checked against the graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Solution {
    pub deleted: Vec<VertexId>,
    pub verified: bool,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub max_depth: usize,
    pub base_cases: u64,
    pub max_branching: usize,
}

impl SearchStats {
    /// Largest node count a search of budget `k` may visit: `sum 7^d, d <= k`.
    pub fn node_limit(k: usize) -> u128 {
        (0..=k as u32).map(|d| 7u128.pow(d)).sum()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("base case reached on a graph that still contains an obstruction")]
    PreconditionViolated,
}

/// `true` iff `g - s` has pathwidth at most one.
pub fn verify_solution(g: &Graph, s: &[VertexId]) -> Result<bool, GraphError> {
    let drop: BTreeSet<VertexId> = s.iter().copied().collect();
    for &v in &drop {
        if !g.contains(v) {
            return Err(GraphError::UnknownVertex(v));
        }
    }
    let keep: Vec<VertexId> = g.vertices().filter(|v| !drop.contains(v)).collect();
    Ok(is_pathwidth_at_most_one(&g.induced_subgraph(&keep)?))
}

/// Solves an obstruction-free graph: one deletion per cyclic component (its
/// lowest cycle vertex).
pub fn base_case_solve(g: &Graph, k: usize) -> Result<Option<Solution>, SolverError> {
    let mut deleted = Vec::new();
    for c in g.connected_components() {
        match classify_component(g, &c) {
            ComponentKind::CaterpillarTree => {}
            ComponentKind::CycleWithHairs(cycle) => {
                let pick = *cycle.iter().min().expect("non-empty cycle");
                debug_assert!({
                    let sub = g.induced_subgraph(c.members.iter().filter(|&&v| v != pick));
                    sub.map(|s| is_pathwidth_at_most_one(&s)).unwrap_or(false)
                });
                deleted.push(pick);
            }
            ComponentKind::Other => return Err(SolverError::PreconditionViolated),
        }
    }
    if deleted.len() > k {
        return Ok(None);
    }
    Ok(Some(Solution {
        deleted,
        verified: false,
    }))
}

struct Search {
    stats: SearchStats,
}

impl Search {
    fn run(&mut self, g: &mut Graph, k: usize, depth: usize) -> Option<Vec<VertexId>> {
        self.stats.nodes_visited += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);
        let Some(ob) = find_obstruction(g) else {
            self.stats.base_cases += 1;
            return base_case_solve(g, k)
                .expect("obstruction-free graph")
                .map(|s| s.deleted);
        };
        if k == 0 {
            return None;
        }
        let mut branch: Vec<VertexId> = ob.vertices;
        branch.sort_unstable();
        self.stats.max_branching = self.stats.max_branching.max(branch.len());
        for v in branch {
            let mut child = g.clone();
            child.remove_vertex(v).expect("obstruction vertex is live");
            if let Some(mut s) = self.run(&mut child, k - 1, depth + 1) {
                s.push(v);
                return Some(s);
            }
        }
        None
    }
}

/// Decides the instance, returning a verified deletion set of size at most
/// `k` when one exists. Branches are explored in ascending vertex id and the
/// first success is returned, so the set need not be minimum.
pub fn solve(inst: &Instance) -> (Option<Solution>, SearchStats) {
    if !edge_bound_check(inst) {
        return (None, SearchStats::default());
    }
    let mut search = Search {
        stats: SearchStats::default(),
    };
    let mut g = inst.graph.clone();
    let found = search.run(&mut g, inst.k, 0);
    let stats = search.stats;
    let solution = found.map(|mut deleted| {
        deleted.sort_unstable();
        let verified = verify_solution(&inst.graph, &deleted).expect("ids come from the graph");
        assert!(verified, "search produced an invalid deletion set");
        Solution { deleted, verified }
    });
    (solution, stats)
}
