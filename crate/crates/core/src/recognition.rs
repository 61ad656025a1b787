//! Recognition of pathwidth-one graphs and of the obstructions `K3`, `C4`
//! and `T2`.
//!
//! A graph has pathwidth at most one exactly when every component is a
//! caterpillar. A graph free of the three obstructions is a disjoint union of
//! trees and cycles carrying pendant "hairs"; the solver's base case relies on
//! that shape.

use std::collections::VecDeque;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Component, Graph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ObstructionKind {
    Triangle,
    FourCycle,
    T2,
}

/// A located forbidden subgraph.
///
/// For cycles the vertices are listed in cycle order. For a `T2` the order is
/// centre, the three middle vertices, then the three leaves (leaf `i` hangs
/// off middle `i`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub vertices: Vec<VertexId>,
}

impl Obstruction {
    /// Checks the obstruction is present in `g` as a subgraph.
    pub fn validate(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let mut sorted = vs.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != vs.len() || !vs.iter().all(|&v| g.contains(v)) {
            return false;
        }
        match self.kind {
            ObstructionKind::Triangle | ObstructionKind::FourCycle => {
                let len = if self.kind == ObstructionKind::Triangle { 3 } else { 4 };
                vs.len() == len && (0..len).all(|i| g.has_edge(vs[i], vs[(i + 1) % len]))
            }
            ObstructionKind::T2 => {
                vs.len() == 7
                    && (1..=3).all(|i| g.has_edge(vs[0], vs[i]) && g.has_edge(vs[i], vs[i + 3]))
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ComponentKind {
    CaterpillarTree,
    /// The unique cycle, in walk order starting from its smallest id.
    CycleWithHairs(Vec<VertexId>),
    /// The component violates the obstruction-free precondition.
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("T2 search requires a triangle- and C4-free graph (violated near vertex {0})")]
    PreconditionViolated(VertexId),
}

/// Caterpillar check on a single connected component: acyclic, and removing
/// its leaves once leaves a path (or nothing).
fn component_is_caterpillar(g: &Graph, members: &[VertexId]) -> bool {
    let degree_sum: usize = members.iter().map(|&v| g.degree(v)).sum();
    if degree_sum / 2 + 1 != members.len() {
        return false;
    }
    members
        .iter()
        .filter(|&&v| g.degree(v) >= 2)
        .all(|&v| g.neighbors(v).filter(|&w| g.degree(w) >= 2).count() <= 2)
}

pub fn is_pathwidth_at_most_one(g: &Graph) -> bool {
    // a forest has at most n - 1 edges
    if g.m() >= g.n().max(1) {
        return false;
    }
    g.connected_components()
        .iter()
        .all(|c| component_is_caterpillar(g, &c.members))
}

/// BFS scratch state, reused across sources.
struct Bfs {
    dist: Vec<u32>,
    parent: Vec<Option<VertexId>>,
    touched: Vec<VertexId>,
}

impl Bfs {
    fn new(bound: usize) -> Self {
        Bfs {
            dist: vec![u32::MAX; bound],
            parent: vec![None; bound],
            touched: Vec::new(),
        }
    }

    fn reset(&mut self) {
        for v in self.touched.drain(..) {
            self.dist[v.index()] = u32::MAX;
            self.parent[v.index()] = None;
        }
    }

    fn path_to_root(&self, mut v: VertexId) -> Vec<VertexId> {
        let mut path = vec![v];
        while let Some(p) = self.parent[v.index()] {
            path.push(p);
            v = p;
        }
        path
    }

    /// Simple cycle closed by the non-tree edge `(x, y)`: tree path up to the
    /// lowest common ancestor and back down.
    fn cycle_through(&self, x: VertexId, y: VertexId) -> Vec<VertexId> {
        let px = self.path_to_root(x);
        let py = self.path_to_root(y);
        let mut i = px.len();
        let mut j = py.len();
        while i > 0 && j > 0 && px[i - 1] == py[j - 1] {
            i -= 1;
            j -= 1;
        }
        // px[i] == py[j] is the lowest common ancestor
        let mut cycle: Vec<VertexId> = px[..=i].to_vec();
        cycle.reverse();
        cycle.extend(py[..j].iter().copied());
        cycle
    }
}

/// Shortest cycle of length at most `limit`, scanning sources in ascending
/// id order. The first cycle of minimum length wins.
fn shortest_cycle_within(g: &Graph, limit: usize) -> Option<Vec<VertexId>> {
    let mut bfs = Bfs::new(g.id_bound());
    let mut best: Option<Vec<VertexId>> = None;
    let mut queue = VecDeque::new();
    for s in g.vertices() {
        let mut cap = best.as_ref().map_or(limit, |c| c.len() - 1);
        if cap < 3 {
            break;
        }
        bfs.reset();
        bfs.dist[s.index()] = 0;
        bfs.touched.push(s);
        queue.clear();
        queue.push_back(s);
        'search: while let Some(x) = queue.pop_front() {
            let dx = bfs.dist[x.index()] as usize;
            // any cycle found from here has length >= 2 * dx + 1
            if 2 * dx + 1 > cap {
                break;
            }
            for y in g.neighbors(x) {
                if bfs.parent[x.index()] == Some(y) {
                    continue;
                }
                let dy = bfs.dist[y.index()];
                if dy == u32::MAX {
                    bfs.dist[y.index()] = dx as u32 + 1;
                    bfs.parent[y.index()] = Some(x);
                    bfs.touched.push(y);
                    queue.push_back(y);
                } else {
                    let cycle = bfs.cycle_through(x, y);
                    if cycle.len() <= cap
                        && best.as_ref().is_none_or(|b| cycle.len() < b.len())
                    {
                        let done = cycle.len() == 3;
                        cap = cycle.len() - 1;
                        best = Some(cycle);
                        if done {
                            break 'search;
                        }
                    }
                }
            }
        }
        if best.as_ref().is_some_and(|c| c.len() == 3) {
            break;
        }
    }
    best
}

/// A minimum-length cycle, or `None` for a forest.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<VertexId>> {
    shortest_cycle_within(g, usize::MAX)
}

/// Locates a `T2` in a graph that has no triangle and no 4-cycle.
///
/// With those excluded, a vertex `v` centres a `T2` iff at least three of its
/// neighbours have a neighbour other than `v`; legs are picked by lowest id.
pub fn find_t2(g: &Graph) -> Result<Option<Obstruction>, RecognitionError> {
    for centre in g.vertices() {
        if g.degree(centre) < 3 {
            continue;
        }
        let mut legs: Vec<(VertexId, VertexId)> = Vec::with_capacity(3);
        for mid in g.neighbors(centre) {
            let Some(leaf) = g.neighbors(mid).find(|&w| w != centre) else {
                continue;
            };
            if g.has_edge(centre, leaf) {
                return Err(RecognitionError::PreconditionViolated(centre));
            }
            legs.push((mid, leaf));
            if legs.len() == 3 {
                break;
            }
        }
        if legs.len() < 3 {
            continue;
        }
        // distinct leaves: a shared leaf closes a 4-cycle through the centre
        if legs[0].1 == legs[1].1 || legs[0].1 == legs[2].1 || legs[1].1 == legs[2].1 {
            return Err(RecognitionError::PreconditionViolated(centre));
        }
        let mut vertices = vec![centre];
        vertices.extend(legs.iter().map(|l| l.0));
        vertices.extend(legs.iter().map(|l| l.1));
        let ob = Obstruction {
            kind: ObstructionKind::T2,
            vertices,
        };
        debug_assert!(ob.validate(g));
        return Ok(Some(ob));
    }
    Ok(None)
}

/// Finds a triangle, else a 4-cycle, else a `T2`. `None` certifies the graph
/// contains none of the three as a subgraph.
pub fn find_obstruction(g: &Graph) -> Option<Obstruction> {
    if let Some(cycle) = shortest_cycle_within(g, 4) {
        let kind = if cycle.len() == 3 {
            ObstructionKind::Triangle
        } else {
            ObstructionKind::FourCycle
        };
        let ob = Obstruction {
            kind,
            vertices: cycle,
        };
        debug_assert!(ob.validate(g));
        return Some(ob);
    }
    find_t2(g).expect("graph is K3- and C4-free here")
}

/// Shape of a component of an obstruction-free graph.
pub fn classify_component(g: &Graph, c: &Component) -> ComponentKind {
    let members = &c.members;
    let degree_sum: usize = members.iter().map(|&v| g.degree(v)).sum();
    let edges = degree_sum / 2;
    if edges + 1 == members.len() {
        return if component_is_caterpillar(g, members) {
            ComponentKind::CaterpillarTree
        } else {
            ComponentKind::Other
        };
    }
    if edges != members.len() {
        return ComponentKind::Other;
    }
    // unicyclic: strip the hairs once, the rest must be the bare cycle
    let on_cycle: Vec<VertexId> = members.iter().copied().filter(|&v| g.degree(v) >= 2).collect();
    let is_core = |v: VertexId| g.degree(v) >= 2;
    for &v in &on_cycle {
        if g.neighbors(v).filter(|&w| is_core(w)).count() != 2 {
            return ComponentKind::Other;
        }
    }
    for &v in members.iter().filter(|&&v| g.degree(v) < 2) {
        if !g.neighbors(v).all(is_core) {
            return ComponentKind::Other;
        }
    }
    let start = on_cycle[0];
    let mut cycle = vec![start];
    let mut prev = start;
    let mut cur = g.neighbors(start).find(|&w| is_core(w)).expect("cycle vertex");
    while cur != start {
        cycle.push(cur);
        let next = g
            .neighbors(cur)
            .find(|&w| is_core(w) && w != prev)
            .expect("cycle vertex has two cycle neighbours");
        prev = cur;
        cur = next;
    }
    if cycle.len() != on_cycle.len() {
        return ComponentKind::Other;
    }
    ComponentKind::CycleWithHairs(cycle)
}
