//! Simple undirected graphs with stable vertex identities.
//!
//! Deleted vertices leave a tombstone behind; their ids are never handed out
//! again, so a vertex id recorded anywhere (a kernel trace, a witness) keeps
//! meaning the same vertex for the lifetime of the graph.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Opaque, stable identifier of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub u32);

impl VertexId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for VertexId {
    fn from(v: u32) -> Self {
        VertexId(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("unknown vertex {0}")]
    UnknownVertex(VertexId),
    #[error("no edge between {0} and {1}")]
    NoSuchEdge(VertexId, VertexId),
}

/// Outcome of [`Graph::contract_edge`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ContractReport {
    /// Id of the vertex that absorbed the contracted edge.
    pub merged: VertexId,
    /// Number of common neighbours whose parallel edges were collapsed.
    pub collapsed: usize,
}

impl ContractReport {
    pub fn collapsed_parallel(&self) -> bool {
        self.collapsed > 0
    }
}

/// Vertex set of one connected component, sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub members: Vec<VertexId>,
}

impl Component {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn smallest(&self) -> Option<VertexId> {
        self.members.first().copied()
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    // `None` marks a deleted (tombstoned) id.
    adj: Vec<Option<BTreeSet<VertexId>>>,
    n: usize,
    m: usize,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Graph with live vertices `0..n` and no edges.
    pub fn with_vertices(n: usize) -> Self {
        Graph {
            adj: vec![Some(BTreeSet::new()); n],
            n,
            m: 0,
        }
    }

    /// Builds a graph on `0..n` from an edge list. Panics on invalid edges;
    /// meant for fixtures and generators.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(VertexId(u), VertexId(v))
                .expect("invalid edge in fixture");
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// One past the largest id ever allocated; dense per-vertex scratch
    /// arrays are sized by this.
    pub fn id_bound(&self) -> usize {
        self.adj.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        matches!(self.adj.get(v.index()), Some(Some(_)))
    }

    fn adjacency(&self, v: VertexId) -> Result<&BTreeSet<VertexId>, GraphError> {
        self.adj
            .get(v.index())
            .and_then(Option::as_ref)
            .ok_or(GraphError::UnknownVertex(v))
    }

    /// Live vertices in ascending id order.
    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj
            .iter()
            .enumerate()
            .filter(|(_, a)| a.is_some())
            .map(|(i, _)| VertexId(i as u32))
    }

    /// Neighbours of `v` in ascending order. Panics if `v` is not live.
    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.adjacency(v)
            .unwrap_or_else(|_| panic!("vertex {v} is not live"))
            .iter()
            .copied()
    }

    pub fn neighbor_set(&self, v: VertexId) -> &BTreeSet<VertexId> {
        self.adjacency(v)
            .unwrap_or_else(|_| panic!("vertex {v} is not live"))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbor_set(v).len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency(u).map(|a| a.contains(&v)).unwrap_or(false)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = VertexId(self.adj.len() as u32);
        self.adj.push(Some(BTreeSet::new()));
        self.n += 1;
        id
    }

    /// Inserts the edge `{u, v}`. Returns `Ok(false)` if it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adjacency(u)?;
        self.adjacency(v)?;
        let fresh = self.adj_mut(u).insert(v);
        if fresh {
            self.adj_mut(v).insert(u);
            self.m += 1;
        }
        self.debug_validate();
        Ok(fresh)
    }

    fn adj_mut(&mut self, v: VertexId) -> &mut BTreeSet<VertexId> {
        self.adj[v.index()].as_mut().expect("live vertex")
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> Result<(), GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        self.adj_mut(u).remove(&v);
        self.adj_mut(v).remove(&u);
        self.m -= 1;
        Ok(())
    }

    /// Deletes `u` together with its incident edges. The id is tombstoned.
    pub fn remove_vertex(&mut self, u: VertexId) -> Result<(), GraphError> {
        self.adjacency(u)?;
        let nbrs = self.adj[u.index()].take().expect("checked above");
        for w in &nbrs {
            self.adj_mut(*w).remove(&u);
        }
        self.m -= nbrs.len();
        self.n -= 1;
        self.debug_validate();
        Ok(())
    }

    /// Contracts the edge `{u, v}` into `v`: `u` disappears and each of its
    /// other neighbours becomes adjacent to `v`. Neighbours shared by `u` and
    /// `v` would yield parallel edges; the graph stays simple and the count of
    /// such collapses is reported instead.
    pub fn contract_edge(&mut self, u: VertexId, v: VertexId) -> Result<ContractReport, GraphError> {
        if !self.has_edge(u, v) {
            return Err(GraphError::NoSuchEdge(u, v));
        }
        let nbrs = self.adj[u.index()].take().expect("edge endpoint is live");
        self.n -= 1;
        self.m -= nbrs.len();
        let mut collapsed = 0;
        for w in nbrs {
            self.adj_mut(w).remove(&u);
            if w == v {
                continue;
            }
            if self.adj_mut(v).insert(w) {
                self.adj_mut(w).insert(v);
                self.m += 1;
            } else {
                collapsed += 1;
            }
        }
        self.debug_validate();
        Ok(ContractReport {
            merged: v,
            collapsed,
        })
    }

    /// Connected components ordered by smallest member.
    pub fn connected_components(&self) -> Vec<Component> {
        let mut seen = vec![false; self.id_bound()];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if seen[s.index()] {
                continue;
            }
            seen[s.index()] = true;
            queue.push_back(s);
            let mut members = Vec::new();
            while let Some(x) = queue.pop_front() {
                members.push(x);
                for y in self.neighbors(x) {
                    if !seen[y.index()] {
                        seen[y.index()] = true;
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(Component { members });
        }
        out
    }

    /// Subgraph induced by `keep`, with ids preserved.
    pub fn induced_subgraph<'a, I>(&self, keep: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let mut inside = vec![false; self.id_bound()];
        for &v in keep {
            self.adjacency(v)?;
            inside[v.index()] = true;
        }
        let mut adj: Vec<Option<BTreeSet<VertexId>>> = vec![None; self.id_bound()];
        let mut n = 0;
        let mut degree_sum = 0;
        for v in self.vertices().filter(|v| inside[v.index()]) {
            let set: BTreeSet<VertexId> = self
                .neighbors(v)
                .filter(|w| inside[w.index()])
                .collect();
            degree_sum += set.len();
            n += 1;
            adj[v.index()] = Some(set);
        }
        let g = Graph {
            adj,
            n,
            m: degree_sum / 2,
        };
        g.debug_validate();
        Ok(g)
    }

    /// Same live ids, no edges.
    pub fn edgeless_copy(&self) -> Graph {
        Graph {
            adj: self
                .adj
                .iter()
                .map(|a| a.as_ref().map(|_| BTreeSet::new()))
                .collect(),
            n: self.n,
            m: 0,
        }
    }

    /// Number of common neighbours of `u` and `v`.
    pub fn common_neighbors(&self, u: VertexId, v: VertexId) -> usize {
        let (a, b) = (self.neighbor_set(u), self.neighbor_set(v));
        let (small, large) = if a.len() <= b.len() { (a, b) } else { (b, a) };
        small.iter().filter(|w| large.contains(w)).count()
    }

    /// Removes every vertex of `drop` (ids must be live).
    pub fn without<'a, I>(&self, drop: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let mut g = self.clone();
        for &v in drop {
            g.remove_vertex(v)?;
        }
        Ok(g)
    }

    /// Checks simplicity, symmetry and the cached counts.
    pub fn validate(&self) -> bool {
        let mut n = 0;
        let mut degree_sum = 0;
        for (i, a) in self.adj.iter().enumerate() {
            let Some(a) = a else { continue };
            n += 1;
            degree_sum += a.len();
            let v = VertexId(i as u32);
            for &w in a {
                if w == v || !self.has_edge(w, v) {
                    return false;
                }
            }
        }
        n == self.n && degree_sum == 2 * self.m
    }

    #[inline]
    fn debug_validate(&self) {
        #[cfg(debug_assertions)]
        if self.n <= 64 {
            debug_assert!(self.validate(), "graph invariants violated");
        }
    }
}
