//! Maximum cardinality matching in general graphs (Edmonds' blossom
//! algorithm), and the auxiliary graph used by the matching-based deletion
//! rule.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{Graph, GraphError, VertexId};

/// A set of vertex-disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Matching {
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Matching {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges exist in `g` and no two share an endpoint.
    pub fn validate(&self, g: &Graph) -> bool {
        let mut used = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| g.has_edge(u, v) && used.insert(u) && used.insert(v))
    }
}

const NONE: usize = usize::MAX;

/// Dense-index state of one blossom search.
struct Blossom<'a> {
    adj: &'a [Vec<usize>],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_tree: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [Vec<usize>]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_tree: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let m = self.mate[v];
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    fn contract(&mut self, v: usize, u: usize) {
        let b = self.lowest_common_base(v, u);
        self.in_blossom.iter_mut().for_each(|x| *x = false);
        self.mark_path(v, b, u);
        self.mark_path(u, b, v);
        for i in 0..self.adj.len() {
            if self.in_blossom[self.base[i]] {
                self.base[i] = b;
                if !self.in_tree[i] {
                    self.in_tree[i] = true;
                    self.queue.push_back(i);
                }
            }
        }
    }

    /// Grows an alternating tree from the free vertex `root`; returns the free
    /// vertex ending an augmenting path, if one exists.
    fn search(&mut self, root: usize) -> Option<usize> {
        self.parent.iter_mut().for_each(|p| *p = NONE);
        self.in_tree.iter_mut().for_each(|x| *x = false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_tree[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in 0..self.adj[v].len() {
                let u = self.adj[v][idx];
                if self.base[v] == self.base[u] || self.mate[v] == u {
                    continue;
                }
                if u == root || (self.mate[u] != NONE && self.parent[self.mate[u]] != NONE) {
                    // odd cycle: shrink it
                    self.contract(v, u);
                } else if self.parent[u] == NONE {
                    self.parent[u] = v;
                    if self.mate[u] == NONE {
                        return Some(u);
                    }
                    let w = self.mate[u];
                    self.in_tree[w] = true;
                    self.queue.push_back(w);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut u: usize) {
        while u != NONE {
            let pv = self.parent[u];
            let next = self.mate[pv];
            self.mate[u] = pv;
            self.mate[pv] = u;
            u = next;
        }
    }

    fn run(mut self) -> Vec<usize> {
        for root in 0..self.adj.len() {
            if self.mate[root] == NONE {
                if let Some(end) = self.search(root) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// Maximum-cardinality matching. Free vertices are tried as search roots in
/// ascending id order, so the result is deterministic.
pub fn maximum_matching(g: &Graph) -> Matching {
    let ids: Vec<VertexId> = g.vertices().collect();
    let mut dense = vec![NONE; g.id_bound()];
    for (i, v) in ids.iter().enumerate() {
        dense[v.index()] = i;
    }
    let adj: Vec<Vec<usize>> = ids
        .iter()
        .map(|&v| g.neighbors(v).map(|w| dense[w.index()]).collect())
        .collect();
    let mate = Blossom::new(&adj).run();
    let edges = mate
        .iter()
        .enumerate()
        .filter(|&(i, &j)| j != NONE && i < j)
        .map(|(i, &j)| (ids[i], ids[j]))
        .collect();
    Matching { edges }
}

/// Graph on `A ∪ B` with `A = N(u)` and `B = N(A) \ ({u} ∪ A)`, keeping every
/// edge of `g` inside `A ∪ B` except those with both ends in `B`. Its maximum
/// matching is the largest matching of `g` that avoids `u` and has an end in
/// `N(u)` on every edge.
pub fn rule4_auxiliary_graph(g: &Graph, u: VertexId) -> Result<Graph, GraphError> {
    if !g.contains(u) {
        return Err(GraphError::UnknownVertex(u));
    }
    let a: Vec<VertexId> = g.neighbors(u).collect();
    let mut keep: BTreeSet<VertexId> = a.iter().copied().collect();
    for &x in &a {
        keep.extend(g.neighbors(x).filter(|&w| w != u));
    }
    let mut aux = g.induced_subgraph(&keep)?;
    let in_a = |v: VertexId| g.has_edge(u, v);
    let inner: Vec<(VertexId, VertexId)> = aux
        .edges()
        .filter(|&(x, y)| !in_a(x) && !in_a(y))
        .collect();
    for (x, y) in inner {
        aux.remove_edge(x, y)?;
    }
    Ok(aux)
}
