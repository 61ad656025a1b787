//! Independent brute-force checks and corpora shared by the integration tests.
#![allow(dead_code)]

use povd::graph::{Graph, VertexId};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn v(i: u32) -> VertexId {
    VertexId(i)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn cycle(n: u32) -> Graph {
    let edges: Vec<(u32, u32)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n as usize, &edges)
}

pub fn disjoint_cycles(count: u32, len: u32) -> Graph {
    let mut edges = Vec::new();
    for c in 0..count {
        let b = c * len;
        edges.extend((0..len).map(|i| (b + i, b + (i + 1) % len)));
    }
    Graph::from_edges((count * len) as usize, &edges)
}

pub fn path(n: u32) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n as usize, &edges)
}

pub fn complete(n: u32) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            edges.push((i, j));
        }
    }
    Graph::from_edges(n as usize, &edges)
}

pub fn t2() -> Graph {
    Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
}

pub fn binary_tree(height: u32) -> Graph {
    let n = (1u32 << (height + 1)) - 1;
    let edges: Vec<(u32, u32)> = (1..n).map(|i| ((i - 1) / 2, i)).collect();
    Graph::from_edges(n as usize, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    Graph::from_edges(10, &edges)
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: u32) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(u32, u32)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << pairs.len();
    (0..total).map(move |mask| {
        let edges: Vec<(u32, u32)> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n as usize, &edges)
    })
}

/// G(n, p).
pub fn random_graph(rng: &mut ChaCha8Rng, n: u32, p: f64) -> Graph {
    let mut g = Graph::with_vertices(n as usize);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(v(i), v(j)).unwrap();
            }
        }
    }
    g
}

/// Acyclicity by union-find over the edge list.
pub fn is_forest(g: &Graph) -> bool {
    let mut parent: Vec<usize> = (0..g.id_bound()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, b) in g.edges() {
        let (ra, rb) = (find(&mut parent, a.index()), find(&mut parent, b.index()));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// `T2` embedding search: centre, three distinct neighbours, and a private
/// further neighbour for each, all seven distinct. No size limit.
pub fn has_t2_embedding(g: &Graph) -> bool {
    let vs: Vec<VertexId> = g.vertices().collect();
    for &c in &vs {
        let nb: Vec<VertexId> = g.neighbors(c).collect();
        for a in 0..nb.len() {
            for b in a + 1..nb.len() {
                for d in b + 1..nb.len() {
                    let mids = [nb[a], nb[b], nb[d]];
                    let opts: Vec<Vec<VertexId>> = mids
                        .iter()
                        .map(|&m| {
                            g.neighbors(m)
                                .filter(|&w| w != c && !mids.contains(&w))
                                .collect()
                        })
                        .collect();
                    for &x in &opts[0] {
                        for &y in &opts[1] {
                            for &z in &opts[2] {
                                if x != y && y != z && x != z {
                                    return true;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    false
}

/// Girth by enumerating simple cycles from their smallest vertex.
pub fn brute_girth(g: &Graph) -> Option<usize> {
    fn extend(g: &Graph, start: VertexId, path: &mut Vec<VertexId>, best: &mut Option<usize>) {
        let last = *path.last().unwrap();
        for w in g.neighbors(last) {
            if w == start && path.len() >= 3 {
                let len = path.len();
                if best.is_none_or(|b| len < b) {
                    *best = Some(len);
                }
            } else if w > start && !path.contains(&w) {
                path.push(w);
                extend(g, start, path, best);
                path.pop();
            }
        }
    }
    let mut best = None;
    for s in g.vertices() {
        extend(g, s, &mut vec![s], &mut best);
    }
    best
}

/// Largest matching by exhaustive branching on the lowest remaining edge.
pub fn brute_max_matching(g: &Graph) -> usize {
    fn go(edges: &[(VertexId, VertexId)], used: &mut Vec<VertexId>) -> usize {
        let Some((i, &(a, b))) = edges
            .iter()
            .enumerate()
            .find(|(_, (a, b))| !used.contains(a) && !used.contains(b))
        else {
            return 0;
        };
        let rest = &edges[i + 1..];
        let skip = go(rest, used);
        used.push(a);
        used.push(b);
        let take = 1 + go(rest, used);
        used.truncate(used.len() - 2);
        skip.max(take)
    }
    let edges: Vec<(VertexId, VertexId)> = g.edges().collect();
    go(&edges, &mut Vec::new())
}

/// Largest matching of `g` that avoids `u` and has an endpoint in `N(u)` on
/// every edge, straight from the definition.
pub fn brute_rule4_matching(g: &Graph, u: VertexId) -> usize {
    let allowed: Vec<(VertexId, VertexId)> = g
        .edges()
        .filter(|&(a, b)| a != u && b != u && (g.has_edge(u, a) || g.has_edge(u, b)))
        .collect();
    let mut h = g.edgeless_copy();
    for (a, b) in allowed {
        h.add_edge(a, b).unwrap();
    }
    brute_max_matching(&h)
}
