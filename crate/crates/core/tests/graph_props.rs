use std::collections::BTreeSet;

use povd::cli::{parse_graph, serialize_graph};
use povd::graph::{Graph, VertexId};
use proptest::prelude::*;

#[derive(Debug, Clone)]
enum Op {
    AddVertex,
    AddEdge(u32, u32),
    RemoveVertex(u32),
    Contract(u32, u32),
}

fn op() -> impl Strategy<Value = Op> {
    prop_oneof![
        1 => Just(Op::AddVertex),
        4 => (0u32..12, 0u32..12).prop_map(|(a, b)| Op::AddEdge(a, b)),
        1 => (0u32..12).prop_map(Op::RemoveVertex),
        2 => (0u32..12, 0u32..12).prop_map(|(a, b)| Op::Contract(a, b)),
    ]
}

fn graph_strategy() -> impl Strategy<Value = Graph> {
    (1usize..12, prop::collection::vec((0u32..12, 0u32..12), 0..30)).prop_map(|(n, edges)| {
        let mut g = Graph::with_vertices(n);
        for (a, b) in edges {
            let (a, b) = (a % n as u32, b % n as u32);
            if a != b {
                g.add_edge(VertexId(a), VertexId(b)).unwrap();
            }
        }
        g
    })
}

proptest! {
    #[test]
    fn mutations_keep_graph_simple(ops in prop::collection::vec(op(), 0..60)) {
        let mut g = Graph::with_vertices(6);
        let mut dead = BTreeSet::new();
        for op in ops {
            match op {
                Op::AddVertex => {
                    let id = g.add_vertex();
                    prop_assert!(!dead.contains(&id));
                }
                Op::AddEdge(a, b) => {
                    let _ = g.add_edge(VertexId(a), VertexId(b));
                }
                Op::RemoveVertex(a) => {
                    if g.remove_vertex(VertexId(a)).is_ok() {
                        dead.insert(VertexId(a));
                    }
                }
                Op::Contract(a, b) => {
                    let (u, w) = (VertexId(a), VertexId(b));
                    if g.has_edge(u, w) {
                        let before = g.clone();
                        let expect: BTreeSet<VertexId> = before
                            .neighbors(u)
                            .chain(before.neighbors(w))
                            .filter(|&x| x != u && x != w)
                            .collect();
                        g.contract_edge(u, w).unwrap();
                        dead.insert(u);
                        prop_assert_eq!(g.n(), before.n() - 1);
                        prop_assert!(g.m() <= before.m());
                        let got: BTreeSet<VertexId> = g.neighbors(w).collect();
                        prop_assert_eq!(got, expect);
                    } else {
                        prop_assert!(g.contract_edge(u, w).is_err());
                    }
                }
            }
            prop_assert!(g.validate());
        }
    }

    #[test]
    fn components_partition_vertices(g in graph_strategy()) {
        let comps = g.connected_components();
        let mut seen = BTreeSet::new();
        for c in &comps {
            for &x in &c.members {
                prop_assert!(seen.insert(x));
            }
            let sub = g.induced_subgraph(&c.members).unwrap();
            prop_assert_eq!(sub.connected_components().len(), 1);
        }
        prop_assert_eq!(seen.len(), g.n());
        let firsts: Vec<_> = comps.iter().map(|c| c.smallest()).collect();
        let mut sorted = firsts.clone();
        sorted.sort();
        prop_assert_eq!(firsts, sorted);
    }

    #[test]
    fn graph_file_round_trips(g in graph_strategy()) {
        let text = serialize_graph(&g);
        let parsed = parse_graph(&text).unwrap();
        prop_assert!(parsed.warnings.is_empty());
        prop_assert_eq!(parsed.graph, g);
    }
}
