//! Brute-force ground truth and seeded instance generators.

use std::io::Write;
use std::time::Instant;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::kernel::{kernelize, lift_solution, Instance, KernelVerdict};
use crate::solver::{solve, verify_solution};

/// Largest graph the deletion-set oracle accepts.
pub const ORACLE_MAX_N: usize = 20;
/// Largest graph the `T2` subgraph oracle accepts.
pub const T2_ORACLE_MAX_N: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WorkbenchError {
    #[error("graph has {n} vertices; the oracle is limited to {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

/// Smallest deletion set of size at most `kmax`, by enumerating subsets in
/// order of increasing size.
pub fn oracle_min_pods(
    g: &Graph,
    kmax: usize,
) -> Result<Option<(usize, Vec<VertexId>)>, WorkbenchError> {
    if g.n() > ORACLE_MAX_N {
        return Err(WorkbenchError::TooLarge {
            n: g.n(),
            limit: ORACLE_MAX_N,
        });
    }
    let vs: Vec<VertexId> = g.vertices().collect();
    for size in 0..=kmax.min(vs.len()) {
        for s in vs.iter().copied().combinations(size) {
            if verify_solution(g, &s).expect("subset of live vertices") {
                return Ok(Some((size, s)));
            }
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Pattern {
    K3,
    C4,
    T2,
}

/// Whether `g` contains `pattern` as a (not necessarily induced) subgraph,
/// by trying every injective placement on every vertex subset.
pub fn brute_subgraph_check(g: &Graph, pattern: Pattern) -> Result<bool, WorkbenchError> {
    let vs: Vec<VertexId> = g.vertices().collect();
    let e = |a: VertexId, b: VertexId| g.has_edge(a, b);
    Ok(match pattern {
        Pattern::K3 => vs
            .iter()
            .tuple_combinations()
            .any(|(&a, &b, &c)| e(a, b) && e(b, c) && e(a, c)),
        Pattern::C4 => vs.iter().tuple_combinations().any(|(&a, &b, &c, &d)| {
            // the three distinct 4-cycles on {a, b, c, d}
            (e(a, b) && e(b, c) && e(c, d) && e(d, a))
                || (e(a, b) && e(b, d) && e(d, c) && e(c, a))
                || (e(a, c) && e(c, b) && e(b, d) && e(d, a))
        }),
        Pattern::T2 => {
            if vs.len() > T2_ORACLE_MAX_N {
                return Err(WorkbenchError::TooLarge {
                    n: vs.len(),
                    limit: T2_ORACLE_MAX_N,
                });
            }
            vs.iter()
                .copied()
                .combinations(7)
                .any(|sub| contains_t2_on(g, &sub))
        }
    })
}

fn contains_t2_on(g: &Graph, sub: &[VertexId]) -> bool {
    for (ci, &centre) in sub.iter().enumerate() {
        let rest: Vec<VertexId> = sub
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != ci)
            .map(|(_, &v)| v)
            .collect();
        for mids in rest.iter().copied().combinations(3) {
            if !mids.iter().all(|&m| g.has_edge(centre, m)) {
                continue;
            }
            let leaves: Vec<VertexId> = rest.iter().copied().filter(|v| !mids.contains(v)).collect();
            let found = leaves.iter().copied().permutations(3).any(|ls| {
                (0..3).all(|i| g.has_edge(mids[i], ls[i]))
            });
            if found {
                return true;
            }
        }
    }
    false
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    RandomGnm,
    PlantedYes,
    DisjointTriangles,
    LongCycleHairs,
}

impl std::str::FromStr for Family {
    type Err = WorkbenchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let norm: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        match norm.as_str() {
            "randomgnm" | "gnm" => Ok(Family::RandomGnm),
            "plantedyes" | "planted" => Ok(Family::PlantedYes),
            "disjointtriangles" | "triangles" => Ok(Family::DisjointTriangles),
            "longcyclehairs" | "cyclehairs" => Ok(Family::LongCycleHairs),
            _ => Err(WorkbenchError::InvalidSpec(format!("unknown family {s:?}"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Family::RandomGnm => "random_gnm",
            Family::PlantedYes => "planted_yes",
            Family::DisjointTriangles => "disjoint_triangles",
            Family::LongCycleHairs => "long_cycle_hairs",
        };
        f.write_str(s)
    }
}

/// Generator parameters. How `n` and `m` are read depends on the family:
///
/// * `RandomGnm`: `n` vertices, `m` distinct uniformly random edges.
/// * `PlantedYes`: `n` vertices in total, `k` of them planted on top of a
///   random caterpillar forest; `m` edges leave the planted vertices
///   (`0` picks three per planted vertex).
/// * `DisjointTriangles`: `k + 1` triangles; `n` and `m` are ignored.
/// * `LongCycleHairs`: `n` vertices, one cycle carrying random hairs; `m` is
///   ignored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenSpec {
    pub family: Family,
    #[serde(default)]
    pub n: usize,
    #[serde(default)]
    pub m: usize,
    #[serde(default)]
    pub k: usize,
    #[serde(default)]
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub instance: Instance,
    /// Deletion set known by construction (planted families only).
    pub planted: Option<Vec<VertexId>>,
}

pub fn generate(spec: &GenSpec) -> Result<Generated, WorkbenchError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        Family::RandomGnm => {
            let max = spec.n * spec.n.saturating_sub(1) / 2;
            if spec.m > max {
                return Err(WorkbenchError::InvalidSpec(format!(
                    "{} edges do not fit on {} vertices",
                    spec.m, spec.n
                )));
            }
            Ok(Generated {
                instance: Instance::new(random_gnm(spec.n, spec.m, &mut rng), spec.k),
                planted: None,
            })
        }
        Family::DisjointTriangles => {
            let t = spec.k as u32 + 1;
            let edges: Vec<(u32, u32)> = (0..t)
                .flat_map(|i| {
                    let b = 3 * i;
                    [(b, b + 1), (b + 1, b + 2), (b, b + 2)]
                })
                .collect();
            Ok(Generated {
                instance: Instance::new(Graph::from_edges(3 * t as usize, &edges), spec.k),
                planted: None,
            })
        }
        Family::PlantedYes => planted_yes(spec, &mut rng),
        Family::LongCycleHairs => {
            if spec.n < 3 {
                return Err(WorkbenchError::InvalidSpec("a cycle needs 3 vertices".into()));
            }
            let hairs = rng.gen_range(0..=(spec.n - 3).min(spec.n / 3));
            let len = spec.n - hairs;
            let mut g = Graph::with_vertices(len);
            for i in 0..len {
                g.add_edge(VertexId(i as u32), VertexId(((i + 1) % len) as u32))
                    .expect("cycle edge");
            }
            for _ in 0..hairs {
                let h = g.add_vertex();
                let host = VertexId(rng.gen_range(0..len) as u32);
                g.add_edge(host, h).expect("hair edge");
            }
            let planted = Some(vec![VertexId(0)]);
            Ok(Generated {
                instance: Instance::new(g, spec.k),
                planted,
            })
        }
    }
}

fn random_gnm(n: usize, m: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut g = Graph::with_vertices(n);
    let mut added = 0;
    while added < m {
        let u = rng.gen_range(0..n) as u32;
        let v = rng.gen_range(0..n) as u32;
        if u != v && g.add_edge(VertexId(u), VertexId(v)).expect("live") {
            added += 1;
        }
    }
    g
}

fn planted_yes(spec: &GenSpec, rng: &mut ChaCha8Rng) -> Result<Generated, WorkbenchError> {
    if spec.n <= spec.k {
        return Err(WorkbenchError::InvalidSpec(format!(
            "need more than k = {} vertices, got {}",
            spec.k, spec.n
        )));
    }
    let forest_n = spec.n - spec.k;
    let mut g = Graph::with_vertices(forest_n);
    let mut next = 0usize;
    while next < forest_n {
        let left = forest_n - next;
        let spine = rng.gen_range(1..=left.min(8));
        for i in 1..spine {
            g.add_edge(VertexId((next + i - 1) as u32), VertexId((next + i) as u32))
                .expect("spine edge");
        }
        let spine_start = next;
        next += spine;
        let hairs = rng.gen_range(0..=(forest_n - next).min(2 * spine));
        for _ in 0..hairs {
            let host = rng.gen_range(spine_start..spine_start + spine);
            g.add_edge(VertexId(host as u32), VertexId(next as u32))
                .expect("hair edge");
            next += 1;
        }
    }
    let planted: Vec<VertexId> = (0..spec.k).map(|_| g.add_vertex()).collect();
    if !planted.is_empty() {
        let total = if spec.m == 0 { 3 * spec.k } else { spec.m };
        let pool = forest_n + spec.k;
        let capacity = spec.k * forest_n + spec.k * (spec.k - 1) / 2;
        if total > capacity {
            return Err(WorkbenchError::InvalidSpec(format!(
                "{total} planted edges exceed capacity {capacity}"
            )));
        }
        let mut added = 0;
        let mut order: Vec<usize> = (0..spec.k).collect();
        while added < total {
            order.shuffle(rng);
            for &i in &order {
                if added == total {
                    break;
                }
                let target = VertexId(rng.gen_range(0..pool) as u32);
                if target != planted[i] && g.add_edge(planted[i], target).expect("live") {
                    added += 1;
                }
            }
        }
    }
    Ok(Generated {
        instance: Instance::new(g, spec.k),
        planted: Some(planted),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pipeline {
    Solve,
    Kernelize,
    KernelizeThenSolve,
}

impl std::str::FromStr for Pipeline {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.replace('-', "_").as_str() {
            "solve" => Ok(Pipeline::Solve),
            "kernelize" => Ok(Pipeline::Kernelize),
            "kernelize_then_solve" => Ok(Pipeline::KernelizeThenSolve),
            _ => Err(format!("unknown pipeline {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "yes",
            Verdict::No => "no",
            Verdict::Unknown => "unknown",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BenchRow {
    pub family: String,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub verdict: Verdict,
    pub kernel_n: usize,
    pub kernel_k: usize,
    pub rule1_count: usize,
    pub rule2_count: usize,
    pub rule3_count: usize,
    pub rule4_count: usize,
    pub rule5_count: usize,
    pub rule6_count: usize,
    pub nodes: u64,
    pub millis: u128,
}

/// Outcome of one pipeline run on one instance.
#[derive(Debug, Clone)]
pub struct PipelineOutcome {
    pub verdict: Verdict,
    pub witness: Option<Vec<VertexId>>,
    pub kernel: Option<crate::kernel::KernelResult>,
    pub stats: crate::solver::SearchStats,
}

/// Runs `pipeline` on `inst`. With kernelization first, a witness found on
/// the kernel is lifted back to the input graph.
pub fn run_pipeline(inst: &Instance, pipeline: Pipeline) -> PipelineOutcome {
    match pipeline {
        Pipeline::Solve => {
            let (sol, stats) = solve(inst);
            PipelineOutcome {
                verdict: if sol.is_some() { Verdict::Yes } else { Verdict::No },
                witness: sol.map(|s| s.deleted),
                kernel: None,
                stats,
            }
        }
        Pipeline::Kernelize => {
            let kr = kernelize(inst.clone());
            let verdict = match kr.verdict {
                KernelVerdict::TrivialYes => Verdict::Yes,
                KernelVerdict::TrivialNo => Verdict::No,
                KernelVerdict::Reduced => Verdict::Unknown,
            };
            let witness = (kr.verdict == KernelVerdict::TrivialYes)
                .then(|| lift_solution(&kr.trace, &[]));
            PipelineOutcome {
                verdict,
                witness,
                kernel: Some(kr),
                stats: Default::default(),
            }
        }
        Pipeline::KernelizeThenSolve => {
            let kr = kernelize(inst.clone());
            let (kernel_solution, stats) = match kr.verdict {
                KernelVerdict::TrivialYes => (Some(Vec::new()), Default::default()),
                KernelVerdict::TrivialNo => (None, Default::default()),
                KernelVerdict::Reduced => {
                    let (sol, stats) = solve(&kr.instance);
                    (sol.map(|s| s.deleted), stats)
                }
            };
            let witness = kernel_solution.map(|s| lift_solution(&kr.trace, &s));
            if let Some(w) = &witness {
                debug_assert!(w.len() <= inst.k);
                debug_assert!(verify_solution(&inst.graph, w).unwrap_or(false));
            }
            PipelineOutcome {
                verdict: if witness.is_some() { Verdict::Yes } else { Verdict::No },
                witness,
                kernel: Some(kr),
                stats,
            }
        }
    }
}

/// Generates and runs each spec in order.
pub fn bench_run(specs: &[GenSpec], pipeline: Pipeline) -> Result<Vec<BenchRow>, WorkbenchError> {
    specs
        .iter()
        .map(|spec| {
            let inst = generate(spec)?.instance;
            let start = Instant::now();
            let out = run_pipeline(&inst, pipeline);
            let millis = start.elapsed().as_millis();
            let (kernel_n, kernel_k, counts) = match &out.kernel {
                Some(kr) => (kr.instance.graph.n(), kr.instance.k, kr.trace.rule_counts()),
                None => (inst.graph.n(), inst.k, [0; 6]),
            };
            Ok(BenchRow {
                family: spec.family.to_string(),
                seed: spec.seed,
                n: inst.graph.n(),
                m: inst.graph.m(),
                k: inst.k,
                verdict: out.verdict,
                kernel_n,
                kernel_k,
                rule1_count: counts[0],
                rule2_count: counts[1],
                rule3_count: counts[2],
                rule4_count: counts[3],
                rule5_count: counts[4],
                rule6_count: counts[5],
                nodes: out.stats.nodes_visited,
                millis,
            })
        })
        .collect()
}

/// Writes rows as CSV with the fixed header
/// `family,seed,n,m,k,verdict,kernel_n,kernel_k,rule1_count..rule6_count,nodes,millis`.
pub fn write_csv<W: Write>(rows: &[BenchRow], out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record([
        "family",
        "seed",
        "n",
        "m",
        "k",
        "verdict",
        "kernel_n",
        "kernel_k",
        "rule1_count",
        "rule2_count",
        "rule3_count",
        "rule4_count",
        "rule5_count",
        "rule6_count",
        "nodes",
        "millis",
    ])?;
    for r in rows {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: u32) -> VertexId {
        VertexId(i)
    }

    fn spec(family: Family, n: usize, m: usize, k: usize, seed: u64) -> GenSpec {
        GenSpec {
            family,
            n,
            m,
            k,
            seed,
        }
    }

    #[test]
    fn oracle_examples() {
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]);
        let (size, s) = oracle_min_pods(&c6, 1).unwrap().unwrap();
        assert_eq!(size, 1);
        assert!(verify_solution(&c6, &s).unwrap());

        let t2 = Graph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)]);
        assert_eq!(oracle_min_pods(&t2, 0).unwrap(), None);

        let cat = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (2, 4)]);
        assert_eq!(oracle_min_pods(&cat, 0).unwrap(), Some((0, vec![])));

        assert!(matches!(
            oracle_min_pods(&Graph::with_vertices(21), 0),
            Err(WorkbenchError::TooLarge { .. })
        ));
    }

    #[test]
    fn subgraph_oracle_examples() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(brute_subgraph_check(&k4, Pattern::K3).unwrap());
        assert!(brute_subgraph_check(&k4, Pattern::C4).unwrap());
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(!brute_subgraph_check(&c5, Pattern::C4).unwrap());
        assert!(!brute_subgraph_check(&c5, Pattern::T2).unwrap());
        let edges: Vec<(u32, u32)> = (1..15).map(|i| ((i - 1) / 2, i)).collect();
        let bt = Graph::from_edges(15, &edges);
        assert!(matches!(
            brute_subgraph_check(&bt, Pattern::T2),
            Err(WorkbenchError::TooLarge { .. })
        ));
        // the height-3 tree minus its last four leaves still fits the guard
        let trimmed = bt.without(&[v(11), v(12), v(13), v(14)]).unwrap();
        assert!(brute_subgraph_check(&trimmed, Pattern::T2).unwrap());
    }

    #[test]
    fn generation_is_seeded() {
        let s = spec(Family::PlantedYes, 30, 0, 2, 7);
        assert_eq!(generate(&s).unwrap(), generate(&s).unwrap());
        let other = GenSpec { seed: 8, ..s };
        assert_ne!(generate(&s).unwrap(), generate(&other).unwrap());
    }

    #[test]
    fn family_shapes() {
        let tri = generate(&spec(Family::DisjointTriangles, 0, 0, 1, 0)).unwrap().instance;
        assert_eq!((tri.graph.n(), tri.graph.m(), tri.k), (6, 6, 1));
        assert_eq!(oracle_min_pods(&tri.graph, 1).unwrap(), None);

        let empty = generate(&spec(Family::RandomGnm, 8, 0, 0, 3)).unwrap().instance;
        assert_eq!((empty.graph.n(), empty.graph.m()), (8, 0));
        assert!(solve(&empty).0.is_some());

        let gnm = generate(&spec(Family::RandomGnm, 10, 20, 2, 3)).unwrap().instance;
        assert_eq!((gnm.graph.n(), gnm.graph.m()), (10, 20));
        assert!(generate(&spec(Family::RandomGnm, 4, 7, 0, 0)).is_err());

        let planted = generate(&spec(Family::PlantedYes, 40, 0, 3, 11)).unwrap();
        let w = planted.planted.unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(planted.instance.graph.n(), 40);
        assert!(verify_solution(&planted.instance.graph, &w).unwrap());
        assert!(generate(&spec(Family::PlantedYes, 2, 0, 2, 0)).is_err());

        let lc = generate(&spec(Family::LongCycleHairs, 30, 0, 1, 5)).unwrap();
        assert_eq!(lc.instance.graph.n(), 30);
        assert_eq!(lc.instance.graph.m(), 30);
        assert!(verify_solution(&lc.instance.graph, &lc.planted.unwrap()).unwrap());
    }

    #[test]
    fn bench_rows() {
        assert!(bench_run(&[], Pipeline::Solve).unwrap().is_empty());
        let planted: Vec<GenSpec> = (0..4).map(|s| spec(Family::PlantedYes, 25, 0, 2, s)).collect();
        let rows = bench_run(&planted, Pipeline::KernelizeThenSolve).unwrap();
        assert!(rows.iter().all(|r| r.verdict == Verdict::Yes));
        let tris: Vec<GenSpec> = (0..3).map(|k| spec(Family::DisjointTriangles, 0, 0, k, 0)).collect();
        for p in [Pipeline::Solve, Pipeline::KernelizeThenSolve] {
            let rows = bench_run(&tris, p).unwrap();
            assert!(rows.iter().all(|r| r.verdict == Verdict::No));
        }
        let mut buf = Vec::new();
        write_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with(
            "family,seed,n,m,k,verdict,kernel_n,kernel_k,rule1_count,rule2_count,rule3_count,rule4_count,rule5_count,rule6_count,nodes,millis\n"
        ));
        assert_eq!(text.lines().count(), 5);
    }
}
