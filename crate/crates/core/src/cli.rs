//! Command-line front end and the DIMACS-style graph format.
//!
//! Graph files look like
//!
//! ```text
//! c optional comments
//! p edge 3 2
//! e 1 2
//! e 2 3
//! ```
//!
//! Vertices are 1-indexed on disk and map to ids `0..n` internally.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::kernel::{Instance, KernelTrace, KernelVerdict};
use crate::solver::verify_solution;
use crate::workbench::{
    bench_run, generate, oracle_min_pods, run_pipeline, write_csv, Family, GenSpec, Pipeline,
    Verdict, WorkbenchError, ORACLE_MAX_N,
};

pub const EXIT_YES: i32 = 0;
pub const EXIT_NO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: self-loop on vertex {vertex}")]
    SelfLoop { line: usize, vertex: u64 },
    #[error("line {line}: vertex {index} outside 1..={n}")]
    IndexOutOfRange { line: usize, index: u64, n: usize },
}

#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    pub warnings: Vec<String>,
}

fn syntax(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        message: message.into(),
    }
}

fn number(tok: Option<&str>, line: usize, what: &str) -> Result<u64, ParseError> {
    let tok = tok.ok_or_else(|| syntax(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| syntax(line, format!("bad {what} {tok:?}")))
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph, ParseError> {
    let mut graph: Option<Graph> = None;
    let mut declared_m = 0u64;
    let mut edge_lines = 0u64;
    let mut warnings = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let mut toks = raw.split_whitespace();
        let Some(head) = toks.next() else { continue };
        match head {
            "c" => continue,
            "p" => {
                if graph.is_some() {
                    return Err(syntax(line, "second problem line"));
                }
                match toks.next() {
                    Some("edge") => {}
                    other => return Err(syntax(line, format!("expected \"p edge\", got {other:?}"))),
                }
                let n = number(toks.next(), line, "vertex count")?;
                declared_m = number(toks.next(), line, "edge count")?;
                if n > u32::MAX as u64 {
                    return Err(syntax(line, "vertex count too large"));
                }
                graph = Some(Graph::with_vertices(n as usize));
            }
            "e" => {
                let g = graph
                    .as_mut()
                    .ok_or_else(|| syntax(line, "edge before problem line"))?;
                let u = number(toks.next(), line, "endpoint")?;
                let v = number(toks.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > g.n() as u64 {
                        return Err(ParseError::IndexOutOfRange {
                            line,
                            index: x,
                            n: g.n(),
                        });
                    }
                }
                if u == v {
                    return Err(ParseError::SelfLoop { line, vertex: u });
                }
                edge_lines += 1;
                let fresh = g
                    .add_edge(VertexId(u as u32 - 1), VertexId(v as u32 - 1))
                    .expect("validated endpoints");
                if !fresh {
                    warnings.push(format!("line {line}: duplicate edge {u} {v} ignored"));
                }
            }
            other => return Err(syntax(line, format!("unknown line type {other:?}"))),
        }
        if toks.next().is_some() {
            return Err(syntax(line, "trailing tokens"));
        }
    }
    let graph = graph.ok_or_else(|| syntax(text.lines().count().max(1), "missing problem line"))?;
    if edge_lines != declared_m {
        warnings.push(format!(
            "header declares {declared_m} edges, found {edge_lines} edge lines"
        ));
    }
    Ok(ParsedGraph { graph, warnings })
}

/// Writes `g` in the graph file format, numbering live vertices `1..=n` in
/// ascending id order.
pub fn serialize_graph(g: &Graph) -> String {
    let mut dense = vec![0u32; g.id_bound()];
    for (i, v) in g.vertices().enumerate() {
        dense[v.index()] = i as u32 + 1;
    }
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", dense[u.index()], dense[v.index()]));
    }
    out
}

/// Reads a deletion set: one 1-indexed vertex per line, `c` comments allowed.
pub fn parse_solution(text: &str, n: usize) -> Result<Vec<VertexId>, ParseError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        if t.is_empty() || t.starts_with('c') {
            continue;
        }
        let x: u64 = t
            .parse()
            .map_err(|_| syntax(line, format!("bad vertex {t:?}")))?;
        if x == 0 || x > n as u64 {
            return Err(ParseError::IndexOutOfRange { line, index: x, n });
        }
        out.push(VertexId(x as u32 - 1));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelSummary {
    pub n: usize,
    pub k: usize,
    pub verdict: KernelVerdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsSummary {
    pub nodes: u64,
    pub max_depth: usize,
    pub millis: u128,
}

/// Machine-readable result of one command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub verdict: Verdict,
    /// 1-indexed vertices.
    pub witness: Option<Vec<u64>>,
    pub kernel: Option<KernelSummary>,
    pub stats: StatsSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<KernelTrace>,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::No => EXIT_NO,
            Verdict::Yes | Verdict::Unknown => EXIT_YES,
        }
    }

    fn write_text(&self, out: &mut dyn Write) -> std::io::Result<()> {
        writeln!(out, "command: {}", self.command)?;
        writeln!(out, "instance: n={} m={} k={}", self.n, self.m, self.k)?;
        writeln!(out, "verdict: {}", self.verdict)?;
        if let Some(w) = &self.witness {
            let list: Vec<String> = w.iter().map(u64::to_string).collect();
            writeln!(out, "witness: {}", list.join(" "))?;
        }
        if let Some(kr) = &self.kernel {
            let verdict = serde_json::to_value(kr.verdict).expect("enum serializes");
            writeln!(
                out,
                "kernel: n={} k={} verdict={}",
                kr.n,
                kr.k,
                verdict.as_str().unwrap_or("?")
            )?;
        }
        writeln!(
            out,
            "stats: nodes={} max_depth={} millis={}",
            self.stats.nodes, self.stats.max_depth, self.stats.millis
        )?;
        if let Some(trace) = &self.trace {
            for e in &trace.entries {
                let vs: Vec<String> = e.vertices.iter().map(|v| (v.0 as u64 + 1).to_string()).collect();
                writeln!(
                    out,
                    "rule {} k {}->{} [{}] {}",
                    e.rule,
                    e.k_before,
                    e.k_after,
                    vs.join(" "),
                    e.detail
                )?;
            }
        }
        Ok(())
    }
}

fn one_indexed(vs: &[VertexId]) -> Vec<u64> {
    vs.iter().map(|v| v.0 as u64 + 1).collect()
}

#[derive(Debug, Parser)]
#[command(name = "povd", version, about = "Pathwidth-one vertex deletion: kernelize, solve, certify")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Decide whether at most K deletions reach pathwidth one.
    Solve {
        /// Deletion budget.
        #[arg(short)]
        k: usize,
        /// Graph in `p edge` format.
        file: PathBuf,
        /// Reduce before searching and lift the witness back.
        #[arg(long)]
        kernelize_first: bool,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Apply the reduction rules and report the kernel.
    Kernelize {
        /// Deletion budget.
        #[arg(short)]
        k: usize,
        /// Graph in `p edge` format.
        file: PathBuf,
        /// Include every rule firing.
        #[arg(long)]
        trace: bool,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Certify a deletion set without searching.
    Check {
        /// Graph in `p edge` format.
        file: PathBuf,
        /// One 1-indexed vertex per line.
        #[arg(long)]
        solution: PathBuf,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Brute-force minimum deletion set (at most 20 vertices).
    Oracle {
        /// Deletion budget.
        #[arg(short)]
        k: usize,
        /// Graph in `p edge` format.
        file: PathBuf,
        /// Print a JSON report instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Write a generated instance.
    Gen {
        /// random_gnm, planted_yes, disjoint_triangles or long_cycle_hairs.
        #[arg(long)]
        family: Family,
        /// Vertex count.
        #[arg(long)]
        n: usize,
        /// Edge count (random_gnm) or planted edges (planted_yes, 0 = 3k).
        #[arg(long, default_value_t = 0)]
        m: usize,
        /// Budget the instance is built around.
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path.
        #[arg(short = 'o')]
        output: PathBuf,
    },
    /// Run a JSON list of generator specs and write a CSV report.
    Bench {
        /// JSON array of {family, n, m, k, seed} objects.
        #[arg(long)]
        spec: PathBuf,
        /// Output path.
        #[arg(short = 'o')]
        output: PathBuf,
        /// solve, kernelize or kernelize_then_solve.
        #[arg(long, default_value = "kernelize_then_solve")]
        pipeline: Pipeline,
    },
}

/// Result of [`run_command`].
#[derive(Debug, Clone)]
pub struct CommandOutcome {
    pub code: i32,
    pub report: Option<Report>,
}

impl CommandOutcome {
    fn code(code: i32) -> Self {
        CommandOutcome { code, report: None }
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Guard(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Guard(_) => EXIT_GUARD,
            _ => EXIT_USAGE,
        }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write(path: &Path, data: &[u8]) -> Result<(), CliError> {
    fs::write(path, data).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_graph(path: &Path, err: &mut dyn Write) -> Result<Graph, CliError> {
    let parsed = parse_graph(&read(path)?).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })?;
    for w in &parsed.warnings {
        let _ = writeln!(err, "warning: {}: {w}", path.display());
    }
    Ok(parsed.graph)
}

/// Parses `args` (including the program name) and runs the command. Human
/// or JSON output goes to `out`, diagnostics to `err`.
///
/// Exit codes: 0 yes or success, 1 no, 2 usage or parse error, 3 oracle size
/// guard.
pub fn run_command<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_YES };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return CommandOutcome::code(code);
        }
    };
    match dispatch(cli.command, out, err) {
        Ok(outcome) => outcome,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            CommandOutcome::code(e.exit_code())
        }
    }
}

fn emit(report: Report, json: bool, out: &mut dyn Write) -> Result<CommandOutcome, CliError> {
    let res = if json {
        serde_json::to_writer_pretty(&mut *out, &report)
            .map_err(std::io::Error::from)
            .and_then(|_| writeln!(out))
    } else {
        report.write_text(out)
    };
    res.map_err(|source| CliError::Io {
        path: "<stdout>".into(),
        source,
    })?;
    Ok(CommandOutcome {
        code: report.exit_code(),
        report: Some(report),
    })
}

fn dispatch(cmd: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<CommandOutcome, CliError> {
    match cmd {
        Command::Solve {
            k,
            file,
            kernelize_first,
            json,
        } => {
            let g = load_graph(&file, err)?;
            let (n, m) = (g.n(), g.m());
            let inst = Instance::new(g, k);
            let pipeline = if kernelize_first {
                Pipeline::KernelizeThenSolve
            } else {
                Pipeline::Solve
            };
            let start = Instant::now();
            let res = run_pipeline(&inst, pipeline);
            let millis = start.elapsed().as_millis();
            let report = Report {
                command: "solve".into(),
                n,
                m,
                k,
                verdict: res.verdict,
                witness: res.witness.as_deref().map(one_indexed),
                kernel: res.kernel.as_ref().map(|kr| KernelSummary {
                    n: kr.instance.graph.n(),
                    k: kr.instance.k,
                    verdict: kr.verdict,
                }),
                stats: StatsSummary {
                    nodes: res.stats.nodes_visited,
                    max_depth: res.stats.max_depth,
                    millis,
                },
                trace: None,
            };
            emit(report, json, out)
        }
        Command::Kernelize { k, file, trace, json } => {
            let g = load_graph(&file, err)?;
            let (n, m) = (g.n(), g.m());
            let start = Instant::now();
            let res = run_pipeline(&Instance::new(g, k), Pipeline::Kernelize);
            let millis = start.elapsed().as_millis();
            let kr = res.kernel.expect("kernelize pipeline");
            let report = Report {
                command: "kernelize".into(),
                n,
                m,
                k,
                verdict: res.verdict,
                witness: res.witness.as_deref().map(one_indexed),
                kernel: Some(KernelSummary {
                    n: kr.instance.graph.n(),
                    k: kr.instance.k,
                    verdict: kr.verdict,
                }),
                stats: StatsSummary {
                    nodes: 0,
                    max_depth: 0,
                    millis,
                },
                trace: trace.then_some(kr.trace),
            };
            emit(report, json, out)
        }
        Command::Check {
            file,
            solution,
            json,
        } => {
            let g = load_graph(&file, err)?;
            let s = parse_solution(&read(&solution)?, g.n()).map_err(|source| CliError::Parse {
                path: solution.display().to_string(),
                source,
            })?;
            let start = Instant::now();
            let ok = verify_solution(&g, &s).map_err(|e| CliError::Usage(e.to_string()))?;
            let report = Report {
                command: "check".into(),
                n: g.n(),
                m: g.m(),
                k: s.len(),
                verdict: if ok { Verdict::Yes } else { Verdict::No },
                witness: ok.then(|| one_indexed(&s)),
                kernel: None,
                stats: StatsSummary {
                    nodes: 0,
                    max_depth: 0,
                    millis: start.elapsed().as_millis(),
                },
                trace: None,
            };
            emit(report, json, out)
        }
        Command::Oracle { k, file, json } => {
            let g = load_graph(&file, err)?;
            let start = Instant::now();
            let found = oracle_min_pods(&g, k).map_err(|e| match e {
                WorkbenchError::TooLarge { .. } => {
                    CliError::Guard(format!("{e} (limit {ORACLE_MAX_N})"))
                }
                other => CliError::Usage(other.to_string()),
            })?;
            let report = Report {
                command: "oracle".into(),
                n: g.n(),
                m: g.m(),
                k,
                verdict: if found.is_some() { Verdict::Yes } else { Verdict::No },
                witness: found.map(|(_, s)| one_indexed(&s)),
                kernel: None,
                stats: StatsSummary {
                    nodes: 0,
                    max_depth: 0,
                    millis: start.elapsed().as_millis(),
                },
                trace: None,
            };
            emit(report, json, out)
        }
        Command::Gen {
            family,
            n,
            m,
            k,
            seed,
            output,
        } => {
            let spec = GenSpec {
                family,
                n,
                m,
                k,
                seed,
            };
            let generated = generate(&spec).map_err(|e| CliError::Usage(e.to_string()))?;
            let g = &generated.instance.graph;
            let mut text = format!("c {family} n={n} m={m} k={k} seed={seed}\n");
            if let Some(p) = &generated.planted {
                let list: Vec<String> = one_indexed(p).iter().map(u64::to_string).collect();
                text.push_str(&format!("c planted {}\n", list.join(" ")));
            }
            text.push_str(&serialize_graph(g));
            write(&output, text.as_bytes())?;
            let _ = writeln!(out, "wrote {} (n={} m={})", output.display(), g.n(), g.m());
            Ok(CommandOutcome::code(EXIT_YES))
        }
        Command::Bench {
            spec,
            output,
            pipeline,
        } => {
            let specs: Vec<GenSpec> = serde_json::from_str(&read(&spec)?)
                .map_err(|e| CliError::Usage(format!("{}: {e}", spec.display())))?;
            let rows = bench_run(&specs, pipeline).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut buf = Vec::new();
            write_csv(&rows, &mut buf).map_err(|e| CliError::Usage(e.to_string()))?;
            write(&output, &buf)?;
            let _ = writeln!(out, "wrote {} rows to {}", rows.len(), output.display());
            Ok(CommandOutcome::code(EXIT_YES))
        }
    }
}
