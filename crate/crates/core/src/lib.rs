//! Exact toolkit for pathwidth-one vertex deletion: given a graph and a
//! budget `k`, can deleting at most `k` vertices leave a disjoint union of
//! caterpillars?
//!
//! The crate provides a kernelization to `O(k^4)` vertices ([`kernel`]), an
//! `O*(7^k)` bounded search tree ([`solver`]), the recognition routines both
//! rely on ([`recognition`], [`matching`]), brute-force oracles and seeded
//! generators ([`workbench`]), and the `povd` command line ([`cli`]).

pub mod cli;
pub mod graph;
pub mod kernel;
pub mod matching;
pub mod recognition;
pub mod solver;
pub mod workbench;

pub use graph::{Component, ContractReport, Graph, GraphError, VertexId};
pub use kernel::{kernelize, Instance, KernelResult, KernelTrace, KernelVerdict, TraceEntry};
pub use recognition::{find_obstruction, is_pathwidth_at_most_one, Obstruction, ObstructionKind};
pub use solver::{solve, verify_solution, SearchStats, Solution};
