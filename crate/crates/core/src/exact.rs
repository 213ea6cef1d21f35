//! Exhaustive solver for small instances.
//!
//! For every subset `A ⊆ S` of size `min(k, m)` the solver adds the edges of
//! the complete graph on `P ∪ A` in ascending order until all terminals share
//! a component. The length of that edge is the best bottleneck achievable
//! with `A`; the minimum over all subsets is the optimum. Adding Steiner
//! points never raises the connectivity threshold, so subsets of exactly
//! `min(k, m)` points suffice.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::approx::SolveReport;
use crate::geometry::{Edge, Instance, VertexId};
use crate::mst::UnionFind;
use crate::tree::SteinerTree;

/// Default cap on `C(m, k) · (n + k)²`.
pub const DEFAULT_WORK_BOUND: u128 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExactConfig {
    pub work_bound: u128,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            work_bound: DEFAULT_WORK_BOUND,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("exhaustive search needs ~{estimate} units of work, bound is {bound}")]
    WorkBoundExceeded { estimate: u128, bound: u128 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExactResult {
    pub optimum_bottleneck: f64,
    pub witness: SteinerTree,
    pub subsets_examined: u64,
}

/// `C(m, k) · (n + k)²`, saturating.
pub fn work_estimate(inst: &Instance) -> u128 {
    let m = inst.num_steiners() as u128;
    let k = inst.budget().min(inst.num_steiners()) as u128;
    let mut subsets: u128 = 1;
    for i in 0..k {
        // Exact at every step: the running product is C(m, i + 1).
        subsets = subsets.saturating_mul(m - i) / (i + 1);
    }
    let side = inst.num_terminals() as u128 + k;
    subsets.saturating_mul(side * side)
}

pub fn solve_exact(inst: &Instance) -> Result<ExactResult, ExactError> {
    solve_exact_with(inst, &ExactConfig::default())
}

pub fn solve_exact_with(inst: &Instance, config: &ExactConfig) -> Result<ExactResult, ExactError> {
    let estimate = work_estimate(inst);
    if estimate > config.work_bound {
        return Err(ExactError::WorkBoundExceeded {
            estimate,
            bound: config.work_bound,
        });
    }

    let n = inst.num_terminals();
    let m = inst.num_steiners();
    let size = inst.budget().min(m);

    let mut best: Option<(f64, Vec<VertexId>)> = None;
    let mut examined = 0u64;
    let mut subset: Vec<usize> = (0..size).collect();
    loop {
        let members: Vec<VertexId> = (0..n).chain(subset.iter().map(|&i| n + i)).collect();
        let (bottleneck, _) = connect_terminals(inst, &members);
        examined += 1;
        if best.as_ref().is_none_or(|(b, _)| bottleneck < *b) {
            best = Some((bottleneck, members));
        }
        if !next_combination(&mut subset, m) {
            break;
        }
    }

    let (optimum, members) = best.expect("at least one subset is examined");
    let (_, forest) = connect_terminals(inst, &members);
    let witness = prune_to_witness(inst, forest, optimum);
    debug_assert_eq!(witness.bottleneck, optimum);
    Ok(ExactResult {
        optimum_bottleneck: optimum,
        witness,
        subsets_examined: examined,
    })
}

/// Approximation ratio `approx / optimum`, with `0 / 0` taken as 1.
pub fn ratio(approx: &SolveReport, exact: &ExactResult) -> f64 {
    let a = approx.tree.bottleneck;
    let b = exact.optimum_bottleneck;
    if a == 0.0 && b == 0.0 {
        1.0
    } else {
        a / b
    }
}

/// Advances `subset` to the next `k`-combination of `0..m` in lexicographic
/// order. Returns false after the last one.
fn next_combination(subset: &mut [usize], m: usize) -> bool {
    let k = subset.len();
    let Some(i) = (0..k).rev().find(|&i| subset[i] < m - k + i) else {
        return false;
    };
    subset[i] += 1;
    for j in (i + 1)..k {
        subset[j] = subset[j - 1] + 1;
    }
    true
}

/// Kruskal on the complete graph over `members` until the terminals are
/// connected. Returns the length of the last edge needed (0 if a single
/// terminal) and the forest built so far.
fn connect_terminals(inst: &Instance, members: &[VertexId]) -> (f64, Vec<Edge>) {
    let mut edges = Vec::with_capacity(members.len() * members.len() / 2);
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            edges.push(Edge::new(u, v, inst.dist(u, v)));
        }
    }
    edges.sort_by(Edge::cmp_by_len);

    let total = inst.num_vertices();
    let mut uf = UnionFind::new(total);
    let mut terminals_below: Vec<usize> = (0..total)
        .map(|v| usize::from(inst.is_terminal(v)))
        .collect();
    let mut terminal_components = inst.num_terminals();
    let mut forest = Vec::new();
    if terminal_components == 1 {
        return (0.0, forest);
    }
    for e in edges {
        let (ru, rv) = (uf.find(e.u), uf.find(e.v));
        if ru == rv {
            continue;
        }
        let (tu, tv) = (terminals_below[ru], terminals_below[rv]);
        uf.union(ru, rv);
        let root = uf.find(ru);
        terminals_below[root] = tu + tv;
        forest.push(e);
        if tu > 0 && tv > 0 {
            terminal_components -= 1;
            if terminal_components == 1 {
                return (e.len, forest);
            }
        }
    }
    unreachable!("the complete graph connects every terminal")
}

/// Keeps the forest component holding the terminals and strips Steiner
/// leaves until none remain.
fn prune_to_witness(inst: &Instance, forest: Vec<Edge>, optimum: f64) -> SteinerTree {
    if forest.is_empty() {
        let mut single = SteinerTree::single_vertex();
        single.threshold_used = optimum;
        return single;
    }
    let mut uf = UnionFind::new(inst.num_vertices());
    for e in &forest {
        uf.union(e.u, e.v);
    }
    let mut edges: Vec<Edge> = forest.into_iter().filter(|e| uf.same(e.u, 0)).collect();

    loop {
        let mut degree = vec![0usize; inst.num_vertices()];
        for e in &edges {
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        let leaves: BTreeSet<VertexId> = (0..inst.num_vertices())
            .filter(|&v| inst.is_steiner(v) && degree[v] == 1)
            .collect();
        if leaves.is_empty() {
            break;
        }
        edges.retain(|e| !leaves.contains(&e.u) && !leaves.contains(&e.v));
    }
    SteinerTree::from_edges(inst, edges, optimum)
}
