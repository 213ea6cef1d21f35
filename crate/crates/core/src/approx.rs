//! The threshold-sweep 2-approximation.
//!
//! For each candidate cutoff `t` (the distinct pairwise lengths, ascending)
//! the solver computes minimum Steiner counts `w(p, q)` in the threshold
//! graph, a minimum spanning tree `T` of the terminals under `w`, and its
//! normalized weight `C(T)`. The first cutoff with `C(T) ≤ k` is a lower
//! bound on the optimal bottleneck, and the tree built from `T` there has
//! bottleneck at most `2t`.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{build_edge_list, Edge, EdgeList, Instance, VertexId};
use crate::mst::{terminal_mst, TerminalTree, UnionFind};
use crate::paths::{all_pairs_steiner_paths, build_threshold_graph, PathTable, Weight};
use crate::tree::SteinerTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Linear scan over thresholds, as in the original algorithm.
    #[default]
    Sweep,
    /// Binary search for the first feasible threshold.
    Bisect,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Method::Sweep => "sweep",
            Method::Bisect => "bisect",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolveError {
    #[error("no threshold admits C(T) <= {budget} (C at the largest threshold: {final_cost})")]
    Infeasible { budget: usize, final_cost: Weight },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SolveReport {
    pub tree: SteinerTree,
    /// Position of the accepting threshold in `distinct_lengths`; `None` for
    /// a single-terminal instance, which is solved without probing.
    pub threshold_index: Option<usize>,
    /// Number of thresholds evaluated.
    pub probes: usize,
    pub elapsed: Duration,
    pub method: Method,
}

/// Everything computed for one candidate threshold.
#[derive(Debug, Clone)]
pub struct Probe {
    pub threshold: f64,
    pub paths: PathTable,
    pub tree: TerminalTree,
}

impl Probe {
    pub fn is_feasible(&self, budget: usize) -> bool {
        self.tree.connected && self.tree.normalized_cost <= Weight::finite(budget as u64)
    }
}

pub fn probe(inst: &Instance, edges: &EdgeList, threshold: f64) -> Probe {
    let graph = build_threshold_graph(inst, edges, threshold);
    let paths = all_pairs_steiner_paths(&graph, inst);
    let tree = terminal_mst(paths.weights());
    Probe {
        threshold,
        paths,
        tree,
    }
}

pub fn solve(inst: &Instance, method: Method) -> Result<SolveReport, SolveError> {
    match method {
        Method::Sweep => solve_sweep(inst),
        Method::Bisect => solve_bisect(inst),
    }
}

pub fn solve_sweep(inst: &Instance) -> Result<SolveReport, SolveError> {
    let start = Instant::now();
    if inst.num_terminals() == 1 {
        return Ok(trivial_report(start, Method::Sweep));
    }
    let edges = build_edge_list(inst);
    let mut last_cost = Weight::INFINITE;
    for (index, &t) in edges.distinct_lengths().iter().enumerate() {
        let probe = probe(inst, &edges, t);
        if probe.is_feasible(inst.budget()) {
            return Ok(SolveReport {
                tree: construct_k_st(inst, &probe.tree, &probe.paths, t),
                threshold_index: Some(index),
                probes: index + 1,
                elapsed: start.elapsed(),
                method: Method::Sweep,
            });
        }
        last_cost = probe.tree.normalized_cost;
    }
    Err(SolveError::Infeasible {
        budget: inst.budget(),
        final_cost: last_cost,
    })
}

/// Binary search over the distinct lengths for the first threshold with
/// `C(T) ≤ k`. Relies on feasibility being monotone in the threshold.
pub fn solve_bisect(inst: &Instance) -> Result<SolveReport, SolveError> {
    let start = Instant::now();
    if inst.num_terminals() == 1 {
        return Ok(trivial_report(start, Method::Bisect));
    }
    let edges = build_edge_list(inst);
    let lengths = edges.distinct_lengths();

    let (mut lo, mut hi) = (0, lengths.len());
    let mut probes = 0;
    let mut accepted: Option<Probe> = None;
    let mut last_cost = Weight::INFINITE;
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        let p = probe(inst, &edges, lengths[mid]);
        probes += 1;
        if p.is_feasible(inst.budget()) {
            hi = mid;
            accepted = Some(p);
        } else {
            if mid + 1 == lengths.len() {
                last_cost = p.tree.normalized_cost;
            }
            lo = mid + 1;
        }
    }

    match accepted {
        Some(p) if lo < lengths.len() => {
            debug_assert_eq!(p.threshold, lengths[lo]);
            Ok(SolveReport {
                tree: construct_k_st(inst, &p.tree, &p.paths, p.threshold),
                threshold_index: Some(lo),
                probes,
                elapsed: start.elapsed(),
                method: Method::Bisect,
            })
        }
        _ => Err(SolveError::Infeasible {
            budget: inst.budget(),
            final_cost: last_cost,
        }),
    }
}

fn trivial_report(start: Instant, method: Method) -> SolveReport {
    SolveReport {
        tree: SteinerTree::single_vertex(),
        threshold_index: None,
        probes: 0,
        elapsed: start.elapsed(),
        method,
    }
}

/// Turns an accepted terminal tree into a Steiner tree.
///
/// For every tree edge `(p, q)` with shortest Steiner path
/// `p, s1, …, s_w, q`, keeps `s2, s4, …, s_{2⌊w/2⌋}` and joins
/// `p → s2 → s4 → … → q` by direct edges, each of which skips at most one
/// path vertex and is therefore no longer than `2 · threshold`. Chains that
/// share Steiner points are merged and any resulting cycle loses its longest
/// edge.
pub fn construct_k_st(
    inst: &Instance,
    tree: &TerminalTree,
    paths: &PathTable,
    threshold: f64,
) -> SteinerTree {
    assert!(tree.connected, "terminal tree must span all terminals");
    if inst.num_terminals() == 1 {
        let mut single = SteinerTree::single_vertex();
        single.threshold_used = threshold;
        return single;
    }

    let mut candidates: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
    for e in &tree.edges {
        let path = paths
            .path(e.p, e.q)
            .expect("tree edges have finite Steiner paths");
        let interior = &path[1..path.len() - 1];
        let mut chain = Vec::with_capacity(interior.len() / 2 + 2);
        chain.push(e.p);
        chain.extend(interior.iter().skip(1).step_by(2));
        chain.push(e.q);
        for hop in chain.windows(2) {
            candidates.insert((hop[0].min(hop[1]), hop[0].max(hop[1])));
        }
    }

    let mut edges: Vec<Edge> = candidates
        .into_iter()
        .map(|(u, v)| Edge::new(u, v, inst.dist(u, v)))
        .collect();
    edges.sort_by(Edge::cmp_by_len);

    // Kruskal over the merged chains: equivalent to repeatedly removing the
    // longest edge of a cycle.
    let mut uf = UnionFind::new(inst.num_vertices());
    edges.retain(|e| uf.union(e.u, e.v));

    SteinerTree::from_edges(inst, edges, threshold)
}
