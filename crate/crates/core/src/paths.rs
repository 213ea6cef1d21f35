//! Threshold graphs and minimum-Steiner-count paths between terminals.
//!
//! For a length cutoff `t`, the threshold graph keeps every pair of vertices
//! at distance at most `t`. A *Steiner path* between two terminals is a path
//! in that graph whose interior vertices are all Steiner candidates; its
//! weight is the number of interior vertices. Paths never pass through a
//! third terminal.

use std::collections::VecDeque;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::geometry::{EdgeList, Instance, VertexId};

/// A non-negative count extended with `∞`.
///
/// `∞` compares strictly greater than every finite value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(u64);

impl Weight {
    pub const ZERO: Weight = Weight(0);
    pub const INFINITE: Weight = Weight(u64::MAX);

    pub const fn finite(value: u64) -> Self {
        assert!(value != u64::MAX);
        Weight(value)
    }

    pub fn is_finite(self) -> bool {
        self != Weight::INFINITE
    }

    pub fn get(self) -> Option<u64> {
        self.is_finite().then_some(self.0)
    }

    /// `⌊w / 2⌋`, keeping `∞` infinite.
    pub fn halved(self) -> Weight {
        if self.is_finite() {
            Weight(self.0 / 2)
        } else {
            self
        }
    }

    pub fn saturating_add(self, other: Weight) -> Weight {
        if self.is_finite() && other.is_finite() {
            Weight(self.0.saturating_add(other.0).min(u64::MAX - 1))
        } else {
            Weight::INFINITE
        }
    }
}

impl From<u64> for Weight {
    fn from(value: u64) -> Self {
        Weight::finite(value)
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.get() {
            Some(w) => write!(f, "{w}"),
            None => f.write_str("inf"),
        }
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self.get() {
            Some(w) => serializer.serialize_some(&w),
            None => serializer.serialize_none(),
        }
    }
}

/// `G_t`: the subgraph of the complete graph on `P ∪ S` with edges of length
/// at most `threshold`. Neighbour lists are sorted by id.
#[derive(Debug, Clone, PartialEq)]
pub struct ThresholdGraph {
    threshold: f64,
    adjacency: Vec<Vec<VertexId>>,
}

impl ThresholdGraph {
    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adjacency[v]
    }

    pub fn num_vertices(&self) -> usize {
        self.adjacency.len()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }
}

pub fn build_threshold_graph(inst: &Instance, edges: &EdgeList, threshold: f64) -> ThresholdGraph {
    let mut adjacency = vec![Vec::new(); inst.num_vertices()];
    for e in edges.up_to(threshold) {
        adjacency[e.u].push(e.v);
        adjacency[e.v].push(e.u);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }
    ThresholdGraph {
        threshold,
        adjacency,
    }
}

/// Square `n × n` matrix of terminal-pair weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMatrix {
    n: usize,
    data: Vec<Weight>,
}

impl WeightMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Weight) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for p in 0..n {
            for q in 0..n {
                data.push(f(p, q));
            }
        }
        WeightMatrix { n, data }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, p: usize, q: usize) -> Weight {
        self.data[p * self.n + q]
    }
}

/// Minimum Steiner counts `w(p, q)` between all terminal pairs at one
/// threshold, plus one shortest-path tree per source terminal.
#[derive(Debug, Clone)]
pub struct PathTable {
    threshold: f64,
    weights: WeightMatrix,
    // pred[p][v]: predecessor of v on the canonical shortest Steiner path from terminal p.
    pred: Vec<Vec<Option<VertexId>>>,
}

impl PathTable {
    pub fn threshold(&self) -> f64 {
        self.threshold
    }

    pub fn weights(&self) -> &WeightMatrix {
        &self.weights
    }

    pub fn weight(&self, p: VertexId, q: VertexId) -> Weight {
        self.weights.get(p, q)
    }

    /// Vertex sequence `p, s1, …, s_w, q` of the canonical path, or `None` if
    /// `w(p, q) = ∞`.
    pub fn path(&self, p: VertexId, q: VertexId) -> Option<Vec<VertexId>> {
        if p == q {
            return Some(vec![p]);
        }
        if !self.weight(p, q).is_finite() {
            return None;
        }
        let tree = &self.pred[p];
        let mut path = vec![q];
        let mut cur = q;
        while let Some(prev) = tree[cur] {
            path.push(prev);
            cur = prev;
        }
        debug_assert_eq!(cur, p);
        path.reverse();
        Some(path)
    }
}

/// Computes `w(p, q)` for every terminal pair by a breadth-first search from
/// each terminal in which only Steiner vertices are expanded.
///
/// Each Steiner vertex costs one to enter and terminals cost nothing, so the
/// level of a Steiner vertex is its minimum Steiner count from the source and
/// `w(p, q)` is the smallest level among the expandable neighbours of `q`.
/// Among equal-cost predecessors the smallest id wins.
pub fn all_pairs_steiner_paths(g: &ThresholdGraph, inst: &Instance) -> PathTable {
    let n = inst.num_terminals();
    let mut rows = Vec::with_capacity(n);
    let mut pred = Vec::with_capacity(n);
    for source in 0..n {
        let (row, tree) = single_source(g, inst, source);
        rows.push(row);
        pred.push(tree);
    }
    PathTable {
        threshold: g.threshold(),
        weights: WeightMatrix::from_fn(n, |p, q| rows[p][q]),
        pred,
    }
}

fn single_source(
    g: &ThresholdGraph,
    inst: &Instance,
    source: VertexId,
) -> (Vec<Weight>, Vec<Option<VertexId>>) {
    let total = inst.num_vertices();
    let n = inst.num_terminals();

    // Steiner count from the source to each expandable vertex (source + Steiner points).
    let mut level: Vec<Option<u64>> = vec![None; total];
    level[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let next = level[u].unwrap() + 1;
        for &v in g.neighbors(u) {
            if inst.is_steiner(v) && level[v].is_none() {
                level[v] = Some(next);
                queue.push_back(v);
            }
        }
    }

    // Cost of a path ending at v: the level of its predecessor, plus one if v is Steiner.
    let expandable = |u: VertexId| u == source || inst.is_steiner(u);
    let mut pred = vec![None; total];
    for v in 0..total {
        if v == source {
            continue;
        }
        let best = g
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| expandable(u))
            .filter_map(|u| level[u].map(|l| (l, u)))
            .min();
        if let Some((l, u)) = best {
            if inst.is_terminal(v) || level[v] == Some(l + 1) {
                pred[v] = Some(u);
            }
        }
    }

    let row = (0..n)
        .map(|q| {
            if q == source {
                Weight::ZERO
            } else {
                pred[q]
                    .and_then(|u| level[u])
                    .map_or(Weight::INFINITE, Weight::finite)
            }
        })
        .collect();
    (row, pred)
}
