//! Planar points, problem instances and the globally sorted edge list over
//! `P ∪ S`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Position of a vertex in an [`Instance`]: terminals occupy `0..n`, Steiner
/// candidates occupy `n..n + m`.
pub type VertexId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }
}

/// Euclidean distance, evaluated as `sqrt(dx² + dy²)`.
#[inline]
pub fn distance(a: Point, b: Point) -> f64 {
    let dx = a.x - b.x;
    let dy = a.y - b.y;
    (dx * dx + dy * dy).sqrt()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("an instance needs at least one terminal")]
    NoTerminals,
    #[error("budget k = {budget} exceeds the number of Steiner candidates ({steiners})")]
    BudgetTooLarge { budget: usize, steiners: usize },
    #[error("vertex {id} has a non-finite coordinate")]
    NonFinite { id: VertexId },
}

/// A k-BST problem: terminals `P`, Steiner candidates `S` and budget `k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    terminals: Vec<Point>,
    steiners: Vec<Point>,
    budget: usize,
}

impl Instance {
    pub fn new(
        terminals: Vec<Point>,
        steiners: Vec<Point>,
        budget: usize,
    ) -> Result<Self, InstanceError> {
        if terminals.is_empty() {
            return Err(InstanceError::NoTerminals);
        }
        if budget > steiners.len() {
            return Err(InstanceError::BudgetTooLarge {
                budget,
                steiners: steiners.len(),
            });
        }
        if let Some(id) = terminals
            .iter()
            .chain(steiners.iter())
            .position(|p| !p.is_finite())
        {
            return Err(InstanceError::NonFinite { id });
        }
        Ok(Instance {
            terminals,
            steiners,
            budget,
        })
    }

    pub fn terminals(&self) -> &[Point] {
        &self.terminals
    }

    pub fn steiners(&self) -> &[Point] {
        &self.steiners
    }

    pub fn budget(&self) -> usize {
        self.budget
    }

    /// Number of terminals, `n`.
    pub fn num_terminals(&self) -> usize {
        self.terminals.len()
    }

    /// Number of Steiner candidates, `m`.
    pub fn num_steiners(&self) -> usize {
        self.steiners.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.terminals.len() + self.steiners.len()
    }

    pub fn is_terminal(&self, v: VertexId) -> bool {
        v < self.terminals.len()
    }

    pub fn is_steiner(&self, v: VertexId) -> bool {
        v >= self.terminals.len() && v < self.num_vertices()
    }

    pub fn point(&self, v: VertexId) -> Point {
        let n = self.terminals.len();
        if v < n {
            self.terminals[v]
        } else {
            self.steiners[v - n]
        }
    }

    pub fn points(&self) -> impl Iterator<Item = Point> + '_ {
        self.terminals.iter().chain(self.steiners.iter()).copied()
    }

    pub fn dist(&self, u: VertexId, v: VertexId) -> f64 {
        distance(self.point(u), self.point(v))
    }

    /// Returns a copy with a different budget.
    pub fn with_budget(&self, budget: usize) -> Result<Self, InstanceError> {
        Instance::new(self.terminals.clone(), self.steiners.clone(), budget)
    }
}

/// An undirected edge with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub len: f64,
}

impl Edge {
    /// Builds an edge between `a` and `b`, normalising the endpoint order.
    pub fn new(a: VertexId, b: VertexId, len: f64) -> Self {
        Edge {
            u: a.min(b),
            v: a.max(b),
            len,
        }
    }

    /// Total order used everywhere edges are sorted: length, then endpoint ids.
    pub fn cmp_by_len(&self, other: &Edge) -> Ordering {
        self.len
            .total_cmp(&other.len)
            .then(self.u.cmp(&other.u))
            .then(self.v.cmp(&other.v))
    }
}

/// All pairs of `P ∪ S`, sorted by length with ties broken by `(min id, max id)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    edges: Vec<Edge>,
    distinct_lengths: Vec<f64>,
}

impl EdgeList {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Ascending distinct edge lengths: the candidate thresholds.
    pub fn distinct_lengths(&self) -> &[f64] {
        &self.distinct_lengths
    }

    /// The prefix of edges whose length is at most `threshold`.
    pub fn up_to(&self, threshold: f64) -> &[Edge] {
        let end = self.edges.partition_point(|e| e.len <= threshold);
        &self.edges[..end]
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

pub fn build_edge_list(inst: &Instance) -> EdgeList {
    let total = inst.num_vertices();
    let mut edges = Vec::with_capacity(total * total.saturating_sub(1) / 2);
    for u in 0..total {
        let pu = inst.point(u);
        for v in (u + 1)..total {
            edges.push(Edge::new(u, v, distance(pu, inst.point(v))));
        }
    }
    edges.sort_unstable_by(Edge::cmp_by_len);

    let mut distinct_lengths: Vec<f64> = edges.iter().map(|e| e.len).collect();
    distinct_lengths.dedup();

    EdgeList {
        edges,
        distinct_lengths,
    }
}
