use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::geometry::{Edge, Instance, VertexId};
use crate::mst::UnionFind;

/// A Steiner tree of the terminals using some of the Steiner candidates.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SteinerTree {
    /// Steiner vertex ids in the tree, ascending.
    pub chosen_steiners: Vec<VertexId>,
    /// Tree edges, ordered by `(len, u, v)`.
    pub edges: Vec<Edge>,
    /// Longest edge length; 0 for a single-vertex tree.
    pub bottleneck: f64,
    /// Length cutoff the tree was built for.
    pub threshold_used: f64,
}

impl SteinerTree {
    pub(crate) fn single_vertex() -> Self {
        SteinerTree {
            chosen_steiners: Vec::new(),
            edges: Vec::new(),
            bottleneck: 0.0,
            threshold_used: 0.0,
        }
    }

    /// Assembles a tree from its edges, sorting them and collecting the
    /// Steiner vertices they touch.
    pub(crate) fn from_edges(inst: &Instance, mut edges: Vec<Edge>, threshold_used: f64) -> Self {
        edges.sort_by(Edge::cmp_by_len);
        let chosen: BTreeSet<VertexId> = edges
            .iter()
            .flat_map(|e| [e.u, e.v])
            .filter(|&v| inst.is_steiner(v))
            .collect();
        let bottleneck = edges.iter().map(|e| e.len).fold(0.0, f64::max);
        SteinerTree {
            chosen_steiners: chosen.into_iter().collect(),
            edges,
            bottleneck,
            threshold_used,
        }
    }

    pub fn num_steiners(&self) -> usize {
        self.chosen_steiners.len()
    }

    /// The edge realising the bottleneck (last in sort order), if any.
    pub fn bottleneck_edge(&self) -> Option<&Edge> {
        self.edges.last()
    }

    /// Checks every structural invariant against `inst`: spanning exactly
    /// `P ∪ chosen`, acyclic, within budget, consistent lengths and
    /// `bottleneck ≤ 2 · threshold_used`.
    pub fn validate(&self, inst: &Instance) -> Result<(), TreeViolation> {
        let n = inst.num_terminals();
        let mut members: BTreeSet<VertexId> = (0..n).collect();
        let mut previous = None;
        for &s in &self.chosen_steiners {
            if !inst.is_steiner(s) {
                return Err(TreeViolation::NotASteinerPoint(s));
            }
            if previous.is_some_and(|p| p >= s) {
                return Err(TreeViolation::UnsortedSteiners);
            }
            previous = Some(s);
            members.insert(s);
        }
        if self.chosen_steiners.len() > inst.budget() {
            return Err(TreeViolation::OverBudget {
                used: self.chosen_steiners.len(),
                budget: inst.budget(),
            });
        }
        if self.edges.len() + 1 != members.len() {
            return Err(TreeViolation::EdgeCount {
                edges: self.edges.len(),
                vertices: members.len(),
            });
        }

        let mut uf = UnionFind::new(inst.num_vertices());
        let mut max_len: f64 = 0.0;
        let mut touched = BTreeSet::new();
        for e in &self.edges {
            if !members.contains(&e.u) || !members.contains(&e.v) {
                return Err(TreeViolation::ForeignVertex(*e));
            }
            if e.u >= e.v || e.len != inst.dist(e.u, e.v) {
                return Err(TreeViolation::BadEdge(*e));
            }
            if !uf.union(e.u, e.v) {
                return Err(TreeViolation::Cycle(*e));
            }
            touched.insert(e.u);
            touched.insert(e.v);
            max_len = max_len.max(e.len);
        }
        // n - 1 + |chosen| acyclic edges over the member set span it, unless a
        // member is isolated, which only a single-vertex tree allows.
        if members.len() > 1 && touched != members {
            return Err(TreeViolation::NotSpanning);
        }
        if max_len != self.bottleneck {
            return Err(TreeViolation::BottleneckMismatch {
                reported: self.bottleneck,
                actual: max_len,
            });
        }
        if self.bottleneck > 2.0 * self.threshold_used {
            return Err(TreeViolation::BoundExceeded {
                bottleneck: self.bottleneck,
                threshold: self.threshold_used,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum TreeViolation {
    #[error("vertex {0} is listed as a Steiner point but is not one")]
    NotASteinerPoint(VertexId),
    #[error("chosen Steiner points are not strictly ascending")]
    UnsortedSteiners,
    #[error("{used} Steiner points used, budget is {budget}")]
    OverBudget { used: usize, budget: usize },
    #[error("{edges} edges cannot form a tree on {vertices} vertices")]
    EdgeCount { edges: usize, vertices: usize },
    #[error("edge {0:?} touches a vertex outside the tree")]
    ForeignVertex(Edge),
    #[error("edge {0:?} has inconsistent endpoints or length")]
    BadEdge(Edge),
    #[error("edge {0:?} closes a cycle")]
    Cycle(Edge),
    #[error("tree does not span its vertex set")]
    NotSpanning,
    #[error("reported bottleneck {reported} but longest edge is {actual}")]
    BottleneckMismatch { reported: f64, actual: f64 },
    #[error("bottleneck {bottleneck} exceeds twice the threshold {threshold}")]
    BoundExceeded { bottleneck: f64, threshold: f64 },
}
