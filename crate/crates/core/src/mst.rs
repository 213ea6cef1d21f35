//! Minimum spanning tree of the complete terminal graph under Steiner-count
//! weights, and its normalized weight `C(T) = Σ ⌊w(e)/2⌋`.

use serde::Serialize;

use crate::paths::{Weight, WeightMatrix};

/// Disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the sets of `a` and `b`; returns false if they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub fn same(&mut self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    pub fn components(&self) -> usize {
        self.components
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TerminalEdge {
    pub p: usize,
    pub q: usize,
    pub w: Weight,
}

/// Spanning tree (or forest, when disconnected) of the terminal graph `G_P`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TerminalTree {
    pub edges: Vec<TerminalEdge>,
    pub normalized_cost: Weight,
    pub connected: bool,
}

/// `Σ ⌊w/2⌋` over the given weights; `∞` if any weight is infinite.
pub fn normalized_weight(weights: impl IntoIterator<Item = Weight>) -> Weight {
    weights
        .into_iter()
        .fold(Weight::ZERO, |acc, w| acc.saturating_add(w.halved()))
}

/// Kruskal over the finite-weight terminal pairs, ordered by
/// `(w, min id, max id)`.
pub fn terminal_mst(weights: &WeightMatrix) -> TerminalTree {
    let n = weights.size();
    let mut candidates: Vec<TerminalEdge> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for p in 0..n {
        for q in (p + 1)..n {
            let w = weights.get(p, q);
            if w.is_finite() {
                candidates.push(TerminalEdge { p, q, w });
            }
        }
    }
    candidates.sort_unstable_by_key(|e| (e.w, e.p, e.q));

    let mut uf = UnionFind::new(n);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for e in candidates {
        if uf.union(e.p, e.q) {
            edges.push(e);
            if edges.len() + 1 == n {
                break;
            }
        }
    }

    let connected = n == 0 || edges.len() + 1 == n;
    let normalized_cost = if connected {
        normalized_weight(edges.iter().map(|e| e.w))
    } else {
        Weight::INFINITE
    };
    TerminalTree {
        edges,
        normalized_cost,
        connected,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(v: u64) -> Weight {
        Weight::finite(v)
    }

    #[test]
    fn single_pair() {
        let m = WeightMatrix::from_fn(2, |p, q| if p == q { Weight::ZERO } else { w(1) });
        let t = terminal_mst(&m);
        assert!(t.connected);
        assert_eq!(
            t.edges,
            vec![TerminalEdge {
                p: 0,
                q: 1,
                w: w(1)
            }]
        );
        assert_eq!(t.normalized_cost, Weight::ZERO);
    }

    #[test]
    fn walkthrough_weights() {
        // a=0, b=1, c=2, d=3 with a–b 3, d–c 2, b–c 3; every other pair is worse.
        let table = [[0, 3, 5, 6], [3, 0, 3, 5], [5, 3, 0, 2], [6, 5, 2, 0]];
        let m = WeightMatrix::from_fn(4, |p, q| w(table[p][q]));
        let t = terminal_mst(&m);
        let mut got: Vec<u64> = t.edges.iter().map(|e| e.w.get().unwrap()).collect();
        got.sort();
        assert_eq!(got, vec![2, 3, 3]);
        assert_eq!(t.normalized_cost, w(3));
        assert_eq!(normalized_weight([w(3), w(2), w(3)]), w(3));
    }

    #[test]
    fn disconnected() {
        let m = WeightMatrix::from_fn(3, |p, q| {
            if p == q {
                Weight::ZERO
            } else {
                Weight::INFINITE
            }
        });
        let t = terminal_mst(&m);
        assert!(!t.connected);
        assert!(t.edges.is_empty());
        assert_eq!(t.normalized_cost, Weight::INFINITE);
    }

    #[test]
    fn single_terminal_is_trivially_connected() {
        let t = terminal_mst(&WeightMatrix::from_fn(1, |_, _| Weight::ZERO));
        assert!(t.connected);
        assert_eq!(t.normalized_cost, Weight::ZERO);
    }

    #[test]
    fn ties_break_by_ids() {
        let m = WeightMatrix::from_fn(3, |p, q| if p == q { Weight::ZERO } else { w(4) });
        let t = terminal_mst(&m);
        let pairs: Vec<_> = t.edges.iter().map(|e| (e.p, e.q)).collect();
        assert_eq!(pairs, vec![(0, 1), (0, 2)]);
    }

    /// Every spanning tree of the complete graph on `n` vertices, as edge
    /// index sets into `pairs`.
    fn all_spanning_trees(n: usize, pairs: &[(usize, usize)]) -> Vec<Vec<usize>> {
        fn rec(
            n: usize,
            pairs: &[(usize, usize)],
            start: usize,
            chosen: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if chosen.len() + 1 == n {
                let mut uf = UnionFind::new(n);
                if chosen.iter().all(|&i| uf.union(pairs[i].0, pairs[i].1)) {
                    out.push(chosen.clone());
                }
                return;
            }
            for i in start..pairs.len() {
                chosen.push(i);
                rec(n, pairs, i + 1, chosen, out);
                chosen.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, pairs, 0, &mut Vec::new(), &mut out);
        out
    }

    fn weight_matrix() -> impl Strategy<Value = WeightMatrix> {
        (2usize..=6).prop_flat_map(|n| {
            prop::collection::vec(
                prop_oneof![4 => (0u64..6).prop_map(Weight::finite), 1 => Just(Weight::INFINITE)],
                n * n,
            )
            .prop_map(move |raw| {
                WeightMatrix::from_fn(n, |p, q| match p.cmp(&q) {
                    std::cmp::Ordering::Equal => Weight::ZERO,
                    std::cmp::Ordering::Less => raw[p * n + q],
                    std::cmp::Ordering::Greater => raw[q * n + p],
                })
            })
        })
    }

    proptest! {
        #[test]
        fn mst_dominates_every_spanning_tree(m in weight_matrix()) {
            let n = m.size();
            let mst = terminal_mst(&m);

            let mut uf = UnionFind::new(n);
            for e in &mst.edges {
                prop_assert!(uf.union(e.p, e.q));
            }

            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|p| ((p + 1)..n).map(move |q| (p, q)))
                .filter(|&(p, q)| m.get(p, q).is_finite())
                .collect();
            let trees = all_spanning_trees(n, &pairs);
            prop_assert_eq!(mst.connected, !trees.is_empty());
            if !mst.connected {
                prop_assert_eq!(mst.normalized_cost, Weight::INFINITE);
                return Ok(());
            }
            prop_assert_eq!(mst.edges.len(), n - 1);
            prop_assert_eq!(uf.components(), 1);

            let mut mst_sorted: Vec<Weight> = mst.edges.iter().map(|e| e.w).collect();
            mst_sorted.sort();
            let mut best_cost = Weight::INFINITE;
            for tree in &trees {
                let mut sorted: Vec<Weight> = tree.iter().map(|&i| m.get(pairs[i].0, pairs[i].1)).collect();
                sorted.sort();
                for (a, b) in mst_sorted.iter().zip(&sorted) {
                    prop_assert!(a <= b);
                }
                best_cost = best_cost.min(normalized_weight(sorted));
            }
            prop_assert_eq!(mst.normalized_cost, best_cost);
        }
    }
}
