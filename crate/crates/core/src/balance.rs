//! Balance and 2-clusterability of signed graphs.
//!
//! A signed graph is balanced when every simple cycle carries an even number
//! of negative edges. [`is_balanced_oracle`] checks that definition literally
//! by enumerating cycles; [`is_balanced_fast`] propagates a two-camp colouring
//! instead and is exact on any size.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Result;
use crate::graph::{Bipartition, Cycle, Edge, Graph};
use crate::labeling::{Sign, SignedLabeledGraph};

/// Sign accounting for one simple cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSignSummary {
    pub cycle: Cycle,
    pub negative_edge_count: usize,
    pub sign_product: Sign,
}

/// Cycle-by-cycle verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub balanced: bool,
    pub cycles: Vec<CycleSignSummary>,
}

/// Edge positions of `cycle`'s consecutive vertex pairs, closing edge last.
pub fn cycle_edges(g: &Graph, cycle: &[usize]) -> Vec<usize> {
    (0..cycle.len())
        .map(|i| {
            g.edge_index(cycle[i], cycle[(i + 1) % cycle.len()])
                .expect("cycle vertices are adjacent")
        })
        .collect()
}

/// Balance by enumerating every simple cycle. `signs` is indexed like [`Graph::edges`].
pub fn is_balanced_oracle(g: &Graph, signs: &[Sign], bound: usize) -> Result<OracleVerdict> {
    let cycles = g.simple_cycles(bound)?;
    let summaries: Vec<CycleSignSummary> = cycles
        .into_iter()
        .map(|cycle| {
            let negative_edge_count = cycle_edges(g, &cycle)
                .into_iter()
                .filter(|&i| signs[i].is_negative())
                .count();
            CycleSignSummary {
                cycle,
                negative_edge_count,
                sign_product: Sign::of_cardinality(negative_edge_count),
            }
        })
        .collect();
    Ok(OracleVerdict {
        balanced: summaries.iter().all(|c| c.sign_product == Sign::Positive),
        cycles: summaries,
    })
}

/// Balance by parity propagation. Returns the two camps when balanced: every
/// negative edge crosses, every positive edge stays inside a camp.
pub fn is_balanced_fast(g: &Graph, signs: &[Sign]) -> Option<Bipartition> {
    let n = g.vertex_count();
    let mut side: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        queue.push_back(s);
        while let Some(x) = queue.pop_front() {
            let sx = side[x].unwrap();
            for &y in g.neighbors(x) {
                let flip = signs[g.edge_index(x, y).unwrap()].is_negative();
                let want = sx ^ flip;
                match side[y] {
                    None => {
                        side[y] = Some(want);
                        queue.push_back(y);
                    }
                    Some(sy) if sy != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let (mut left, mut right) = (Vec::new(), Vec::new());
    for (v, s) in side.into_iter().enumerate() {
        if s == Some(true) {
            right.push(v);
        } else {
            left.push(v);
        }
    }
    Some(Bipartition { left, right })
}

/// Precomputed cycles of a fixed graph, for checking many sign patterns.
#[derive(Debug, Clone)]
pub struct CycleTable {
    cycles: Vec<Vec<usize>>,
}

impl CycleTable {
    pub fn new(g: &Graph, bound: usize) -> Result<Self> {
        Ok(CycleTable {
            cycles: g
                .simple_cycles(bound)?
                .iter()
                .map(|c| cycle_edges(g, c))
                .collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    /// Same verdict as [`is_balanced_oracle`], stopping at the first odd cycle.
    pub fn is_balanced(&self, signs: &[Sign]) -> bool {
        self.cycles
            .iter()
            .all(|c| c.iter().filter(|&&i| signs[i].is_negative()).count() % 2 == 0)
    }

    /// True iff some cycle carries exactly one negative edge.
    pub fn has_single_negative_cycle(&self, signs: &[Sign]) -> bool {
        self.cycles
            .iter()
            .any(|c| c.iter().filter(|&&i| signs[i].is_negative()).count() == 1)
    }
}

/// Outcome of the 2-clusterability check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Clustering {
    /// Components of the positive subgraph; no negative edge falls inside one.
    Clusterable { clusters: Vec<Vec<usize>> },
    /// A simple cycle whose only negative edge is `negative_edge`.
    NotClusterable { cycle: Cycle, negative_edge: Edge },
}

impl Clustering {
    pub fn is_clusterable(&self) -> bool {
        matches!(self, Clustering::Clusterable { .. })
    }
}

/// Clusters are the components of the positive-edge subgraph; the graph is
/// clusterable iff no negative edge joins two vertices of the same cluster.
pub fn clusterability(g: &Graph, signs: &[Sign]) -> Clustering {
    let n = g.vertex_count();
    let mut cluster = vec![usize::MAX; n];
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for s in 0..n {
        if cluster[s] != usize::MAX {
            continue;
        }
        let id = clusters.len();
        cluster[s] = id;
        let mut members = vec![s];
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in g.neighbors(x) {
                if cluster[y] == usize::MAX && !signs[g.edge_index(x, y).unwrap()].is_negative() {
                    cluster[y] = id;
                    members.push(y);
                    stack.push(y);
                }
            }
        }
        members.sort_unstable();
        clusters.push(members);
    }
    for (i, e) in g.edges().iter().enumerate() {
        if signs[i].is_negative() && cluster[e.u] == cluster[e.v] {
            let path = positive_path(g, signs, e.u, e.v);
            return Clustering::NotClusterable {
                cycle: canonical_cycle(path),
                negative_edge: *e,
            };
        }
    }
    Clustering::Clusterable { clusters }
}

/// Shortest all-positive path from `from` to `to` (inclusive).
fn positive_path(g: &Graph, signs: &[Sign], from: usize, to: usize) -> Vec<usize> {
    let mut prev = vec![usize::MAX; g.vertex_count()];
    prev[from] = from;
    let mut queue = VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            break;
        }
        for &y in g.neighbors(x) {
            if prev[y] == usize::MAX && !signs[g.edge_index(x, y).unwrap()].is_negative() {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    let mut path = vec![to];
    let mut x = to;
    while x != from {
        x = prev[x];
        path.push(x);
    }
    path.reverse();
    path
}

/// Rotates to the smallest vertex and orients so the second vertex is below the last.
fn canonical_cycle(mut c: Vec<usize>) -> Cycle {
    let pos = (0..c.len()).min_by_key(|&i| c[i]).unwrap();
    c.rotate_left(pos);
    if c.len() > 2 && c[1] > c[c.len() - 1] {
        c[1..].reverse();
    }
    c
}

impl SignedLabeledGraph {
    pub fn is_balanced_oracle(&self, bound: usize) -> Result<OracleVerdict> {
        is_balanced_oracle(self.graph(), self.signs(), bound)
    }

    pub fn is_balanced_fast(&self) -> Option<Bipartition> {
        is_balanced_fast(self.graph(), self.signs())
    }

    pub fn is_balanced(&self) -> bool {
        self.is_balanced_fast().is_some()
    }

    pub fn clusterability(&self) -> Clustering {
        clusterability(self.graph(), self.signs())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::DEFAULT_CYCLE_BOUND;
    use Sign::{Negative as N, Positive as P};

    fn g(edges: &[(&str, &str)]) -> Graph {
        Graph::from_edges([], edges.iter().copied()).unwrap()
    }

    fn triangle() -> Graph {
        g(&[("a", "b"), ("b", "c"), ("a", "c")])
    }

    fn c4() -> Graph {
        g(&[("a", "b"), ("b", "c"), ("c", "d"), ("a", "d")])
    }

    #[test]
    fn oracle_examples() {
        let tree = g(&[("a", "b"), ("b", "c"), ("b", "d")]);
        let v = is_balanced_oracle(&tree, &[N, N, P], DEFAULT_CYCLE_BOUND).unwrap();
        assert!(v.balanced && v.cycles.is_empty());

        let v = is_balanced_oracle(&triangle(), &[N, P, P], DEFAULT_CYCLE_BOUND).unwrap();
        assert!(!v.balanced);
        assert_eq!(v.cycles[0].negative_edge_count, 1);
        assert_eq!(v.cycles[0].sign_product, N);

        let v = is_balanced_oracle(&c4(), &[N, P, N, P], DEFAULT_CYCLE_BOUND).unwrap();
        assert!(v.balanced);
        assert_eq!(v.cycles[0].negative_edge_count, 2);
    }

    #[test]
    fn fast_examples() {
        let t = triangle();
        assert_eq!(
            is_balanced_fast(&t, &[P, P, P]),
            Some(Bipartition {
                left: vec![0, 1, 2],
                right: vec![]
            })
        );
        let k2 = g(&[("u", "v")]);
        assert_eq!(
            is_balanced_fast(&k2, &[N]),
            Some(Bipartition {
                left: vec![0],
                right: vec![1]
            })
        );
        assert_eq!(is_balanced_fast(&t, &[P, N, P]), None);
    }

    #[test]
    fn clusterability_examples() {
        let t = triangle();
        match clusterability(&t, &[N, N, N]) {
            Clustering::Clusterable { clusters } => assert_eq!(clusters.len(), 3),
            other => panic!("{other:?}"),
        }
        match clusterability(&t, &[P, N, P]) {
            Clustering::NotClusterable {
                cycle,
                negative_edge,
            } => {
                assert_eq!(cycle, vec![0, 1, 2]);
                assert_eq!(negative_edge, Edge::new(0, 2));
            }
            other => panic!("{other:?}"),
        }
        // two positive triangles joined by a negative bridge c-d
        let two = g(&[
            ("a", "b"),
            ("b", "c"),
            ("a", "c"),
            ("d", "e"),
            ("e", "f"),
            ("d", "f"),
            ("c", "d"),
        ]);
        let signs: Vec<Sign> = two
            .edges()
            .iter()
            .map(|e| if *e == Edge::new(2, 3) { N } else { P })
            .collect();
        match clusterability(&two, &signs) {
            Clustering::Clusterable { clusters } => {
                assert_eq!(clusters, vec![vec![0, 1, 2], vec![3, 4, 5]])
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn witness_cycle_has_one_negative_edge() {
        let k4 = g(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ]);
        let signs = [P, P, P, P, P, N];
        let Clustering::NotClusterable { cycle, .. } = clusterability(&k4, &signs) else {
            panic!()
        };
        let neg = cycle_edges(&k4, &cycle)
            .into_iter()
            .filter(|&i| signs[i].is_negative())
            .count();
        assert_eq!(neg, 1);
        assert!(CycleTable::new(&k4, 12)
            .unwrap()
            .has_single_negative_cycle(&signs));
    }
}
