//! Simple undirected graphs with string vertex ids.
//!
//! Vertices are stored in lexicographic order of their ids, so every index
//! based traversal is deterministic. Edges are kept as sorted index pairs.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Default vertex bound for simple-cycle enumeration.
pub const DEFAULT_CYCLE_BOUND: usize = 12;

/// An undirected edge between vertex indices, normalized so that `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
}

impl Edge {
    pub fn new(a: usize, b: usize) -> Self {
        if a <= b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    /// The endpoint opposite to `x`.
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }
}

/// A simple cycle as a vertex sequence, starting at its smallest vertex and
/// oriented so that the second vertex is smaller than the last.
pub type Cycle = Vec<usize>;

/// Two-colouring of a graph's vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// Checks that a vertex id can be written in the text formats.
pub fn valid_vertex_id(id: &str) -> bool {
    !id.is_empty()
        && !id.chars().any(|c| {
            c.is_whitespace() || matches!(c, '#' | ':' | ',' | '{' | '}' | '=' | '[' | ']')
        })
}

#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    vertices: BTreeSet<String>,
    edges: Vec<(String, String)>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declares a vertex; redeclaring an existing one is a no-op.
    pub fn vertex(&mut self, id: &str) -> &mut Self {
        self.vertices.insert(id.to_string());
        self
    }

    pub fn edge(&mut self, a: &str, b: &str) -> &mut Self {
        self.vertex(a);
        self.vertex(b);
        self.edges.push((a.to_string(), b.to_string()));
        self
    }

    pub fn build(&self) -> Result<Graph> {
        let names: Vec<String> = self.vertices.iter().cloned().collect();
        if let Some(bad) = names.iter().find(|n| !valid_vertex_id(n)) {
            return Err(Error::InvalidVertexId(bad.clone()));
        }
        let index = |n: &str| names.binary_search_by(|x| x.as_str().cmp(n)).unwrap();
        let mut edges = Vec::with_capacity(self.edges.len());
        for (a, b) in &self.edges {
            if a == b {
                return Err(Error::SelfLoop(a.clone()));
            }
            edges.push(Edge::new(index(a), index(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::ParallelEdge(
                names[w[0].u].clone(),
                names[w[0].v].clone(),
            ));
        }
        Ok(Graph::from_parts(names, edges))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    names: Vec<String>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl Graph {
    /// Builds a graph from declared vertices and an edge list. Edge endpoints
    /// are declared implicitly.
    pub fn from_edges<'a, V, E>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = &'a str>,
        E: IntoIterator<Item = (&'a str, &'a str)>,
    {
        let mut b = GraphBuilder::new();
        for v in vertices {
            b.vertex(v);
        }
        for (x, y) in edges {
            b.edge(x, y);
        }
        b.build()
    }

    /// `names` sorted and unique, `edges` sorted, unique, in range.
    pub(crate) fn from_parts(names: Vec<String>, edges: Vec<Edge>) -> Self {
        let mut adjacency = vec![Vec::new(); names.len()];
        for e in &edges {
            adjacency[e.u].push(e.v);
            adjacency[e.v].push(e.u);
        }
        for a in &mut adjacency {
            a.sort_unstable();
        }
        Graph {
            names,
            adjacency,
            edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.names
            .binary_search_by(|x| x.as_str().cmp(id))
            .map_err(|_| Error::UnknownVertex(id.into()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Position of the edge `ab` in [`Graph::edges`].
    pub fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        self.edges.binary_search(&Edge::new(a, b)).ok()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a != b && self.edge_index(a, b).is_some()
    }

    /// Resolves an edge given by vertex ids.
    pub fn find_edge(&self, a: &str, b: &str) -> Result<Edge> {
        let unknown = || Error::UnknownEdge(a.into(), b.into());
        let (x, y) = (
            self.index_of(a).map_err(|_| unknown())?,
            self.index_of(b).map_err(|_| unknown())?,
        );
        self.edge_index(x, y)
            .map(|i| self.edges[i])
            .ok_or_else(unknown)
    }

    pub fn edge_names(&self, e: Edge) -> (&str, &str) {
        (&self.names[e.u], &self.names[e.v])
    }

    pub fn isolated_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.adjacency[v].is_empty())
            .collect()
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertex_count()];
        let mut out = Vec::new();
        for s in 0..self.vertex_count() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &y in &self.adjacency[x] {
                    if !seen[y] {
                        seen[y] = true;
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// A two-colouring with every edge crossing, or `None` if an odd cycle exists.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.vertex_count();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            queue.push_back(s);
            while let Some(x) = queue.pop_front() {
                let cx = colour[x].unwrap();
                for &y in &self.adjacency[x] {
                    match colour[y] {
                        None => {
                            colour[y] = Some(!cx);
                            queue.push_back(y);
                        }
                        Some(cy) if cy == cx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (v, c) in colour.into_iter().enumerate() {
            if c == Some(false) {
                left.push(v);
            } else {
                right.push(v);
            }
        }
        Some(Bipartition { left, right })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Bridges, found with Tarjan's low-link numbering. Sorted.
    pub fn cut_edges(&self) -> Vec<Edge> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut time = 0;
        let mut bridges = Vec::new();
        // (vertex, parent, next neighbour position)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(&mut (x, parent, ref mut pos)) = stack.last_mut() {
                if let Some(&y) = self.adjacency[x].get(*pos) {
                    *pos += 1;
                    if y == parent {
                        continue;
                    }
                    if disc[y] == usize::MAX {
                        disc[y] = time;
                        low[y] = time;
                        time += 1;
                        stack.push((y, x, 0));
                    } else {
                        low[x] = low[x].min(disc[y]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[x]);
                        if low[x] > disc[parent] {
                            bridges.push(Edge::new(parent, x));
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Every simple cycle exactly once, up to rotation and reflection.
    ///
    /// Output is sorted by length, then lexicographically. Fails with
    /// `BOUND_EXCEEDED` when the graph has more than `bound` vertices.
    pub fn simple_cycles(&self, bound: usize) -> Result<Vec<Cycle>> {
        if self.vertex_count() > bound {
            return Err(Error::BoundExceeded {
                what: "vertex count for cycle enumeration",
                actual: self.vertex_count(),
                bound,
            });
        }
        let n = self.vertex_count();
        let mut cycles = Vec::new();
        let mut on_path = vec![false; n];
        let mut path = Vec::with_capacity(n);
        for s in 0..n {
            path.clear();
            path.push(s);
            on_path[s] = true;
            self.extend_cycles(s, &mut path, &mut on_path, &mut cycles);
            on_path[s] = false;
        }
        cycles
            .sort_unstable_by(|a: &Cycle, b: &Cycle| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(cycles)
    }

    fn extend_cycles(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Cycle>,
    ) {
        let last = *path.last().unwrap();
        for &y in &self.adjacency[last] {
            if y == start {
                if path.len() >= 3 && path[1] < last {
                    out.push(path.clone());
                }
            } else if y > start && !on_path[y] {
                on_path[y] = true;
                path.push(y);
                self.extend_cycles(start, path, on_path, out);
                path.pop();
                on_path[y] = false;
            }
        }
    }

    /// True iff two neighbours of `v` are adjacent.
    pub fn in_triangle(&self, v: usize) -> Result<bool> {
        let nbrs = self
            .adjacency
            .get(v)
            .ok_or_else(|| Error::UnknownVertex(v.to_string()))?;
        Ok(nbrs
            .iter()
            .enumerate()
            .any(|(i, &a)| nbrs[i + 1..].iter().any(|&b| self.has_edge(a, b))))
    }

    /// True iff `v` lies on some simple cycle, i.e. some incident edge is not a bridge.
    pub fn on_cycle(&self, v: usize) -> bool {
        let bridges = self.cut_edges();
        self.adjacency[v]
            .iter()
            .any(|&y| bridges.binary_search(&Edge::new(v, y)).is_err())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(edges: &[(&str, &str)]) -> Graph {
        Graph::from_edges([], edges.iter().copied()).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        let names: Vec<String> = (0..n).map(|i| alloc::format!("v{i}")).collect();
        let edges: Vec<(&str, &str)> = (0..n)
            .map(|i| (names[i].as_str(), names[(i + 1) % n].as_str()))
            .collect();
        g(&edges)
    }

    #[test]
    fn builder_errors() {
        assert_eq!(g(&[]).vertex_count(), 0, "empty graph is fine");
        assert_eq!(
            Graph::from_edges([], [("a", "a")]),
            Err(Error::SelfLoop("a".into()))
        );
        assert_eq!(
            Graph::from_edges([], [("a", "b"), ("b", "a")]),
            Err(Error::ParallelEdge("a".into(), "b".into()))
        );
        assert_eq!(
            Graph::from_edges(["x:y"], []),
            Err(Error::InvalidVertexId("x:y".into()))
        );
    }

    #[test]
    fn isolated_vertices_are_kept() {
        let gr = Graph::from_edges(["z"], [("a", "b")]).unwrap();
        assert_eq!(gr.isolated_vertices(), vec![2]);
        assert_eq!(gr.components().len(), 2);
    }

    #[test]
    fn bipartite_examples() {
        let k2 = g(&[("u", "v")]);
        assert_eq!(
            k2.bipartition(),
            Some(Bipartition {
                left: vec![0],
                right: vec![1]
            })
        );
        assert!(!g(&[("a", "b"), ("b", "c"), ("c", "a")]).is_bipartite());
        let c4 = cycle(4);
        let p = c4.bipartition().unwrap();
        for e in c4.edges() {
            assert_ne!(p.left.contains(&e.u), p.left.contains(&e.v));
        }
    }

    #[test]
    fn cut_edge_examples() {
        let path = g(&[("a", "b"), ("b", "c")]);
        assert_eq!(path.cut_edges(), vec![Edge::new(0, 1), Edge::new(1, 2)]);
        let tri = g(&[("a", "b"), ("b", "c"), ("c", "a")]);
        assert!(tri.cut_edges().is_empty());
        let tri_pendant = g(&[("a", "b"), ("b", "c"), ("c", "a"), ("a", "d")]);
        assert_eq!(tri_pendant.cut_edges(), vec![Edge::new(0, 3)]);
    }

    #[test]
    fn cycle_examples() {
        let tree = g(&[("a", "b"), ("a", "c"), ("c", "d")]);
        assert!(tree.simple_cycles(12).unwrap().is_empty());
        let c5 = cycle(5);
        let cs = c5.simple_cycles(12).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].len(), 5);
        let k4 = g(&[
            ("a", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "d"),
        ]);
        let cs = k4.simple_cycles(12).unwrap();
        assert_eq!(cs.iter().filter(|c| c.len() == 3).count(), 4);
        assert_eq!(cs.iter().filter(|c| c.len() == 4).count(), 3);
        assert_eq!(cs.len(), 7);
    }

    #[test]
    fn cycle_bound_is_enforced() {
        assert!(matches!(
            cycle(13).simple_cycles(12),
            Err(Error::BoundExceeded {
                actual: 13,
                bound: 12,
                ..
            })
        ));
        assert_eq!(cycle(13).simple_cycles(13).unwrap().len(), 1);
    }

    #[test]
    fn triangle_membership() {
        let star = g(&[("c", "a"), ("c", "b"), ("c", "d")]);
        assert!(!star.in_triangle(star.index_of("c").unwrap()).unwrap());
        let k3 = g(&[("a", "b"), ("b", "c"), ("c", "a")]);
        assert!((0..3).all(|v| k3.in_triangle(v).unwrap()));
        assert!(!cycle(4).in_triangle(0).unwrap());
        assert!(matches!(k3.in_triangle(7), Err(Error::UnknownVertex(_))));
        assert!(matches!(k3.index_of("q"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn on_cycle_uses_bridges() {
        let gr = g(&[("a", "b"), ("b", "c"), ("c", "a"), ("c", "d")]);
        assert!(gr.on_cycle(0));
        assert!(!gr.on_cycle(3));
    }
}
