//! Graph families for the theorem experiments.
//!
//! Vertices are named `a`, `b`, `c`, ... so lexicographic order agrees with
//! construction order.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest order for which all connected graphs can be generated.
pub const MAX_CONNECTED_ORDER: usize = 8;
/// Largest `n` for `K_n` in the shipped family.
pub const MAX_COMPLETE_ORDER: usize = 5;

fn vertex_name(i: usize) -> String {
    if i < 26 {
        ((b'a' + i as u8) as char).to_string()
    } else {
        format!("z{i:03}")
    }
}

fn from_index_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Graph {
    let names: Vec<String> = (0..n).map(vertex_name).collect();
    let mut es: Vec<Edge> = edges.into_iter().map(|(a, b)| Edge::new(a, b)).collect();
    es.sort_unstable();
    es.dedup();
    Graph::from_parts(names, es)
}

pub fn path(n: usize) -> Graph {
    from_index_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// `C_n`, `n ≥ 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycles need at least three vertices");
    from_index_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Star with centre `a` and `leaves` leaves.
pub fn star(leaves: usize) -> Graph {
    from_index_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))
}

pub fn complete(n: usize) -> Graph {
    from_index_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
}

pub fn complete_bipartite(m: usize, n: usize) -> Graph {
    from_index_edges(m + n, (0..m).flat_map(|i| (m..m + n).map(move |j| (i, j))))
}

/// Adjacency of a graph on at most 11 vertices, one bit per vertex pair.
#[derive(Clone, Copy, PartialEq, Eq)]
struct Small {
    n: usize,
    adj: [u16; 11],
}

impl Small {
    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    fn has(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    /// Smallest pair-bit code over relabelings that list vertices by
    /// non-increasing degree. Isomorphic graphs get equal codes.
    fn canonical_code(&self) -> u64 {
        let n = self.n;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| core::cmp::Reverse(self.degree(v)));
        let slot_degree: Vec<u32> = order.iter().map(|&v| self.degree(v)).collect();
        let mut best = u64::MAX;
        let mut perm = Vec::with_capacity(n);
        let mut used = [false; 11];
        self.search(&slot_degree, &mut perm, &mut used, &mut best);
        best
    }

    fn search(
        &self,
        slot_degree: &[u32],
        perm: &mut Vec<usize>,
        used: &mut [bool; 11],
        best: &mut u64,
    ) {
        if perm.len() == self.n {
            let mut code = 0u64;
            for i in 0..self.n {
                for j in i + 1..self.n {
                    code = code << 1 | self.has(perm[i], perm[j]) as u64;
                }
            }
            *best = (*best).min(code);
            return;
        }
        let want = slot_degree[perm.len()];
        for v in 0..self.n {
            if !used[v] && self.degree(v) == want {
                used[v] = true;
                perm.push(v);
                self.search(slot_degree, perm, used, best);
                perm.pop();
                used[v] = false;
            }
        }
    }

    fn to_graph(self) -> Graph {
        from_index_edges(
            self.n,
            (0..self.n).flat_map(|i| {
                (i + 1..self.n)
                    .filter(move |&j| self.has(i, j))
                    .map(move |j| (i, j))
            }),
        )
    }
}

/// All connected graphs on exactly `n` vertices, one per isomorphism class,
/// in a deterministic order.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// each class on `n` vertices arises by attaching a vertex to a class on `n − 1`.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n > MAX_CONNECTED_ORDER {
        return Err(Error::BoundExceeded {
            what: "order of exhaustive connected-graph family",
            actual: n,
            bound: MAX_CONNECTED_ORDER,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut layer = alloc::vec![Small { n: 1, adj: [0; 11] }];
    for order in 2..=n {
        let mut seen = BTreeSet::new();
        let mut next = Vec::new();
        for g in &layer {
            for mask in 1u16..(1 << (order - 1)) {
                let mut h = *g;
                h.n = order;
                let v = order - 1;
                h.adj[v] = mask;
                for u in 0..v {
                    if mask >> u & 1 == 1 {
                        h.adj[u] |= 1 << v;
                    }
                }
                let code = h.canonical_code();
                if seen.insert(code) {
                    next.push((code, h));
                }
            }
        }
        next.sort_by_key(|&(code, _)| core::cmp::Reverse(code));
        layer = next.into_iter().map(|(_, h)| h).collect();
    }
    Ok(layer.into_iter().map(Small::to_graph).collect())
}

/// Canonical code for deduplicating graphs of order ≤ 11.
pub fn canonical_code(g: &Graph) -> Option<(usize, u64)> {
    if g.vertex_count() > 11 {
        return None;
    }
    let mut s = Small {
        n: g.vertex_count(),
        adj: [0; 11],
    };
    for e in g.edges() {
        s.adj[e.u] |= 1 << e.v;
        s.adj[e.v] |= 1 << e.u;
    }
    Some((s.n, s.canonical_code()))
}

/// A parsed family description.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Family {
    /// Explicit list of graphs.
    Graphs(Vec<Graph>),
    /// Two-vertex instances `u–v` labeled by every ordered pair of distinct
    /// progressions with `first ≤ max_first`, `diff ≤ max_diff`, `length ≤ max_len`.
    ApPairs {
        max_first: u64,
        max_diff: u64,
        max_len: usize,
    },
}

fn numbers(args: &str, term: &str) -> Result<Vec<usize>> {
    args.split(',')
        .map(|x| {
            x.trim()
                .parse::<usize>()
                .map_err(|_| Error::InvalidFamily(format!("bad number in `{term}`")))
        })
        .collect()
}

fn arity(v: &[usize], n: usize, term: &str) -> Result<()> {
    if v.len() == n {
        Ok(())
    } else {
        Err(Error::InvalidFamily(format!(
            "`{term}` takes {n} argument(s)"
        )))
    }
}

/// Union of every shipped family restricted to at most `max_order` vertices:
/// paths, cycles, stars, complete bipartite graphs, complete graphs up to
/// [`MAX_COMPLETE_ORDER`] and all connected graphs up to order 7.
pub fn shipped(max_order: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        out.push(path(n));
        if n >= 3 {
            out.push(cycle(n));
        }
        out.push(star(n - 1));
        for m in 1..=n / 2 {
            out.push(complete_bipartite(m, n - m));
        }
        if n <= MAX_COMPLETE_ORDER {
            out.push(complete(n));
        }
    }
    for n in 2..=max_order.min(7) {
        out.extend(connected_graphs(n)?);
    }
    Ok(dedup_isomorphic(out))
}

/// Keeps the first graph of each isomorphism class; order otherwise preserved.
pub fn dedup_isomorphic(graphs: Vec<Graph>) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    graphs
        .into_iter()
        .filter(|g| match canonical_code(g) {
            Some(code) => seen.insert(code),
            None => true,
        })
        .collect()
}

impl Family {
    /// Parses `term(+term)*` where a term is one of `k2`, `triangle`,
    /// `path:N`, `cycle:N`, `star:N` (N leaves), `complete:N`, `kbip:M,N`,
    /// `connected:N` (all connected graphs on 2..=N vertices), `shipped:N`,
    /// or on its own `ap-pairs:F,D,L`.
    pub fn parse(spec: &str) -> Result<Family> {
        let spec = spec.trim();
        if let Some(args) = spec.strip_prefix("ap-pairs:") {
            let v = numbers(args, spec)?;
            arity(&v, 3, spec)?;
            if v[1] == 0 || v[2] == 0 {
                return Err(Error::InvalidFamily(
                    "ap-pairs bounds must be positive".into(),
                ));
            }
            return Ok(Family::ApPairs {
                max_first: v[0] as u64,
                max_diff: v[1] as u64,
                max_len: v[2],
            });
        }
        let mut graphs = Vec::new();
        for term in spec.split('+').map(str::trim) {
            let (name, args) = term.split_once(':').unwrap_or((term, ""));
            match name {
                "k2" => graphs.push(complete(2)),
                "triangle" => graphs.push(complete(3)),
                "path" | "cycle" | "star" | "complete" | "connected" | "shipped" => {
                    let v = numbers(args, term)?;
                    arity(&v, 1, term)?;
                    let n = v[0];
                    match name {
                        "path" if n >= 1 => graphs.push(path(n)),
                        "cycle" if n >= 3 => graphs.push(cycle(n)),
                        "star" if n >= 1 => graphs.push(star(n)),
                        "complete" if n >= 1 => graphs.push(complete(n)),
                        "connected" => {
                            for k in 2..=n {
                                graphs.extend(connected_graphs(k)?);
                            }
                        }
                        "shipped" => graphs.extend(shipped(n)?),
                        _ => return Err(Error::InvalidFamily(format!("`{term}` is too small"))),
                    }
                }
                "kbip" => {
                    let v = numbers(args, term)?;
                    arity(&v, 2, term)?;
                    if v[0] == 0 || v[1] == 0 {
                        return Err(Error::InvalidFamily(format!(
                            "`{term}` needs positive parts"
                        )));
                    }
                    graphs.push(complete_bipartite(v[0], v[1]));
                }
                _ => return Err(Error::InvalidFamily(format!("unknown family `{term}`"))),
            }
        }
        Ok(Family::Graphs(graphs))
    }
}
