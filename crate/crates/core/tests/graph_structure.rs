use std::collections::BTreeSet;

use iasl_core::balance::cycle_edges;
use iasl_core::verify::families::{connected_graphs, cycle, path, star};
use iasl_core::{Edge, Graph};

/// Edges lying on at least one simple cycle, straight from the cycle list.
fn cycle_edge_set(g: &Graph) -> BTreeSet<Edge> {
    let mut on_cycle = BTreeSet::new();
    for c in g.simple_cycles(12).unwrap() {
        for i in cycle_edges(g, &c) {
            on_cycle.insert(g.edges()[i]);
        }
    }
    on_cycle
}

#[test]
fn cut_edges_are_the_edges_on_no_cycle() {
    for n in 1..=7 {
        for g in connected_graphs(n).unwrap() {
            let on_cycle = cycle_edge_set(&g);
            let expected: Vec<Edge> = g
                .edges()
                .iter()
                .copied()
                .filter(|e| !on_cycle.contains(e))
                .collect();
            assert_eq!(g.cut_edges(), expected, "{:?}", g.edges());
        }
    }
}

#[test]
fn bipartite_iff_no_odd_cycle() {
    for n in 1..=7 {
        for g in connected_graphs(n).unwrap() {
            let odd = g
                .simple_cycles(12)
                .unwrap()
                .iter()
                .any(|c| c.len() % 2 == 1);
            assert_eq!(g.is_bipartite(), !odd);
            if let Some(p) = g.bipartition() {
                let side: Vec<bool> = (0..g.vertex_count()).map(|v| p.left.contains(&v)).collect();
                assert!(g.edges().iter().all(|e| side[e.u] != side[e.v]));
                assert_eq!(p.left.len() + p.right.len(), g.vertex_count());
            }
        }
    }
}

#[test]
fn cycles_are_simple_canonical_and_distinct() {
    for g in connected_graphs(6).unwrap() {
        let cycles = g.simple_cycles(12).unwrap();
        let mut seen = BTreeSet::new();
        for c in &cycles {
            assert!(c.len() >= 3);
            let distinct: BTreeSet<_> = c.iter().collect();
            assert_eq!(distinct.len(), c.len());
            assert_eq!(c[0], *c.iter().min().unwrap());
            assert!(c[1] < c[c.len() - 1]);
            let edges: BTreeSet<usize> = cycle_edges(&g, c).into_iter().collect();
            assert!(seen.insert(edges), "cycle reported twice: {c:?}");
        }
    }
}

#[test]
fn on_cycle_and_triangles() {
    let p = path(5);
    assert!((0..5).all(|v| !p.on_cycle(v)));
    let c = cycle(5);
    assert!((0..5).all(|v| c.on_cycle(v) && !c.in_triangle(v).unwrap()));
    let s = star(4);
    assert!(!s.in_triangle(0).unwrap());
    for g in connected_graphs(5).unwrap() {
        let on_cycle = cycle_edge_set(&g);
        for v in 0..g.vertex_count() {
            let touches = g
                .neighbors(v)
                .iter()
                .any(|&w| on_cycle.contains(&Edge::new(v, w)));
            assert_eq!(g.on_cycle(v), touches);
        }
    }
}
