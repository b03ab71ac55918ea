use iasl_core::transforms::{homeomorphism_eligible, LabelSource, NamedElement};
use iasl_core::verify::families::{connected_graphs, shipped};
use iasl_core::{
    construct_balanced_bipartite_labeling, delete_vertex, derive, elementary_transformation,
    enumerate_aiasl, spanned_subgraph, subdivide_edge, sumset, Error, SearchBounds,
    SignedLabeledGraph, TransformOutcome,
};

/// The induced-labeling conditions, checked element by element.
fn assert_induced(input: &SignedLabeledGraph, out: &TransformOutcome) {
    let (g0, g1) = (input.graph(), out.result.graph());
    assert_eq!(
        out.induced_label_notes.len(),
        g1.vertex_count() + g1.edge_count()
    );
    for (el, src) in &out.induced_label_notes {
        match (el, src) {
            (NamedElement::Vertex(v), LabelSource::Carried) => assert_eq!(
                input.vertex_label(g0.index_of(v).unwrap()),
                out.result.vertex_label(g1.index_of(v).unwrap())
            ),
            (NamedElement::Vertex(v), LabelSource::InheritedFromEdge(a, b)) => assert_eq!(
                input.label_of(g0.find_edge(a, b).unwrap()).unwrap(),
                out.result.vertex_label(g1.index_of(v).unwrap())
            ),
            (NamedElement::Edge(a, b), LabelSource::Carried) => {
                let e0 = g0.find_edge(a, b).unwrap();
                let e1 = g1.find_edge(a, b).unwrap();
                assert_eq!(
                    input.label_of(e0).unwrap(),
                    out.result.label_of(e1).unwrap()
                );
                assert_eq!(input.sign_of(e0).unwrap(), out.result.sign_of(e1).unwrap());
            }
            (NamedElement::Edge(a, b), LabelSource::SumsetOfEndpoints) => {
                let (x, y) = (g1.index_of(a).unwrap(), g1.index_of(b).unwrap());
                assert_eq!(
                    &sumset(out.result.vertex_label(x), out.result.vertex_label(y)),
                    out.result.label_of(g1.find_edge(a, b).unwrap()).unwrap()
                );
            }
            other => panic!("unexpected note {other:?}"),
        }
    }
}

fn instances(max_order: usize, universe_max: u64, max_size: usize) -> Vec<SignedLabeledGraph> {
    let bounds = SearchBounds::new(universe_max, max_size);
    let mut out = Vec::new();
    for n in 2..=max_order {
        for g in connected_graphs(n).unwrap() {
            for f in enumerate_aiasl(&g, &bounds).unwrap() {
                out.push(derive(&g, &f).unwrap());
            }
        }
    }
    out
}

#[test]
fn transforms_respect_induced_labels_and_balance() {
    let all = instances(4, 4, 2);
    assert!(all.len() > 10_000);
    for s in &all {
        let g = s.graph();
        let balanced = s.is_balanced();
        for v in g.names() {
            let out = delete_vertex(s, v).unwrap();
            assert_induced(s, &out);
            if balanced {
                assert!(out.result.is_balanced());
            }
        }
        let bridges = g.cut_edges();
        for &e in g.edges() {
            let (u, v) = g.edge_names(e);
            match subdivide_edge(s, u, v) {
                Ok(out) => {
                    assert_induced(s, &out);
                    assert_eq!(out.result.graph().vertex_count(), g.vertex_count() + 1);
                    if balanced && bridges.contains(&e) {
                        assert!(out.result.is_balanced());
                    }
                }
                Err(Error::InjectivityCollision { .. }) => {
                    assert!(s.labeling().sets().contains(s.label_of(e).unwrap()));
                }
                Err(other) => panic!("{other}"),
            }
        }
        for x in 0..g.vertex_count() {
            let name = g.name(x);
            match elementary_transformation(s, name) {
                Ok(out) => {
                    assert!(homeomorphism_eligible(g, x));
                    assert_induced(s, &out);
                    if balanced && !g.on_cycle(x) {
                        assert!(out.result.is_balanced());
                    }
                }
                Err(Error::DegreeNotTwo { .. } | Error::VertexInTriangle(_)) => {
                    assert!(!homeomorphism_eligible(g, x));
                }
                Err(other) => panic!("{other}"),
            }
        }
    }
}

#[test]
fn spanning_subgraphs_count_removed_negatives() {
    for s in instances(4, 3, 2).iter().step_by(7) {
        let g = s.graph();
        let m = g.edge_count();
        for mask in 0..1u32 << m {
            let keep: Vec<(&str, &str)> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| g.edge_names(g.edges()[i]))
                .collect();
            let out = spanned_subgraph(s, &keep).unwrap();
            assert_induced(s, &out);
            let dropped = (0..m)
                .filter(|i| mask >> i & 1 == 0 && s.signs()[*i].is_negative())
                .count();
            assert_eq!(out.removed_negative_edges, dropped);
            assert_eq!(out.result.graph().vertex_count(), g.vertex_count());
        }
    }
}

#[test]
fn bipartite_construction_on_shipped_graphs() {
    for g in shipped(6).unwrap() {
        match construct_balanced_bipartite_labeling(&g) {
            Ok(f) => {
                let s = derive(&g, &f).unwrap();
                assert!(g.is_bipartite());
                assert!(s.validate_aiasl().is_valid());
                assert!(s.is_balanced_fast().is_some());
            }
            Err(e) => {
                assert_eq!(e, Error::NotBipartite);
                assert!(!g.is_bipartite());
            }
        }
    }
}
