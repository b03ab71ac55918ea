//! Operations producing graphs associated with a labeled signed graph, each
//! carrying an induced labeling:
//!
//! * surviving vertices and edges keep their set-labels;
//! * a new edge is labeled with the sumset of its endpoint labels and signed by its size;
//! * a vertex that replaces an edge takes that edge's label.
//!
//! All transforms are pure: the input is never modified.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, GraphBuilder};
use crate::labeling::{classify_pair, EdgeIssue, Labeling, SignedLabeledGraph};
use crate::sets::IntegerSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Operation {
    DeleteVertex,
    SpannedSubgraph,
    Subdivide,
    ElementaryTransformation,
}

impl Operation {
    pub fn as_str(self) -> &'static str {
        match self {
            Operation::DeleteVertex => "delete-vertex",
            Operation::SpannedSubgraph => "span",
            Operation::Subdivide => "subdivide",
            Operation::ElementaryTransformation => "homeo",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum NamedElement {
    Vertex(String),
    Edge(String, String),
}

/// Where an element of the result got its set-label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LabelSource {
    /// Same element, same label as in the input.
    Carried,
    /// New edge, labeled by the sumset of its endpoints.
    SumsetOfEndpoints,
    /// New vertex replacing the given input edge, labeled like it.
    InheritedFromEdge(String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub operation: Operation,
    pub added_vertices: Vec<String>,
    pub removed_vertices: Vec<String>,
    pub added_edges: Vec<(String, String)>,
    pub removed_edges: Vec<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformOutcome {
    pub result: SignedLabeledGraph,
    pub provenance: Provenance,
    pub induced_label_notes: Vec<(NamedElement, LabelSource)>,
    /// AIASL admissibility problems on edges created by the transform.
    pub new_edge_issues: Vec<((String, String), EdgeIssue)>,
    /// Negative input edges that are absent from the result.
    pub removed_negative_edges: usize,
}

fn edge_key(g: &Graph, e: Edge) -> (String, String) {
    let (a, b) = g.edge_names(e);
    (a.to_string(), b.to_string())
}

fn normalized(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// Assembles the result graph from named vertex labels and named edges, and
/// records provenance against the input.
fn assemble(
    input: &SignedLabeledGraph,
    operation: Operation,
    vertices: Vec<(String, IntegerSet)>,
    edges: Vec<(String, String)>,
    inherited: Option<((String, String), String)>,
) -> Result<TransformOutcome> {
    let g0 = input.graph();
    let mut b = GraphBuilder::new();
    for (v, _) in &vertices {
        b.vertex(v);
    }
    for (x, y) in &edges {
        b.edge(x, y);
    }
    let graph = b.build()?;
    let labeling = Labeling::from_named(
        &graph,
        input.labeling().universe_max,
        vertices.iter().map(|(n, s)| (n.as_str(), s.clone())),
    )?;
    if let Some((w, v)) = labeling
        .duplicate_pair()
        .map(|(a, b)| (graph.name(a), graph.name(b)))
    {
        let (new, existing) = match &inherited {
            Some((_, fresh)) if fresh == v => (v, w),
            _ => (w, v),
        };
        return Err(Error::InjectivityCollision {
            new: new.into(),
            existing: existing.into(),
        });
    }
    let result = SignedLabeledGraph::new(graph, labeling)?;
    let g1 = result.graph();

    let old_vertices: BTreeSet<&str> = g0.names().iter().map(String::as_str).collect();
    let new_vertices: BTreeSet<&str> = g1.names().iter().map(String::as_str).collect();
    let old_edges: BTreeSet<(String, String)> =
        g0.edges().iter().map(|&e| edge_key(g0, e)).collect();
    let new_edges: BTreeSet<(String, String)> =
        g1.edges().iter().map(|&e| edge_key(g1, e)).collect();

    let mut notes = Vec::new();
    for v in g1.names() {
        let source = match &inherited {
            Some(((x, y), fresh)) if fresh == v => {
                LabelSource::InheritedFromEdge(x.clone(), y.clone())
            }
            _ => LabelSource::Carried,
        };
        notes.push((NamedElement::Vertex(v.clone()), source));
    }
    let mut new_edge_issues = Vec::new();
    for &e in g1.edges() {
        let key = edge_key(g1, e);
        let source = if old_edges.contains(&key) {
            LabelSource::Carried
        } else {
            if let Err(issue) = classify_pair(result.vertex_label(e.u), result.vertex_label(e.v)) {
                new_edge_issues.push((key.clone(), issue));
            }
            LabelSource::SumsetOfEndpoints
        };
        notes.push((NamedElement::Edge(key.0, key.1), source));
    }

    let removed_negative_edges = g0
        .edges()
        .iter()
        .zip(input.signs())
        .filter(|(&e, s)| s.is_negative() && !new_edges.contains(&edge_key(g0, e)))
        .count();

    Ok(TransformOutcome {
        provenance: Provenance {
            operation,
            added_vertices: new_vertices
                .difference(&old_vertices)
                .map(|s| s.to_string())
                .collect(),
            removed_vertices: old_vertices
                .difference(&new_vertices)
                .map(|s| s.to_string())
                .collect(),
            added_edges: new_edges.difference(&old_edges).cloned().collect(),
            removed_edges: old_edges.difference(&new_edges).cloned().collect(),
        },
        result,
        induced_label_notes: notes,
        new_edge_issues,
        removed_negative_edges,
    })
}

fn named_vertices(s: &SignedLabeledGraph) -> Vec<(String, IntegerSet)> {
    s.named_labels()
        .map(|(n, l)| (n.to_string(), l.clone()))
        .collect()
}

fn named_edges(s: &SignedLabeledGraph) -> Vec<(String, String)> {
    s.graph()
        .edges()
        .iter()
        .map(|&e| edge_key(s.graph(), e))
        .collect()
}

/// `Σ − v`.
pub fn delete_vertex(s: &SignedLabeledGraph, v: &str) -> Result<TransformOutcome> {
    s.graph().index_of(v)?;
    let vertices = named_vertices(s)
        .into_iter()
        .filter(|(n, _)| n != v)
        .collect();
    let edges = named_edges(s)
        .into_iter()
        .filter(|(a, b)| a != v && b != v)
        .collect();
    assemble(s, Operation::DeleteVertex, vertices, edges, None)
}

/// The signature-preserving spanning subgraph keeping exactly `keep` edges.
/// `removed_negative_edges` on the outcome counts the negative edges dropped.
pub fn spanned_subgraph(s: &SignedLabeledGraph, keep: &[(&str, &str)]) -> Result<TransformOutcome> {
    let mut kept = BTreeSet::new();
    for &(a, b) in keep {
        let e = s.graph().find_edge(a, b)?;
        kept.insert(edge_key(s.graph(), e));
    }
    assemble(
        s,
        Operation::SpannedSubgraph,
        named_vertices(s),
        kept.into_iter().collect(),
        None,
    )
}

/// First id of the form `base`, `base'`, `base''`, ... absent from `g`.
fn fresh_name(g: &Graph, base: String) -> String {
    let mut name = base;
    while g.index_of(&name).is_ok() {
        name.push('\'');
    }
    name
}

/// Replaces edge `uv` by a new vertex `w` adjacent to both, with `f(w) = f⁺(uv)`.
///
/// The new vertex is named `u_v` (primed until unused).
pub fn subdivide_edge(s: &SignedLabeledGraph, u: &str, v: &str) -> Result<TransformOutcome> {
    let g = s.graph();
    let e = g.find_edge(u, v)?;
    let (u, v) = edge_key(g, e);
    let w = fresh_name(g, format!("{u}_{v}"));
    let mut vertices = named_vertices(s);
    vertices.push((w.clone(), s.label_of(e)?.clone()));
    let mut edges: Vec<(String, String)> = named_edges(s)
        .into_iter()
        .filter(|(a, b)| !(a == &u && b == &v))
        .collect();
    edges.push(normalized(&u, &w));
    edges.push(normalized(&v, &w));
    assemble(s, Operation::Subdivide, vertices, edges, Some(((u, v), w)))
}

/// Removes a degree-2 vertex `v` that lies on no triangle and joins its two
/// neighbours by a new edge.
pub fn elementary_transformation(s: &SignedLabeledGraph, v: &str) -> Result<TransformOutcome> {
    let g = s.graph();
    let x = g.index_of(v)?;
    if g.degree(x) != 2 {
        return Err(Error::DegreeNotTwo {
            vertex: v.into(),
            degree: g.degree(x),
        });
    }
    if g.in_triangle(x)? {
        return Err(Error::VertexInTriangle(v.into()));
    }
    let (a, b) = (g.neighbors(x)[0], g.neighbors(x)[1]);
    // a–b adjacent would put v on a triangle, already rejected above
    if g.has_edge(a, b) {
        return Err(Error::EdgeExists(g.name(a).into(), g.name(b).into()));
    }
    let vertices = named_vertices(s)
        .into_iter()
        .filter(|(n, _)| n != v)
        .collect();
    let mut edges: Vec<(String, String)> = named_edges(s)
        .into_iter()
        .filter(|(p, q)| p != v && q != v)
        .collect();
    edges.push(normalized(g.name(a), g.name(b)));
    assemble(
        s,
        Operation::ElementaryTransformation,
        vertices,
        edges,
        None,
    )
}

/// True iff `v` is a valid target for [`elementary_transformation`].
pub fn homeomorphism_eligible(g: &Graph, v: usize) -> bool {
    g.degree(v) == 2 && !g.in_triangle(v).unwrap_or(true)
}
