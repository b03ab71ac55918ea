//! Vertex set-labelings, the induced edge labels and signs, and the
//! IASL / IASI / AIASL validity checks.
//!
//! Every edge `uv` is labeled with the sumset `f(u) + f(v)` and signed
//! `(-1)^|f(u) + f(v)|`: positive exactly when that sumset has even size.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroU64;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};
use crate::sets::{ap_profile, sumset, ApProfile, IntegerSet, Parity};

/// An injective assignment of non-empty sets to the vertices of a graph,
/// indexed like the graph's vertices, over the universe `{0, ..., universe_max}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    pub universe_max: u64,
    sets: Vec<IntegerSet>,
}

impl Labeling {
    pub fn new(universe_max: u64, sets: Vec<IntegerSet>) -> Self {
        Labeling { universe_max, sets }
    }

    /// Aligns `(vertex id, set)` pairs with the vertices of `g`.
    pub fn from_named<'a, I>(g: &Graph, universe_max: u64, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, IntegerSet)>,
    {
        let mut slots: Vec<Option<IntegerSet>> = alloc::vec![None; g.vertex_count()];
        for (name, set) in pairs {
            let v = g.index_of(name)?;
            if slots[v].replace(set).is_some() {
                return Err(Error::DuplicateVertex(name.into()));
            }
        }
        let sets = slots
            .into_iter()
            .enumerate()
            .map(|(v, s)| s.ok_or_else(|| Error::MissingLabel(g.name(v).into())))
            .collect::<Result<Vec<_>>>()?;
        Ok(Labeling { universe_max, sets })
    }

    pub fn set(&self, v: usize) -> &IntegerSet {
        &self.sets[v]
    }

    pub fn sets(&self) -> &[IntegerSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    /// Total of all label elements; the secondary key when ranking counterexamples.
    pub fn mass(&self) -> u64 {
        self.sets.iter().map(IntegerSet::mass).sum()
    }

    /// The first pair of vertices sharing a label, if any.
    pub fn duplicate_pair(&self) -> Option<(usize, usize)> {
        let mut seen: BTreeMap<&IntegerSet, usize> = BTreeMap::new();
        for (v, s) in self.sets.iter().enumerate() {
            if let Some(&w) = seen.get(s) {
                return Some((w, v));
            }
            seen.insert(s, v);
        }
        None
    }

    pub fn within_universe(&self) -> bool {
        self.sets
            .iter()
            .all(|s| s.within_universe(self.universe_max))
    }
}

/// Edge sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    /// `(-1)^n`.
    pub fn of_cardinality(n: usize) -> Sign {
        if n % 2 == 0 {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.symbol())
    }
}

/// A positive rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ratio {
    pub num: u64,
    pub den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        let g = gcd(num, den);
        Ratio {
            num: num / g,
            den: den / g,
        }
    }

    pub fn one() -> Self {
        Ratio { num: 1, den: 1 }
    }

    pub fn integer(self) -> Option<u64> {
        (self.den == 1).then_some(self.num)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `max(d_u, d_v) / min(d_u, d_v)`; 1 when either side is a singleton.
pub fn ratio_of(a: &ApProfile, b: &ApProfile) -> Ratio {
    match (a.diff, b.diff) {
        (Some(x), Some(y)) => {
            let (x, y) = (x.get(), y.get());
            Ratio::new(x.max(y), x.min(y))
        }
        _ => Ratio::one(),
    }
}

/// Which endpoint of an edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum End {
    First,
    Second,
}

/// An AIASL-admissible edge in canonical orientation: `m` is the size of the
/// endpoint with the smaller common difference (on ties, the smaller set).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeShape {
    pub ratio: u64,
    pub min_endpoint: End,
    pub m: usize,
    pub n: usize,
}

impl EdgeShape {
    /// Sign read off the cardinality parities alone.
    pub fn predicted_sign(&self) -> Sign {
        let parity = |c: usize| {
            if c % 2 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            }
        };
        let positive = if self.ratio % 2 == 1 {
            parity(self.m) != parity(self.n)
        } else {
            parity(self.m) == Parity::Even
        };
        if positive {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Why an edge fails the AIASL conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeIssue {
    NotAp(End),
    NonIntegerRatio(Ratio),
    RatioExceedsCardinality { ratio: u64, cardinality: usize },
}

impl fmt::Display for EdgeIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeIssue::NotAp(End::First) => f.write_str("first endpoint label is not an AP"),
            EdgeIssue::NotAp(End::Second) => f.write_str("second endpoint label is not an AP"),
            EdgeIssue::NonIntegerRatio(r) => write!(f, "deterministic ratio {r} is not an integer"),
            EdgeIssue::RatioExceedsCardinality { ratio, cardinality } => write!(
                f,
                "deterministic ratio {ratio} exceeds |f(u)| = {cardinality}"
            ),
        }
    }
}

/// Orients an edge between two progressions and checks admissibility.
pub fn classify_profiles(
    a: &ApProfile,
    b: &ApProfile,
) -> core::result::Result<EdgeShape, EdgeIssue> {
    let ratio = ratio_of(a, b);
    let min_endpoint = match (a.diff.map(NonZeroU64::get), b.diff.map(NonZeroU64::get)) {
        (Some(x), Some(y)) if x != y => {
            if x < y {
                End::First
            } else {
                End::Second
            }
        }
        _ if b.length < a.length => End::Second,
        _ => End::First,
    };
    let (m, n) = match min_endpoint {
        End::First => (a.length, b.length),
        End::Second => (b.length, a.length),
    };
    let k = ratio.integer().ok_or(EdgeIssue::NonIntegerRatio(ratio))?;
    if k > m as u64 {
        return Err(EdgeIssue::RatioExceedsCardinality {
            ratio: k,
            cardinality: m,
        });
    }
    Ok(EdgeShape {
        ratio: k,
        min_endpoint,
        m,
        n,
    })
}

/// [`classify_profiles`] on raw sets.
pub fn classify_pair(a: &IntegerSet, b: &IntegerSet) -> core::result::Result<EdgeShape, EdgeIssue> {
    let pa = ap_profile(a).ok_or(EdgeIssue::NotAp(End::First))?;
    let pb = ap_profile(b).ok_or(EdgeIssue::NotAp(End::Second))?;
    classify_profiles(&pa, &pb)
}

/// Result of [`SignedLabeledGraph::validate_aiasl`].
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct AiaslReport {
    /// Vertices whose label is not an arithmetic progression.
    pub non_ap_vertices: Vec<usize>,
    /// Failing edges with the violated clause.
    pub edge_issues: Vec<(Edge, EdgeIssue)>,
}

impl AiaslReport {
    pub fn is_valid(&self) -> bool {
        self.non_ap_vertices.is_empty() && self.edge_issues.is_empty()
    }
}

/// A labeled element, for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Element {
    Vertex(usize),
    Edge(Edge),
}

/// A graph with an IASL and the induced edge labels and signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedLabeledGraph {
    graph: Graph,
    labeling: Labeling,
    edge_labels: Vec<IntegerSet>,
    signs: Vec<Sign>,
}

/// Computes `f⁺` and the signature. Fails if a vertex is unlabeled or two
/// vertices share a label.
pub fn derive(g: &Graph, f: &Labeling) -> Result<SignedLabeledGraph> {
    SignedLabeledGraph::new(g.clone(), f.clone())
}

impl SignedLabeledGraph {
    pub fn new(graph: Graph, labeling: Labeling) -> Result<Self> {
        if labeling.len() < graph.vertex_count() {
            return Err(Error::MissingLabel(graph.name(labeling.len()).into()));
        }
        if labeling.len() > graph.vertex_count() {
            return Err(Error::UnknownVertex(alloc::format!(
                "#{}",
                graph.vertex_count()
            )));
        }
        if let Some((a, b)) = labeling.duplicate_pair() {
            return Err(Error::DuplicateLabel(
                graph.name(a).into(),
                graph.name(b).into(),
            ));
        }
        let edge_labels: Vec<IntegerSet> = graph
            .edges()
            .iter()
            .map(|e| sumset(labeling.set(e.u), labeling.set(e.v)))
            .collect();
        let signs = edge_labels
            .iter()
            .map(|s| Sign::of_cardinality(s.len()))
            .collect();
        Ok(SignedLabeledGraph {
            graph,
            labeling,
            edge_labels,
            signs,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labeling(&self) -> &Labeling {
        &self.labeling
    }

    pub fn vertex_label(&self, v: usize) -> &IntegerSet {
        self.labeling.set(v)
    }

    /// `f⁺`, indexed like [`Graph::edges`].
    pub fn edge_labels(&self) -> &[IntegerSet] {
        &self.edge_labels
    }

    /// `σ`, indexed like [`Graph::edges`].
    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign_of(&self, e: Edge) -> Result<Sign> {
        Ok(self.signs[self.edge_position(e)?])
    }

    pub fn label_of(&self, e: Edge) -> Result<&IntegerSet> {
        Ok(&self.edge_labels[self.edge_position(e)?])
    }

    fn edge_position(&self, e: Edge) -> Result<usize> {
        self.graph.edge_index(e.u, e.v).ok_or_else(|| {
            let name = |x: usize| {
                if x < self.graph.vertex_count() {
                    self.graph.name(x).into()
                } else {
                    alloc::format!("#{x}")
                }
            };
            Error::UnknownEdge(name(e.u), name(e.v))
        })
    }

    pub fn negative_edge_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_negative()).count()
    }

    /// Elements whose label escapes `{0, ..., universe_max}`; empty in strict mode.
    pub fn universe_violations(&self) -> Vec<Element> {
        let x = self.labeling.universe_max;
        let mut out: Vec<Element> = (0..self.graph.vertex_count())
            .filter(|&v| !self.labeling.set(v).within_universe(x))
            .map(Element::Vertex)
            .collect();
        out.extend(
            self.graph
                .edges()
                .iter()
                .zip(&self.edge_labels)
                .filter(|(_, s)| !s.within_universe(x))
                .map(|(&e, _)| Element::Edge(e)),
        );
        out
    }

    /// Pairs of distinct edges with equal labels.
    pub fn iasi_collisions(&self) -> Vec<(Edge, Edge)> {
        let mut order: Vec<usize> = (0..self.edge_labels.len()).collect();
        order.sort_by(|&a, &b| {
            self.edge_labels[a]
                .cmp(&self.edge_labels[b])
                .then(a.cmp(&b))
        });
        let edges = self.graph.edges();
        let mut out = Vec::new();
        let mut i = 0;
        while i < order.len() {
            let mut j = i + 1;
            while j < order.len() && self.edge_labels[order[j]] == self.edge_labels[order[i]] {
                for &k in &order[i..j] {
                    out.push((edges[k], edges[order[j]]));
                }
                j += 1;
            }
            i = j;
        }
        out.sort_unstable();
        out
    }

    /// True iff the edge labeling is injective.
    pub fn validate_iasi(&self) -> bool {
        let mut labels: Vec<&IntegerSet> = self.edge_labels.iter().collect();
        labels.sort_unstable();
        labels.windows(2).all(|w| w[0] != w[1])
    }

    /// Checks every vertex label is a progression and every edge satisfies the
    /// integer-ratio condition `d_v / d_u ≤ |f(u)|`.
    pub fn validate_aiasl(&self) -> AiaslReport {
        let profiles: Vec<Option<ApProfile>> =
            self.labeling.sets().iter().map(ap_profile).collect();
        let mut report = AiaslReport {
            non_ap_vertices: profiles
                .iter()
                .enumerate()
                .filter(|(_, p)| p.is_none())
                .map(|(v, _)| v)
                .collect(),
            edge_issues: Vec::new(),
        };
        for &e in self.graph.edges() {
            let issue = match (&profiles[e.u], &profiles[e.v]) {
                (None, _) => Some(EdgeIssue::NotAp(End::First)),
                (_, None) => Some(EdgeIssue::NotAp(End::Second)),
                (Some(a), Some(b)) => classify_profiles(a, b).err(),
            };
            if let Some(issue) = issue {
                report.edge_issues.push((e, issue));
            }
        }
        report
    }

    pub fn deterministic_ratio(&self, e: Edge) -> Result<Ratio> {
        self.edge_position(e)?;
        let (a, b) = self.endpoint_profiles(e)?;
        Ok(ratio_of(&a, &b))
    }

    fn endpoint_profiles(&self, e: Edge) -> Result<(ApProfile, ApProfile)> {
        let p = |v: usize| {
            ap_profile(self.labeling.set(v))
                .ok_or_else(|| Error::NotApLabel(self.graph.name(v).into()))
        };
        Ok((p(e.u)?, p(e.v)?))
    }

    /// Canonical orientation of an admissible edge.
    pub fn edge_shape(&self, e: Edge) -> Result<EdgeShape> {
        self.edge_position(e)?;
        let (a, b) = self.endpoint_profiles(e)?;
        classify_profiles(&a, &b).map_err(|issue| {
            let (u, v) = self.graph.edge_names(e);
            Error::AdmissibilityViolation(alloc::format!("edge {u} {v}: {issue}"))
        })
    }

    /// The sign predicted from cardinality parities and the deterministic ratio.
    pub fn predicted_sign(&self, e: Edge) -> Result<Sign> {
        self.edge_shape(e).map(|s| s.predicted_sign())
    }

    /// All vertex ids paired with their labels, for display.
    pub fn named_labels(&self) -> impl Iterator<Item = (&str, &IntegerSet)> {
        self.graph
            .names()
            .iter()
            .map(String::as_str)
            .zip(self.labeling.sets())
    }
}
