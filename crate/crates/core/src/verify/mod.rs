//! Exhaustive, bounded checks of the labeled-signed-graph theorems.
//!
//! Each theorem is a predicate over `(graph, labeling)` instances. An
//! experiment walks every admissible labeling of every graph in a family and
//! collects the instances that falsify the predicate. "Confirmed" always means
//! confirmed within the stated bounds, never proved.
//!
//! Two engines walk the labeling space:
//!
//! * [`Engine::Direct`] visits every labeling one by one.
//! * [`Engine::Classes`] visits one representative per translation class.
//!   Replacing each vertex label by a translate changes no sumset size, so
//!   any predicate that only looks at signs and set sizes has the same value
//!   on the whole class. The representative puts the `j`-th vertex of a
//!   given (length, difference) type at first term `j`; the class weight is
//!   the number of injective ways to place those translates inside the
//!   universe. It is only used for such predicates and never in strict mode.

pub mod enumerate;
pub mod families;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

pub use enumerate::{candidate_labels, enumerate_aiasl, AiaslEnumerator};
pub use families::Family;

use crate::balance::is_balanced_fast;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{Labeling, Sign, SignedLabeledGraph};
use crate::sets::{ap_sumset_cardinality, sumset, ApProfile, IntegerSet};
use crate::transforms::{elementary_transformation, homeomorphism_eligible, subdivide_edge};
use enumerate::edge_allowed;

/// Limits of the labeling space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Labels are drawn from `{0, ..., universe_max}`.
    pub universe_max: u64,
    pub max_label_size: usize,
    pub max_vertices: usize,
    /// Also require every edge label to stay inside the universe.
    pub require_strict_universe: bool,
}

impl SearchBounds {
    pub fn new(universe_max: u64, max_label_size: usize) -> Self {
        SearchBounds {
            universe_max,
            max_label_size,
            max_vertices: 8,
            require_strict_universe: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_label_size == 0 {
            return Err(Error::InvalidBounds("max_label_size must be positive"));
        }
        if self.max_vertices == 0 {
            return Err(Error::InvalidBounds("max_vertices must be positive"));
        }
        Ok(())
    }
}

impl fmt::Display for SearchBounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "universe_max={} max_label_size={} max_vertices={} strict={}",
            self.universe_max, self.max_label_size, self.max_vertices, self.require_strict_universe
        )
    }
}

/// Restriction on deterministic ratios of the enumerated labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RatioFilter {
    #[default]
    Any,
    /// Every edge has an odd deterministic ratio.
    AllOdd,
}

impl RatioFilter {
    pub fn as_str(self) -> &'static str {
        match self {
            RatioFilter::Any => "any",
            RatioFilter::AllOdd => "odd",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Engine {
    /// Classes when the theorem allows it and the universe is lenient.
    #[default]
    Auto,
    Direct,
    Classes,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::Auto => "auto",
            Engine::Direct => "direct",
            Engine::Classes => "classes",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct VerifyOptions {
    pub ratio_filter: RatioFilter,
    pub engine: Engine,
    /// Keep only the smallest `n` counterexamples; the total is always counted.
    pub keep: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// Sign predicted from parities equals the derived sign.
    PositiveEdge,
    /// `|f⁺(uv)| = m + k(n − 1)` on admissible edges.
    Cardinality,
    /// Bipartite underlying graph ⇒ balanced.
    BalanceBipartiteFwd,
    /// Balanced ⇒ bipartite underlying graph.
    BalanceBipartiteRev,
    /// On a balanced instance, subdividing `e` keeps balance iff `e` is a cut edge.
    Subdivision,
    /// On a balanced instance, an elementary transformation at `v` keeps
    /// balance iff `v` lies on no cycle.
    Homeomorphism,
    /// Every admissible labeling induces injective edge labels.
    IasiInjectivity,
}

impl TheoremId {
    pub const ALL: [TheoremId; 7] = [
        TheoremId::PositiveEdge,
        TheoremId::Cardinality,
        TheoremId::BalanceBipartiteFwd,
        TheoremId::BalanceBipartiteRev,
        TheoremId::Subdivision,
        TheoremId::Homeomorphism,
        TheoremId::IasiInjectivity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::PositiveEdge => "POSITIVE_EDGE",
            TheoremId::Cardinality => "CARDINALITY",
            TheoremId::BalanceBipartiteFwd => "BALANCE_BIPARTITE_FWD",
            TheoremId::BalanceBipartiteRev => "BALANCE_BIPARTITE_REV",
            TheoremId::Subdivision => "SUBDIVISION",
            TheoremId::Homeomorphism => "HOMEOMORPHISM",
            TheoremId::IasiInjectivity => "IASI_INJECTIVITY",
        }
    }

    /// Whether the predicate depends only on set sizes, so that the class
    /// engine is exact. Subdivision can collide with existing labels and the
    /// injectivity check compares actual sets.
    pub fn translation_invariant(self) -> bool {
        !matches!(self, TheoremId::Subdivision | TheoremId::IasiInjectivity)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_uppercase().replace('-', "_");
        TheoremId::ALL
            .into_iter()
            .find(|t| t.as_str() == norm)
            .ok_or_else(|| Error::UnknownTheorem(s.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    ConfirmedWithinBounds,
    CounterexampleFound,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::ConfirmedWithinBounds => "CONFIRMED_WITHIN_BOUNDS",
            Verdict::CounterexampleFound => "COUNTEREXAMPLE_FOUND",
        }
    }
}

/// Which part of a theorem an instance violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Clause {
    /// The whole (one-directional) claim.
    Statement,
    /// The sufficiency direction of an "iff".
    If,
    /// The necessity direction of an "iff".
    OnlyIf,
}

impl Clause {
    pub fn as_str(self) -> &'static str {
        match self {
            Clause::Statement => "statement",
            Clause::If => "if",
            Clause::OnlyIf => "only-if",
        }
    }
}

impl FromStr for Clause {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "statement" => Ok(Clause::Statement),
            "if" => Ok(Clause::If),
            "only-if" => Ok(Clause::OnlyIf),
            _ => Err(Error::UnknownTheorem(format!("clause `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub graph: Graph,
    pub labeling: Labeling,
    pub clause: Clause,
    pub explanation: String,
    /// Labelings represented: 1 for the direct engine, the class weight otherwise.
    pub instances: u64,
}

impl Counterexample {
    fn cmp_key(&self, other: &Self) -> Ordering {
        self.graph
            .vertex_count()
            .cmp(&other.graph.vertex_count())
            .then_with(|| self.labeling.mass().cmp(&other.labeling.mass()))
            .then_with(|| self.graph.names().cmp(other.graph.names()))
            .then_with(|| self.graph.edges().cmp(other.graph.edges()))
            .then_with(|| self.labeling.sets().cmp(other.labeling.sets()))
            .then_with(|| self.clause.cmp(&other.clause))
            .then_with(|| self.explanation.cmp(&other.explanation))
    }

    /// Re-derives the instance from scratch and reports whether it still
    /// violates the same clause of `theorem`.
    pub fn replay(&self, theorem: TheoremId) -> Result<bool> {
        let s = SignedLabeledGraph::new(self.graph.clone(), self.labeling.clone())?;
        let check = check_instance_by_transform(theorem, &s)?;
        Ok(check.violations.iter().any(|(c, _)| *c == self.clause))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub family: String,
    pub bounds: SearchBounds,
    pub ratio_filter: RatioFilter,
    pub engine: Engine,
    pub cases_checked: u64,
    /// Sub-checks that could not be performed (subdivision label collisions).
    pub skipped: u64,
    pub verdict: Verdict,
    pub counterexamples_total: u64,
    /// Violating labelings per clause (class weights included), in clause order.
    pub violations_by_clause: Vec<(Clause, u64)>,
    /// Smallest first: by vertex count, then total label mass.
    pub counterexamples: Vec<Counterexample>,
}

/// Violations found on one instance.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct InstanceCheck {
    pub violations: Vec<(Clause, String)>,
    pub skipped: u64,
}

fn join(parts: Vec<String>) -> String {
    parts.join("; ")
}

/// Evaluates `theorem` on one labeled signed graph. The labeling is assumed
/// admissible; inadmissible edges are reported as violations of the sign and
/// cardinality theorems.
pub fn check_instance(theorem: TheoremId, s: &SignedLabeledGraph) -> Result<InstanceCheck> {
    let g = s.graph();
    let mut out = InstanceCheck::default();
    let mut bad = Vec::new();
    match theorem {
        TheoremId::PositiveEdge | TheoremId::Cardinality => {
            for (i, &e) in g.edges().iter().enumerate() {
                let (u, v) = g.edge_names(e);
                let shape = match s.edge_shape(e) {
                    Ok(shape) => shape,
                    Err(err) => {
                        bad.push(format!("{err}"));
                        continue;
                    }
                };
                if theorem == TheoremId::PositiveEdge {
                    let predicted = shape.predicted_sign();
                    if predicted != s.signs()[i] {
                        bad.push(format!(
                            "edge {u} {v}: predicted {predicted}, derived {}",
                            s.signs()[i]
                        ));
                    }
                } else {
                    let formula = ap_sumset_cardinality(shape.m, shape.n, shape.ratio)?;
                    let actual = s.edge_labels()[i].len();
                    if formula != actual {
                        bad.push(format!("edge {u} {v}: formula {formula}, |f+| = {actual}"));
                    }
                }
            }
            if !bad.is_empty() {
                out.violations.push((Clause::Statement, join(bad)));
            }
        }
        TheoremId::BalanceBipartiteFwd => {
            if g.is_bipartite() && !s.is_balanced() {
                out.violations
                    .push((Clause::Statement, "bipartite but unbalanced".into()));
            }
        }
        TheoremId::BalanceBipartiteRev => {
            if s.is_balanced() && !g.is_bipartite() {
                out.violations
                    .push((Clause::Statement, "balanced but not bipartite".into()));
            }
        }
        TheoremId::Subdivision | TheoremId::Homeomorphism => {
            transform_check(theorem, s, false, &mut out)?;
        }
        TheoremId::IasiInjectivity => {
            for (a, b) in s.iasi_collisions() {
                let (p, q) = g.edge_names(a);
                let (r, t) = g.edge_names(b);
                bad.push(format!(
                    "edges {p} {q} and {r} {t} share label {}",
                    s.label_of(a)?
                ));
            }
            if !bad.is_empty() {
                out.violations.push((Clause::Statement, join(bad)));
            }
        }
    }
    Ok(out)
}

fn product(a: Sign, b: Sign) -> Sign {
    if a == b {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Whether the result of subdividing edge `i` is balanced, or `None` when the
/// new vertex label collides with an existing one.
///
/// The new vertex has degree 2, so cycles of the result correspond to cycles
/// of `s` with edge `i` replaced by the two new edges; it suffices to give
/// edge `i` the product of their signs. With `by_transform` the subdivided
/// graph is built and checked instead.
fn subdivision_balanced(
    s: &SignedLabeledGraph,
    i: usize,
    by_transform: bool,
) -> Result<Option<bool>> {
    let g = s.graph();
    let e = g.edges()[i];
    if by_transform {
        let (u, v) = g.edge_names(e);
        return match subdivide_edge(s, u, v) {
            Ok(o) => Ok(Some(o.result.is_balanced())),
            Err(Error::InjectivityCollision { .. }) => Ok(None),
            Err(err) => Err(err),
        };
    }
    let joint = &s.edge_labels()[i];
    if s.labeling().sets().contains(joint) {
        return Ok(None);
    }
    let side = |x: usize| Sign::of_cardinality(sumset(s.vertex_label(x), joint).len());
    let mut signs = s.signs().to_vec();
    signs[i] = product(side(e.u), side(e.v));
    Ok(Some(is_balanced_fast(g, &signs).is_some()))
}

/// Whether the elementary transformation at eligible vertex `x` gives a
/// balanced graph. Cycles through the new edge `ab` correspond to cycles
/// through `a x b`, so one of the two old edges takes the new sign and the
/// other turns positive.
fn homeomorphism_balanced(s: &SignedLabeledGraph, x: usize, by_transform: bool) -> Result<bool> {
    let g = s.graph();
    if by_transform {
        return Ok(elementary_transformation(s, g.name(x))?
            .result
            .is_balanced());
    }
    let (a, b) = (g.neighbors(x)[0], g.neighbors(x)[1]);
    let (ea, eb) = (g.edge_index(a, x).unwrap(), g.edge_index(x, b).unwrap());
    let mut signs = s.signs().to_vec();
    signs[ea] = Sign::of_cardinality(sumset(s.vertex_label(a), s.vertex_label(b)).len());
    signs[eb] = Sign::Positive;
    Ok(is_balanced_fast(g, &signs).is_some())
}

/// The two transform theorems on a balanced instance: the transform keeps
/// balance iff the edge is a cut edge (subdivision) or the vertex lies on no
/// cycle (homeomorphism).
fn transform_check(
    theorem: TheoremId,
    s: &SignedLabeledGraph,
    by_transform: bool,
    out: &mut InstanceCheck,
) -> Result<()> {
    if !s.is_balanced() {
        return Ok(());
    }
    let g = s.graph();
    let (mut if_bad, mut only_if_bad) = (Vec::new(), Vec::new());
    if theorem == TheoremId::Subdivision {
        let bridges = g.cut_edges();
        for (i, &e) in g.edges().iter().enumerate() {
            let Some(balanced) = subdivision_balanced(s, i, by_transform)? else {
                out.skipped += 1;
                continue;
            };
            let (u, v) = g.edge_names(e);
            match (bridges.binary_search(&e).is_ok(), balanced) {
                (true, false) => if_bad.push(format!("subdividing cut edge {u} {v} unbalances")),
                (false, true) => {
                    only_if_bad.push(format!("subdividing non-cut edge {u} {v} stays balanced"))
                }
                _ => {}
            }
        }
    } else {
        for x in 0..g.vertex_count() {
            if !homeomorphism_eligible(g, x) {
                continue;
            }
            let name = g.name(x);
            match (g.on_cycle(x), homeomorphism_balanced(s, x, by_transform)?) {
                (false, false) => {
                    if_bad.push(format!("transforming cycle-free vertex {name} unbalances"))
                }
                (true, true) => {
                    only_if_bad.push(format!("transforming cycle vertex {name} stays balanced"))
                }
                _ => {}
            }
        }
    }
    if !if_bad.is_empty() {
        out.violations.push((Clause::If, join(if_bad)));
    }
    if !only_if_bad.is_empty() {
        out.violations.push((Clause::OnlyIf, join(only_if_bad)));
    }
    Ok(())
}

/// [`check_instance`], but the transform theorems build every transformed
/// graph instead of substituting signs.
pub fn check_instance_by_transform(
    theorem: TheoremId,
    s: &SignedLabeledGraph,
) -> Result<InstanceCheck> {
    match theorem {
        TheoremId::Subdivision | TheoremId::Homeomorphism => {
            let mut out = InstanceCheck::default();
            transform_check(theorem, s, true, &mut out)?;
            Ok(out)
        }
        _ => check_instance(theorem, s),
    }
}

struct Collector {
    keep: Option<usize>,
    total: u64,
    items: Vec<Counterexample>,
}

impl Collector {
    fn push(&mut self, c: Counterexample) {
        self.total += 1;
        self.items.push(c);
        if let Some(k) = self.keep {
            if self.items.len() > 2 * k.max(1) {
                self.items.sort_by(Counterexample::cmp_key);
                self.items.truncate(k);
            }
        }
    }

    fn finish(mut self) -> (u64, Vec<Counterexample>) {
        self.items.sort_by(Counterexample::cmp_key);
        if let Some(k) = self.keep {
            self.items.truncate(k);
        }
        (self.total, self.items)
    }
}

/// Runs one experiment described by a family spec (see [`Family::parse`]).
pub fn verify_theorem(
    theorem: TheoremId,
    family: &str,
    bounds: &SearchBounds,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    let parsed = Family::parse(family)?;
    verify_family(theorem, &parsed, family, bounds, options)
}

/// Runs one experiment over an already parsed family; `family_label` is echoed
/// in the report.
pub fn verify_family(
    theorem: TheoremId,
    family: &Family,
    family_label: &str,
    bounds: &SearchBounds,
    options: &VerifyOptions,
) -> Result<VerificationReport> {
    bounds.validate()?;
    let mut collector = Collector {
        keep: options.keep,
        total: 0,
        items: Vec::new(),
    };
    let mut cases = 0u64;
    let mut skipped = 0u64;
    let mut by_clause = vec![
        (Clause::Statement, 0u64),
        (Clause::If, 0),
        (Clause::OnlyIf, 0),
    ];
    let engine = match family {
        Family::ApPairs { .. } => Engine::Direct,
        Family::Graphs(_) => match options.engine {
            Engine::Auto if theorem.translation_invariant() && !bounds.require_strict_universe => {
                Engine::Classes
            }
            Engine::Auto => Engine::Direct,
            Engine::Classes
                if !theorem.translation_invariant() || bounds.require_strict_universe =>
            {
                return Err(Error::InvalidBounds(
                    "the class engine needs a size-only theorem and a lenient universe",
                ))
            }
            e => e,
        },
    };

    let mut visit = |s: &SignedLabeledGraph, weight: u64| -> Result<()> {
        cases += weight;
        let check = check_instance(theorem, s)?;
        skipped += check.skipped * weight;
        for (clause, explanation) in check.violations {
            by_clause[clause as usize].1 += weight;
            collector.push(Counterexample {
                graph: s.graph().clone(),
                labeling: s.labeling().clone(),
                clause,
                explanation,
                instances: weight,
            });
        }
        Ok(())
    };

    match family {
        Family::ApPairs {
            max_first,
            max_diff,
            max_len,
        } => {
            let k2 = families::complete(2);
            let labels = ap_labels(*max_first, *max_diff, *max_len);
            let profiles: Vec<ApProfile> = labels.iter().map(|l| l.ap_profile().unwrap()).collect();
            for (i, a) in labels.iter().enumerate() {
                for (j, b) in labels.iter().enumerate() {
                    if i == j
                        || edge_allowed(&profiles[i], &profiles[j], options.ratio_filter).is_none()
                    {
                        continue;
                    }
                    let universe = bounds.universe_max.max(a.largest() + b.largest());
                    let f = Labeling::new(universe, vec![a.clone(), b.clone()]);
                    visit(&SignedLabeledGraph::new(k2.clone(), f)?, 1)?;
                }
            }
        }
        Family::Graphs(graphs) => {
            if let Some(g) = graphs
                .iter()
                .find(|g| g.vertex_count() > bounds.max_vertices)
            {
                return Err(Error::BoundExceeded {
                    what: "family graph order",
                    actual: g.vertex_count(),
                    bound: bounds.max_vertices,
                });
            }
            for g in graphs {
                if engine == Engine::Classes {
                    let mut classes = ClassEnumerator::new(g, bounds, options.ratio_filter);
                    while let Some((f, weight)) = classes.next_class() {
                        visit(&SignedLabeledGraph::new(g.clone(), f)?, weight)?;
                    }
                } else {
                    for f in AiaslEnumerator::new(g, bounds, options.ratio_filter)? {
                        visit(&SignedLabeledGraph::new(g.clone(), f)?, 1)?;
                    }
                }
            }
        }
    }

    let (total, counterexamples) = collector.finish();
    Ok(VerificationReport {
        theorem,
        family: family_label.to_string(),
        bounds: *bounds,
        ratio_filter: options.ratio_filter,
        engine,
        cases_checked: cases,
        skipped,
        verdict: if total == 0 {
            Verdict::ConfirmedWithinBounds
        } else {
            Verdict::CounterexampleFound
        },
        counterexamples_total: total,
        violations_by_clause: by_clause,
        counterexamples,
    })
}

/// Progressions with `first ≤ max_first`, `diff ≤ max_diff`, `length ≤ max_len`,
/// plus singletons `{0}..{max_first}`, in lexicographic order.
pub fn ap_labels(max_first: u64, max_diff: u64, max_len: usize) -> Vec<IntegerSet> {
    let mut out: Vec<IntegerSet> = (0..=max_first).map(IntegerSet::singleton).collect();
    for first in 0..=max_first {
        for d in 1..=max_diff {
            for len in 2..=max_len {
                out.push(ApProfile::progression(first, d, len).unwrap().reconstruct());
            }
        }
    }
    out.sort_unstable();
    out
}

/// A (length, common difference) label type and how many translates of it fit.
#[derive(Debug, Clone, Copy)]
struct LabelType {
    profile: ApProfile,
    translates: u64,
}

fn label_types(bounds: &SearchBounds) -> Vec<LabelType> {
    let u = bounds.universe_max;
    let mut out = vec![LabelType {
        profile: ApProfile::singleton(0),
        translates: u + 1,
    }];
    for len in 2..=bounds.max_label_size {
        let span = len as u64 - 1;
        for d in 1..=u / span {
            out.push(LabelType {
                profile: ApProfile::progression(0, d, len).unwrap(),
                translates: u - d * span + 1,
            });
        }
    }
    out
}

/// Walks assignments of label types to vertices, one per translation class.
struct ClassEnumerator<'g> {
    graph: &'g Graph,
    universe_max: u64,
    types: Vec<LabelType>,
    compatible: Vec<Vec<bool>>,
    choice: Vec<usize>,
    used: Vec<u64>,
    started: bool,
}

impl<'g> ClassEnumerator<'g> {
    fn new(graph: &'g Graph, bounds: &SearchBounds, filter: RatioFilter) -> Self {
        let types = label_types(bounds);
        let compatible = types
            .iter()
            .map(|a| {
                types
                    .iter()
                    .map(|b| edge_allowed(&a.profile, &b.profile, filter).is_some())
                    .collect()
            })
            .collect();
        ClassEnumerator {
            graph,
            universe_max: bounds.universe_max,
            used: vec![0; types.len()],
            types,
            compatible,
            choice: Vec::new(),
            started: false,
        }
    }

    fn place(&mut self, from: usize) -> bool {
        let v = self.choice.len();
        for t in from..self.types.len() {
            let fits = self.used[t] < self.types[t].translates
                && self
                    .graph
                    .neighbors(v)
                    .iter()
                    .take_while(|&&w| w < v)
                    .all(|&w| self.compatible[self.choice[w]][t]);
            if fits {
                self.used[t] += 1;
                self.choice.push(t);
                return true;
            }
        }
        false
    }

    fn backtrack(&mut self) -> bool {
        while let Some(t) = self.choice.pop() {
            self.used[t] -= 1;
            if self.place(t + 1) {
                return true;
            }
        }
        false
    }

    /// Next representative labeling and the number of labelings it stands for.
    fn next_class(&mut self) -> Option<(Labeling, u64)> {
        let n = self.graph.vertex_count();
        let mut ok = if self.started {
            if n == 0 {
                return None;
            }
            self.backtrack()
        } else {
            self.started = true;
            n == 0 || self.place(0)
        };
        while ok && self.choice.len() < n {
            ok = self.place(0) || self.backtrack();
        }
        if !ok {
            return None;
        }
        let mut next_offset = vec![0u64; self.types.len()];
        let sets = self
            .choice
            .iter()
            .map(|&t| {
                let offset = next_offset[t];
                next_offset[t] += 1;
                self.types[t].profile.reconstruct().translate(offset)
            })
            .collect();
        let mut weight = 1u64;
        for (t, &k) in self.used.iter().enumerate() {
            let c = self.types[t].translates;
            for i in 0..k {
                weight *= c - i;
            }
        }
        Some((Labeling::new(self.universe_max, sets), weight))
    }
}

/// An AIASL of a bipartite graph whose two sides get labels of opposite
/// cardinality parity, all with common difference 1: side one gets `{i}`,
/// side two gets `{j, j+1}`. Every edge label then has two elements, so every
/// edge is positive and the signed graph is balanced.
pub fn construct_balanced_bipartite_labeling(g: &Graph) -> Result<Labeling> {
    let parts = g.bipartition().ok_or(Error::NotBipartite)?;
    let mut sets = vec![IntegerSet::singleton(0); g.vertex_count()];
    for (i, &v) in parts.left.iter().enumerate() {
        sets[v] = IntegerSet::singleton(i as u64);
    }
    for (j, &v) in parts.right.iter().enumerate() {
        sets[v] = ApProfile::progression(j as u64, 1, 2)
            .unwrap()
            .reconstruct();
    }
    let vertex_max = sets.iter().map(IntegerSet::largest).max().unwrap_or(0);
    let edge_max = g
        .edges()
        .iter()
        .map(|e| sets[e.u].largest() + sets[e.v].largest())
        .max()
        .unwrap_or(0);
    Ok(Labeling::new(vertex_max.max(edge_max), sets))
}
