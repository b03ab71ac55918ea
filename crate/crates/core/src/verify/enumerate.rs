//! Backtracking enumeration of AIASL-admissible labelings.

use alloc::vec;
use alloc::vec::Vec;

use super::{RatioFilter, SearchBounds};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labeling::{classify_profiles, EdgeShape, Labeling};
use crate::sets::{ApProfile, IntegerSet};

/// Every AP-valued subset of `{0, ..., universe_max}` with at most
/// `max_label_size` elements, in lexicographic order of elements.
pub fn candidate_labels(universe_max: u64, max_label_size: usize) -> Vec<IntegerSet> {
    let mut out: Vec<IntegerSet> = (0..=universe_max).map(IntegerSet::singleton).collect();
    for len in 2..=max_label_size {
        let span = len as u64 - 1;
        for d in 1..=universe_max / span.max(1) {
            for first in 0..=universe_max.saturating_sub(d * span) {
                if first + d * span > universe_max {
                    continue;
                }
                out.push(
                    ApProfile::progression(first, d, len)
                        .expect("len >= 2, d >= 1")
                        .reconstruct(),
                );
            }
        }
    }
    out.sort_unstable();
    out
}

/// Whether an edge between two progressions is allowed under `filter`.
pub(crate) fn edge_allowed(a: &ApProfile, b: &ApProfile, filter: RatioFilter) -> Option<EdgeShape> {
    let shape = classify_profiles(a, b).ok()?;
    match filter {
        RatioFilter::Any => Some(shape),
        RatioFilter::AllOdd => (shape.ratio % 2 == 1).then_some(shape),
    }
}

/// Streams the admissible labelings of a graph in lexicographic order of
/// candidate indices (vertex 0 varies slowest).
///
/// A partial assignment is abandoned as soon as one of its edges breaks
/// injectivity, admissibility, the ratio filter or (in strict mode) the universe.
pub struct AiaslEnumerator<'g> {
    graph: &'g Graph,
    universe_max: u64,
    candidates: Vec<IntegerSet>,
    compatible: Vec<Vec<bool>>,
    choice: Vec<usize>,
    used: Vec<bool>,
    started: bool,
    done: bool,
}

impl<'g> AiaslEnumerator<'g> {
    pub fn new(graph: &'g Graph, bounds: &SearchBounds, filter: RatioFilter) -> Result<Self> {
        bounds.validate()?;
        if graph.vertex_count() > bounds.max_vertices {
            return Err(Error::BoundExceeded {
                what: "vertex count",
                actual: graph.vertex_count(),
                bound: bounds.max_vertices,
            });
        }
        let candidates = candidate_labels(bounds.universe_max, bounds.max_label_size);
        let profiles: Vec<ApProfile> = candidates
            .iter()
            .map(|c| c.ap_profile().expect("candidates are progressions"))
            .collect();
        let compatible = profiles
            .iter()
            .zip(&candidates)
            .map(|(p, s)| {
                profiles
                    .iter()
                    .zip(&candidates)
                    .map(|(q, t)| {
                        edge_allowed(p, q, filter).is_some()
                            && (!bounds.require_strict_universe
                                || s.largest() + t.largest() <= bounds.universe_max)
                    })
                    .collect()
            })
            .collect();
        let n = candidates.len();
        Ok(AiaslEnumerator {
            graph,
            universe_max: bounds.universe_max,
            compatible,
            choice: Vec::with_capacity(graph.vertex_count()),
            used: vec![false; n],
            candidates,
            started: false,
            done: false,
        })
    }

    pub fn candidates(&self) -> &[IntegerSet] {
        &self.candidates
    }

    fn fits(&self, v: usize, c: usize) -> bool {
        !self.used[c]
            && self
                .graph
                .neighbors(v)
                .iter()
                .take_while(|&&w| w < v)
                .all(|&w| self.compatible[self.choice[w]][c])
    }

    /// Tries candidates `from..` for the next vertex.
    fn place(&mut self, from: usize) -> bool {
        let v = self.choice.len();
        for c in from..self.candidates.len() {
            if self.fits(v, c) {
                self.used[c] = true;
                self.choice.push(c);
                return true;
            }
        }
        false
    }

    /// Pops the last vertex and advances it; false when exhausted.
    fn backtrack(&mut self) -> bool {
        while let Some(c) = self.choice.pop() {
            self.used[c] = false;
            if self.place(c + 1) {
                return true;
            }
        }
        false
    }

    /// Advances to the next complete assignment, returning candidate indices.
    pub fn next_indices(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        let n = self.graph.vertex_count();
        let mut ok = if self.started {
            self.backtrack()
        } else {
            self.started = true;
            n == 0 || self.place(0)
        };
        if n == 0 {
            // the empty labeling, once
            if ok {
                self.done = true;
                return Some(&self.choice);
            }
        }
        while ok && self.choice.len() < n {
            ok = self.place(0) || self.backtrack();
        }
        if ok {
            Some(&self.choice)
        } else {
            self.done = true;
            None
        }
    }
}

impl Iterator for AiaslEnumerator<'_> {
    type Item = Labeling;

    fn next(&mut self) -> Option<Labeling> {
        let universe_max = self.universe_max;
        let idx = self.next_indices()?.to_vec();
        Some(Labeling::new(
            universe_max,
            idx.into_iter()
                .map(|c| self.candidates[c].clone())
                .collect(),
        ))
    }
}

/// All admissible labelings of `g` within `bounds`.
pub fn enumerate_aiasl<'g>(g: &'g Graph, bounds: &SearchBounds) -> Result<AiaslEnumerator<'g>> {
    AiaslEnumerator::new(g, bounds, RatioFilter::Any)
}
