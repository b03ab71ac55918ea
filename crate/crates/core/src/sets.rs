//! Finite sets of non-negative integers and the arithmetic the labelings need:
//! sumsets, arithmetic-progression profiles, cardinality parity and the
//! closed-form size of a sumset of two compatible progressions.

use alloc::vec::Vec;
use core::fmt;
use core::num::NonZeroU64;

use crate::error::{Error, Result};

/// A non-empty, strictly increasing set of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntegerSet(Vec<u64>);

impl IntegerSet {
    /// Builds a set from arbitrary elements; order and repetition are ignored.
    ///
    /// Fails with `EMPTY_LABEL` when no element is supplied. `owner` names the
    /// element being labeled so the error is actionable.
    pub fn new<I: IntoIterator<Item = u64>>(elements: I, owner: &str) -> Result<Self> {
        let mut v: Vec<u64> = elements.into_iter().collect();
        if v.is_empty() {
            return Err(Error::EmptyLabel(owner.into()));
        }
        v.sort_unstable();
        v.dedup();
        Ok(IntegerSet(v))
    }

    pub fn singleton(x: u64) -> Self {
        IntegerSet(alloc::vec![x])
    }

    /// Caller guarantees `v` is non-empty and strictly increasing.
    pub(crate) fn from_sorted(v: Vec<u64>) -> Self {
        debug_assert!(!v.is_empty());
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        IntegerSet(v)
    }

    /// The set-indexing number.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn elements(&self) -> &[u64] {
        &self.0
    }

    pub fn smallest(&self) -> u64 {
        self.0[0]
    }

    pub fn largest(&self) -> u64 {
        self.0[self.0.len() - 1]
    }

    pub fn contains(&self, x: u64) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    /// True when every element lies in `{0, ..., universe_max}`.
    pub fn within_universe(&self, universe_max: u64) -> bool {
        self.largest() <= universe_max
    }

    /// Sum of the elements; used to rank counterexamples by size.
    pub fn mass(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn parity(&self) -> Parity {
        set_parity(self)
    }

    pub fn ap_profile(&self) -> Option<ApProfile> {
        ap_profile(self)
    }

    /// The same set shifted by `offset`.
    pub fn translate(&self, offset: u64) -> Self {
        IntegerSet(self.0.iter().map(|x| x + offset).collect())
    }
}

impl fmt::Display for IntegerSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str("}")
    }
}

/// Span below which sumsets are accumulated in a bitmap instead of sorted.
const BITMAP_SPAN: u64 = 1 << 14;

/// `{x + y : x ∈ a, y ∈ b}`.
pub fn sumset(a: &IntegerSet, b: &IntegerSet) -> IntegerSet {
    let lo = a.smallest() + b.smallest();
    let span = a.largest() + b.largest() - lo + 1;
    if span <= BITMAP_SPAN {
        let mut words = alloc::vec![0u64; span.div_ceil(64) as usize];
        for &x in a.elements() {
            for &y in b.elements() {
                let i = x + y - lo;
                words[(i / 64) as usize] |= 1 << (i % 64);
            }
        }
        let mut out = Vec::with_capacity(a.len() + b.len());
        for (w, &word) in words.iter().enumerate() {
            let mut bits = word;
            while bits != 0 {
                let t = bits.trailing_zeros() as u64;
                out.push(lo + w as u64 * 64 + t);
                bits &= bits - 1;
            }
        }
        IntegerSet::from_sorted(out)
    } else {
        let mut out: Vec<u64> = a
            .elements()
            .iter()
            .flat_map(|&x| b.elements().iter().map(move |&y| x + y))
            .collect();
        out.sort_unstable();
        out.dedup();
        IntegerSet::from_sorted(out)
    }
}

/// Cardinality parity of a set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// `Even` iff `|s|` is even.
pub fn set_parity(s: &IntegerSet) -> Parity {
    if s.len() % 2 == 0 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

/// First term, common difference and length of an arithmetic progression.
///
/// Singletons have no determined common difference: `diff` is `None` exactly
/// when `length == 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ApProfile {
    pub first: u64,
    pub diff: Option<NonZeroU64>,
    pub length: usize,
}

impl ApProfile {
    /// Profile of a progression with at least two terms. Returns `None` for
    /// `diff == 0` or `length < 2`.
    pub fn progression(first: u64, diff: u64, length: usize) -> Option<Self> {
        if length < 2 {
            return None;
        }
        Some(ApProfile {
            first,
            diff: Some(NonZeroU64::new(diff)?),
            length,
        })
    }

    pub fn singleton(first: u64) -> Self {
        ApProfile {
            first,
            diff: None,
            length: 1,
        }
    }

    /// `{first + i·diff : 0 ≤ i < length}`.
    pub fn reconstruct(&self) -> IntegerSet {
        let d = self.diff.map_or(0, NonZeroU64::get);
        IntegerSet::from_sorted(
            (0..self.length as u64)
                .map(|i| self.first + i * d)
                .collect(),
        )
    }

    pub fn last(&self) -> u64 {
        self.first + self.diff.map_or(0, NonZeroU64::get) * (self.length as u64 - 1)
    }
}

/// The progression profile of `s`, or `None` when `s` is not an arithmetic progression.
pub fn ap_profile(s: &IntegerSet) -> Option<ApProfile> {
    let e = s.elements();
    if e.len() == 1 {
        return Some(ApProfile::singleton(e[0]));
    }
    let d = e[1] - e[0];
    if e.windows(2).all(|w| w[1] - w[0] == d) {
        ApProfile::progression(e[0], d, e.len())
    } else {
        None
    }
}

/// Size of `A + B` where `A` has `m` terms and difference `d`, `B` has `n`
/// terms and difference `k·d`: `m + k(n − 1)`.
///
/// Requires `k ≤ m`; beyond that the translates of `A` stop overlapping and
/// the sumset is no longer a progression.
pub fn ap_sumset_cardinality(m: usize, n: usize, k: u64) -> Result<usize> {
    if m == 0 || n == 0 || k == 0 {
        return Err(Error::AdmissibilityViolation(alloc::format!(
            "lengths and ratio must be positive (m={m}, n={n}, k={k})"
        )));
    }
    if k > m as u64 {
        return Err(Error::AdmissibilityViolation(alloc::format!(
            "deterministic ratio {k} exceeds |f(u)| = {m}"
        )));
    }
    Ok(m + k as usize * (n - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use alloc::vec;
    use proptest::prelude::*;

    fn set(v: &[u64]) -> IntegerSet {
        IntegerSet::new(v.iter().copied(), "t").unwrap()
    }

    // Independent oracle: every pairwise sum into an ordered set.
    fn naive_sumset(a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut s = BTreeSet::new();
        for x in a {
            for y in b {
                s.insert(x + y);
            }
        }
        s.into_iter().collect()
    }

    #[test]
    fn sumset_examples() {
        assert_eq!(sumset(&set(&[0]), &set(&[0])), set(&[0]));
        assert_eq!(sumset(&set(&[1, 2]), &set(&[3, 5])), set(&[4, 5, 6, 7]));
        assert_eq!(
            sumset(&set(&[0, 1]), &set(&[0, 2, 4])),
            set(&[0, 1, 2, 3, 4, 5])
        );
        assert_eq!(naive_sumset(&[1, 2], &[3, 5]), vec![4, 5, 6, 7]);
    }

    #[test]
    fn sumset_wide_span_uses_sorting_path() {
        let a = set(&[0, 1 << 20]);
        let b = set(&[3, 5]);
        assert_eq!(
            sumset(&a, &b).elements(),
            naive_sumset(a.elements(), b.elements()).as_slice()
        );
    }

    #[test]
    fn empty_set_is_rejected() {
        assert_eq!(
            IntegerSet::new(core::iter::empty(), "u"),
            Err(Error::EmptyLabel("u".into()))
        );
    }

    #[test]
    fn new_normalizes() {
        assert_eq!(set(&[4, 0, 2, 2]).elements(), &[0, 2, 4]);
    }

    #[test]
    fn ap_profile_examples() {
        assert_eq!(ap_profile(&set(&[3])), Some(ApProfile::singleton(3)));
        assert_eq!(
            ap_profile(&set(&[2, 5, 8])),
            ApProfile::progression(2, 3, 3)
        );
        assert_eq!(ap_profile(&set(&[1, 2, 4])), None);
    }

    #[test]
    fn parity_examples() {
        assert_eq!(set_parity(&set(&[0, 1])), Parity::Even);
        assert_eq!(set_parity(&set(&[7])), Parity::Odd);
        assert_eq!(set_parity(&set(&[0, 2, 4])), Parity::Odd);
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(ap_sumset_cardinality(1, 5, 1), Ok(5));
        // |{0,1}+{0,2}| and |{0,1,2}+{0,1,2}| by the oracle
        assert_eq!(naive_sumset(&[0, 1], &[0, 2]).len(), 4);
        assert_eq!(naive_sumset(&[0, 1, 2], &[0, 1, 2]).len(), 5);
        assert_eq!(ap_sumset_cardinality(2, 2, 2), Ok(4));
        assert_eq!(ap_sumset_cardinality(3, 3, 1), Ok(5));
        assert!(matches!(
            ap_sumset_cardinality(2, 3, 3),
            Err(Error::AdmissibilityViolation(_))
        ));
    }

    #[test]
    fn cardinality_formula_exhaustive() {
        for first_a in 0..=20u64 {
            for first_b in 0..=20u64 {
                for d in 1..=5u64 {
                    for k in 1..=5u64 {
                        if k * d > 5 {
                            continue;
                        }
                        for m in 1..=6usize {
                            if k > m as u64 {
                                continue;
                            }
                            for n in 1..=6usize {
                                let a: Vec<u64> = (0..m as u64).map(|i| first_a + i * d).collect();
                                let b: Vec<u64> =
                                    (0..n as u64).map(|i| first_b + i * k * d).collect();
                                let s = naive_sumset(&a, &b);
                                assert_eq!(ap_sumset_cardinality(m, n, k), Ok(s.len()));
                                let p = ap_profile(&IntegerSet::from_sorted(s)).unwrap();
                                if p.length > 1 {
                                    assert_eq!(p.diff.unwrap().get(), d);
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    fn arb_set() -> impl Strategy<Value = IntegerSet> {
        proptest::collection::vec(0u64..60, 1..8).prop_map(|v| IntegerSet::new(v, "p").unwrap())
    }

    proptest! {
        #[test]
        fn sumset_matches_oracle_and_commutes(a in arb_set(), b in arb_set()) {
            let s = sumset(&a, &b);
            let expected = naive_sumset(a.elements(), b.elements());
            prop_assert_eq!(s.elements(), expected.as_slice());
            prop_assert_eq!(&s, &sumset(&b, &a));
            prop_assert!(s.len() >= a.len().max(b.len()));
            prop_assert!(s.len() <= a.len() * b.len());
        }

        #[test]
        fn profile_reconstruct_roundtrip(first in 0u64..1000, diff in 1u64..50, length in 2usize..20) {
            let p = ApProfile::progression(first, diff, length).unwrap();
            let s = p.reconstruct();
            prop_assert_eq!(s.len(), length);
            prop_assert_eq!(ap_profile(&s), Some(p));
            prop_assert_eq!(p.last(), s.largest());
        }
    }
}
