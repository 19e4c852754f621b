//! Subsets of the ground set `{1, …, m}` and multi-indices in `ℕ^m`.
//!
//! A [`VertexSet`] is a bitmask over at most 64 vertices with a 1-based
//! external interface (vertex `i` is bit `i-1`).  A [`MultiIndex`] is an
//! exponent vector; its support is the [`VertexSet`] of positions with a
//! positive entry.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::fmt;

/// Maximum supported ground-set size.
pub const MAX_VERTICES: usize = 64;

/// A subset of `{1, …, m}` stored as a bitmask.
///
/// The derived `Ord` compares raw bitmasks, which is a deterministic total
/// order suitable for `BTreeMap` keys.  Where an order by (cardinality,
/// lexicographic member list) is required, use [`VertexSet::cmp_dim_lex`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn empty() -> Self {
        VertexSet(0)
    }

    /// The full set `{1, …, m}`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_VERTICES);
        if m == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << m) - 1)
        }
    }

    /// The singleton `{v}` (1-based).
    pub fn singleton(v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        vs.iter().fold(VertexSet::EMPTY, |s, &v| s.insert(v))
    }

    pub fn insert(self, v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(self.0 | (1u64 << (v - 1)))
    }

    pub fn remove(self, v: usize) -> Self {
        assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(self.0 & !(1u64 << (v - 1)))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Members in ascending order (1-based).
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize + 1;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn min_elem(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    /// Number of members strictly smaller than `v`.
    pub fn count_below(self, v: usize) -> usize {
        if v <= 1 {
            0
        } else {
            (self.0 & ((1u64 << (v - 1)) - 1)).count_ones() as usize
        }
    }

    /// All subsets of `self`, in ascending bitmask order (`∅` first).
    pub fn subsets(self) -> impl Iterator<Item = VertexSet> {
        let mask = self.0;
        let mut cur: Option<u64> = Some(0);
        std::iter::from_fn(move || {
            let s = cur?;
            cur = if s == mask {
                None
            } else {
                Some(s.wrapping_sub(mask) & mask)
            };
            Some(VertexSet(s))
        })
    }

    /// Order by (cardinality, then lexicographic on the ascending member list).
    pub fn cmp_dim_lex(&self, other: &VertexSet) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.to_vec().cmp(&other.to_vec()))
    }

    pub fn bits(self) -> u64 {
        self.0
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "{{}}");
        }
        let parts: Vec<String> = self.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// An exponent vector in `ℕ^m` (index `i` is 1-based in the accessors).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiIndex(pub Vec<u32>);

impl MultiIndex {
    pub fn zeros(m: usize) -> Self {
        MultiIndex(vec![0; m])
    }

    /// The 0/1 vector with support `set`.
    pub fn from_set(set: VertexSet, m: usize) -> Self {
        let mut v = vec![0; m];
        for i in set.iter() {
            v[i - 1] = 1;
        }
        MultiIndex(v)
    }

    pub fn m(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v - 1]
    }

    pub fn set(&mut self, v: usize, value: u32) {
        self.0[v - 1] = value;
    }

    pub fn incremented(&self, v: usize) -> Self {
        let mut out = self.clone();
        out.0[v - 1] += 1;
        out
    }

    pub fn decremented(&self, v: usize) -> Self {
        assert!(self.0[v - 1] > 0);
        let mut out = self.clone();
        out.0[v - 1] -= 1;
        out
    }

    pub fn support(&self) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                s = s.insert(i + 1);
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        assert_eq!(self.m(), other.m());
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Sum of entries at positions strictly below `v` (for Koszul prefixes).
    pub fn total_below(&self, v: usize) -> usize {
        self.0[..v - 1].iter().map(|&e| e as usize).sum()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_operations() {
        let s = VertexSet::from_slice(&[1, 3, 5]);
        assert_eq!(s.len(), 3);
        assert!(s.contains(1) && s.contains(3) && s.contains(5));
        assert!(!s.contains(2));
        assert_eq!(s.to_vec(), vec![1, 3, 5]);
        assert_eq!(s.remove(3).to_vec(), vec![1, 5]);
        assert_eq!(s.insert(2).to_vec(), vec![1, 2, 3, 5]);
        assert_eq!(s.min_elem(), Some(1));
        assert_eq!(VertexSet::EMPTY.min_elem(), None);
        assert_eq!(s.count_below(5), 2);
        assert_eq!(s.count_below(1), 0);

        let t = VertexSet::from_slice(&[3, 4]);
        assert_eq!(s.union(t).to_vec(), vec![1, 3, 4, 5]);
        assert_eq!(s.intersection(t).to_vec(), vec![3]);
        assert_eq!(s.difference(t).to_vec(), vec![1, 5]);
        assert!(!s.is_disjoint(t));
        assert!(VertexSet::from_slice(&[1, 5]).is_subset_of(s));
        assert_eq!(VertexSet::full(4).to_vec(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn subset_enumeration_is_complete() {
        let s = VertexSet::from_slice(&[2, 4, 7]);
        let subs: Vec<VertexSet> = s.subsets().collect();
        assert_eq!(subs.len(), 8);
        assert!(subs.contains(&VertexSet::EMPTY));
        assert!(subs.contains(&s));
        for t in &subs {
            assert!(t.is_subset_of(s));
        }
        // No duplicates.
        let mut dedup = subs.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 8);
        // Empty set has exactly one subset.
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn dim_lex_order() {
        let a = VertexSet::from_slice(&[3]);
        let b = VertexSet::from_slice(&[1, 2]);
        let c = VertexSet::from_slice(&[1, 3]);
        assert_eq!(a.cmp_dim_lex(&b), Ordering::Less); // smaller cardinality first
        assert_eq!(b.cmp_dim_lex(&c), Ordering::Less); // [1,2] < [1,3]
        assert_eq!(c.cmp_dim_lex(&c), Ordering::Equal);
    }

    #[test]
    fn multi_index_support_and_total() {
        let mut a = MultiIndex::zeros(4);
        a.set(2, 3);
        a.set(4, 1);
        assert_eq!(a.support().to_vec(), vec![2, 4]);
        assert_eq!(a.total(), 4);
        assert!(!a.is_squarefree());
        assert_eq!(a.total_below(4), 3);
        assert_eq!(a.total_below(1), 0);

        let b = MultiIndex::from_set(VertexSet::from_slice(&[1, 4]), 4);
        assert!(b.is_squarefree());
        assert_eq!(a.add(&b).0, vec![1, 3, 0, 2]);
        assert_eq!(a.decremented(2).get(2), 2);
        assert_eq!(a.incremented(1).get(1), 1);
    }

    #[test]
    fn display_forms() {
        assert_eq!(VertexSet::from_slice(&[1, 3]).to_string(), "{1,3}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
        assert_eq!(MultiIndex(vec![0, 2, 1]).to_string(), "(0,2,1)");
    }
}
