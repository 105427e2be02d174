//! Fixed-width index sets packed into a single machine word.
//!
//! Everything downstream (monomial supports, graph vertex sets, simplicial
//! faces) is a subset of `{1..=n}` with `n <= 64`, so divisibility,
//! coprimality and face tests are all single word operations.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

/// A set of 1-based indices drawn from `{1..=64}`.
///
/// The `Ord` instance is degree-lexicographic: smaller sets come first and
/// ties are broken by the lexicographic order of the ascending index
/// sequences. Sorting with it reproduces the canonical generator order used
/// in all textual output.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VarSet(u64);

impl VarSet {
    pub const MAX_AMBIENT: usize = 64;
    pub const EMPTY: VarSet = VarSet(0);

    #[inline]
    fn bit(i: usize) -> u64 {
        assert!((1..=Self::MAX_AMBIENT).contains(&i), "index {i} out of 1..=64");
        1u64 << (i - 1)
    }

    pub fn singleton(i: usize) -> Self {
        VarSet(Self::bit(i))
    }

    /// The full set `{1..=n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= Self::MAX_AMBIENT);
        if n == 0 {
            VarSet(0)
        } else {
            VarSet(u64::MAX >> (64 - n))
        }
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut bits = 0u64;
        for i in indices {
            bits |= Self::bit(i);
        }
        VarSet(bits)
    }

    #[inline]
    pub fn contains(self, i: usize) -> bool {
        self.0 & Self::bit(i) != 0
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.0 |= Self::bit(i);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.0 &= !Self::bit(i);
    }

    #[inline]
    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | Self::bit(i))
    }

    #[inline]
    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !Self::bit(i))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: VarSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(64 - self.0.leading_zeros() as usize)
        }
    }

    /// Complement inside the ambient set `{1..=n}`.
    pub fn complement_in(self, n: usize) -> VarSet {
        VarSet(Self::full(n).0 & !self.0)
    }

    /// Indices in ascending order.
    pub fn iter(self) -> Indices {
        Indices(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the ascending index sequences, with the
    /// usual convention that a proper prefix sorts first.
    pub fn lex_cmp(self, other: VarSet) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        let low = diff & diff.wrapping_neg();
        let above = !(low | (low - 1));
        if self.0 & low != 0 {
            if other.0 & above == 0 {
                // `other` is a strict prefix of `self`.
                Ordering::Greater
            } else {
                Ordering::Less
            }
        } else if self.0 & above == 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(*other))
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl BitOr for VarSet {
    type Output = VarSet;
    fn bitor(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 | rhs.0)
    }
}

impl BitAnd for VarSet {
    type Output = VarSet;
    fn bitand(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & rhs.0)
    }
}

impl Sub for VarSet {
    type Output = VarSet;
    fn sub(self, rhs: VarSet) -> VarSet {
        VarSet(self.0 & !rhs.0)
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VarSet::from_indices(iter)
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (pos, i) in self.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl serde::Serialize for VarSet {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let i = self.0.trailing_zeros() as usize + 1;
            self.0 &= self.0 - 1;
            Some(i)
        }
    }
}

/// Keep only the inclusion-minimal sets, deduplicated and canonically sorted.
pub fn inclusion_minimal(sets: impl IntoIterator<Item = VarSet>) -> Vec<VarSet> {
    let mut sets: Vec<VarSet> = sets.into_iter().collect();
    sets.sort();
    sets.dedup();
    let mut result: Vec<VarSet> = Vec::with_capacity(sets.len());
    // Degree-lex order means earlier entries can never strictly contain
    // later ones, so one forward pass suffices.
    'outer: for s in sets {
        for kept in &result {
            if kept.is_subset(s) {
                continue 'outer;
            }
        }
        result.push(s);
    }
    result
}

/// Keep only the inclusion-maximal sets, deduplicated and canonically sorted.
pub fn inclusion_maximal(sets: impl IntoIterator<Item = VarSet>) -> Vec<VarSet> {
    let mut sets: Vec<VarSet> = sets.into_iter().collect();
    sets.sort();
    sets.dedup();
    let mut result: Vec<VarSet> = Vec::with_capacity(sets.len());
    'outer: for s in sets.into_iter().rev() {
        for kept in &result {
            if s.is_subset(*kept) {
                continue 'outer;
            }
        }
        result.push(s);
    }
    result.sort();
    result
}

/// All subsets of `{1..=n}` of the given size, in canonical order.
pub fn subsets_of_size(n: usize, size: usize) -> Vec<VarSet> {
    use itertools::Itertools;
    (1..=n)
        .combinations(size)
        .map(VarSet::from_indices)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = VarSet::from_indices([1, 3, 5]);
        assert_eq!(a.len(), 3);
        assert!(a.contains(3));
        assert!(!a.contains(2));
        assert_eq!(a.to_vec(), vec![1, 3, 5]);
        assert_eq!(a.complement_in(6).to_vec(), vec![2, 4, 6]);
        let b = VarSet::from_indices([2, 4, 6]);
        assert!(a.is_disjoint(b));
        assert_eq!((a | b), VarSet::full(6));
    }

    #[test]
    fn degree_lex_order() {
        let mut sets = vec![
            VarSet::from_indices([2, 3]),
            VarSet::from_indices([1, 4]),
            VarSet::from_indices([2]),
            VarSet::from_indices([1, 2, 3]),
            VarSet::from_indices([1, 3]),
        ];
        sets.sort();
        let seqs: Vec<Vec<usize>> = sets.iter().map(|s| s.to_vec()).collect();
        assert_eq!(
            seqs,
            vec![
                vec![2],
                vec![1, 3],
                vec![1, 4],
                vec![2, 3],
                vec![1, 2, 3]
            ]
        );
    }

    #[test]
    fn lex_prefix_rule() {
        let a = VarSet::from_indices([1, 2]);
        let b = VarSet::from_indices([1, 2, 3]);
        assert_eq!(a.lex_cmp(b), Ordering::Less);
        assert_eq!(b.lex_cmp(a), Ordering::Greater);
        // {1,4} < {2,3} lexicographically even though 0b1001 > 0b0110.
        let c = VarSet::from_indices([1, 4]);
        let d = VarSet::from_indices([2, 3]);
        assert_eq!(c.lex_cmp(d), Ordering::Less);
    }

    #[test]
    fn minimal_and_maximal() {
        let sets = [
            VarSet::from_indices([1, 2]),
            VarSet::from_indices([1, 2, 3]),
            VarSet::from_indices([2, 3]),
            VarSet::from_indices([4]),
        ];
        let min = inclusion_minimal(sets);
        assert_eq!(
            min,
            vec![
                VarSet::from_indices([4]),
                VarSet::from_indices([1, 2]),
                VarSet::from_indices([2, 3]),
            ]
        );
        let max = inclusion_maximal(sets);
        assert_eq!(
            max,
            vec![VarSet::from_indices([4]), VarSet::from_indices([1, 2, 3])]
        );
    }
}
