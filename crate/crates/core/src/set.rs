//! Subsets of a ground set `[n]`, stored as a 64-bit mask.
//!
//! Elements are 1-based at every public boundary. Bit `i - 1` of the mask
//! holds element `i`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ground set an [`ElementSet`] can describe.
pub const MAX_GROUND: usize = 64;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct ElementSet(u64);

impl ElementSet {
    pub const EMPTY: ElementSet = ElementSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        ElementSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{1, .., n}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND, "ground set of size {n} exceeds {MAX_GROUND}");
        if n == MAX_GROUND {
            ElementSet(u64::MAX)
        } else {
            ElementSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(e: usize) -> Self {
        debug_assert!((1..=MAX_GROUND).contains(&e));
        ElementSet(1u64 << (e - 1))
    }

    /// Builds a set from 1-based labels, rejecting anything outside `1..=n`
    /// as well as repeated labels.
    pub fn from_elements<I>(elements: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > n || e > MAX_GROUND {
                return Err(Error::OutOfRange { element: e, n });
            }
            let b = 1u64 << (e - 1);
            if bits & b != 0 {
                return Err(Error::DuplicateElement { element: e });
            }
            bits |= b;
        }
        Ok(ElementSet(bits))
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, e: usize) -> bool {
        (1..=MAX_GROUND).contains(&e) && self.0 & (1u64 << (e - 1)) != 0
    }

    pub const fn union(self, other: Self) -> Self {
        ElementSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: Self) -> Self {
        ElementSet(self.0 & other.0)
    }

    pub const fn difference(self, other: Self) -> Self {
        ElementSet(self.0 & !other.0)
    }

    pub const fn symmetric_difference(self, other: Self) -> Self {
        ElementSet(self.0 ^ other.0)
    }

    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_proper_subset(self, other: Self) -> bool {
        self.is_subset(other) && self.0 != other.0
    }

    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << (e - 1);
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << (e - 1));
    }

    /// Smallest member.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Largest member.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> Elements {
        Elements(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Compares the ascending member lists lexicographically, so
    /// `[] < [1] < [1, 2] < [1, 3] < [2]`.
    pub fn lex_cmp(self, other: Self) -> Ordering {
        let diff = self.0 ^ other.0;
        if diff == 0 {
            return Ordering::Equal;
        }
        // Both lists agree up to the first element on which they differ.
        let low = diff & diff.wrapping_neg();
        let above = !((low << 1).wrapping_sub(1));
        let (holder, other_bits) = if self.0 & low != 0 {
            (Ordering::Less, other.0)
        } else {
            (Ordering::Greater, self.0)
        };
        // The list without the differing element either continues with a
        // larger element (and loses) or stops there (and wins).
        if other_bits & above != 0 {
            holder
        } else {
            holder.reverse()
        }
    }

    /// Canonical circuit order: ascending cardinality, ties by [`Self::lex_cmp`].
    pub fn canonical_cmp(self, other: Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.lex_cmp(other))
    }

    /// Renumbers the members of `self` that lie in `kept` so that the
    /// members of `kept` become `1..=|kept|`, preserving their order.
    pub fn compress(self, kept: ElementSet) -> ElementSet {
        let mut out = 0u64;
        for (new, old) in kept.iter().enumerate() {
            if self.contains(old) {
                out |= 1u64 << new;
            }
        }
        ElementSet(out)
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

impl FromIterator<usize> for ElementSet {
    /// Panics on labels outside `1..=64`; use [`ElementSet::from_elements`]
    /// for untrusted input.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = ElementSet::EMPTY;
        for e in iter {
            assert!((1..=MAX_GROUND).contains(&e), "element {e} out of range");
            s.insert(e);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for ElementSet {
    fn from(items: [usize; N]) -> Self {
        items.into_iter().collect()
    }
}

pub struct Elements(u64);

impl Iterator for Elements {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Elements {}

/// All `k`-subsets of `[n]` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<ElementSet> {
    fn rec(start: usize, n: usize, left: usize, acc: u64, out: &mut Vec<ElementSet>) {
        if left == 0 {
            out.push(ElementSet(acc));
            return;
        }
        for e in start..=n {
            if n - e + 1 < left {
                break;
            }
            rec(e + 1, n, left - 1, acc | 1u64 << (e - 1), out);
        }
    }
    let mut out = Vec::new();
    if k <= n {
        rec(1, n, k, 0, &mut out);
    }
    out
}
