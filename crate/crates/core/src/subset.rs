//! Bit-set subsets of a finite universe of at most 64 elements.

use std::fmt;

/// Largest universe a [`Subset`] can index.
pub const MAX_UNIVERSE: usize = 64;

/// A subset of `{0, .., n-1}` stored as a bit mask; bit `i` is element `i`.
///
/// Subsets order by their mask value, which is the canonical order used for
/// every sorted family in the crate.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    /// The full universe `{0, .., n-1}`.
    pub fn full(n: usize) -> Subset {
        debug_assert!(n <= MAX_UNIVERSE);
        if n == MAX_UNIVERSE {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << n) - 1)
        }
    }

    pub fn singleton(x: usize) -> Subset {
        Subset(1u64 << x)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(items: I) -> Subset {
        items.into_iter().fold(Subset::EMPTY, |s, x| s.with(x))
    }

    #[inline]
    pub fn contains(self, x: usize) -> bool {
        self.0 >> x & 1 == 1
    }

    #[inline]
    pub fn with(self, x: usize) -> Subset {
        Subset(self.0 | 1u64 << x)
    }

    #[inline]
    pub fn without(self, x: usize) -> Subset {
        Subset(self.0 & !(1u64 << x))
    }

    #[inline]
    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Subset) -> Subset {
        Subset(self.0 & !other.0)
    }

    /// Complement relative to a universe of `n` elements.
    #[inline]
    pub fn complement(self, n: usize) -> Subset {
        Subset(!self.0 & Subset::full(n).0)
    }

    #[inline]
    pub fn is_subset(self, other: Subset) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn meets(self, other: Subset) -> bool {
        self.0 & other.0 != 0
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Least element in index order.
    pub fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> SubsetIter {
        SubsetIter(self.0)
    }

    /// Every subset of a universe of `n` elements, in mask order.
    pub fn all(n: usize) -> impl Iterator<Item = Subset> {
        debug_assert!(n < MAX_UNIVERSE);
        (0..1u64 << n).map(Subset)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SubsetIter(u64);

impl Iterator for SubsetIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let x = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(x)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for SubsetIter {}

impl IntoIterator for Subset {
    type Item = usize;
    type IntoIter = SubsetIter;

    fn into_iter(self) -> SubsetIter {
        self.iter()
    }
}

impl FromIterator<usize> for Subset {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Subset::from_elements(iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = Subset::from_elements([0, 2]);
        let b = Subset::from_elements([2, 3]);
        assert_eq!(a.union(b), Subset::from_elements([0, 2, 3]));
        assert_eq!(a.intersection(b), Subset::singleton(2));
        assert_eq!(a.difference(b), Subset::singleton(0));
        assert_eq!(a.complement(4), Subset::from_elements([1, 3]));
        assert!(Subset::singleton(2).is_subset(a));
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(Subset::full(64).len(), 64);
        assert_eq!(Subset::all(3).count(), 8);
    }
}
