//! Dense index subsets tied to a fixed universe size.
//!
//! [`ObjectSet`] and [`AttributeSet`] share the representation but are
//! distinct types, so an extent can never be passed where an intent is
//! expected.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::marker::PhantomData;

use fixedbitset::FixedBitSet;

/// Marker for subsets of the object universe.
#[derive(Debug)]
pub enum Objects {}

/// Marker for subsets of the attribute universe.
#[derive(Debug)]
pub enum Attributes {}

pub type ObjectSet = Subset<Objects>;
pub type AttributeSet = Subset<Attributes>;

/// A subset of `{0, .., universe - 1}`.
///
/// Ordering is lexicographic on the ascending member list, so `{0,2}`
/// sorts between `{0,1,2}` and `{1}`.
pub struct Subset<K> {
    bits: FixedBitSet,
    _kind: PhantomData<fn() -> K>,
}

impl<K> Subset<K> {
    pub fn empty(universe: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(universe),
            _kind: PhantomData,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.bits.insert_range(..);
        s
    }

    /// Panics if an index is outside the universe.
    pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
        let mut s = Self::empty(universe);
        for i in indices {
            s.insert(i);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    pub fn insert(&mut self, i: usize) {
        assert!(
            i < self.universe(),
            "index {i} outside universe of size {}",
            self.universe()
        );
        self.bits.insert(i);
    }

    pub fn remove(&mut self, i: usize) {
        assert!(
            i < self.universe(),
            "index {i} outside universe of size {}",
            self.universe()
        );
        self.bits.set(i, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    /// Lowest member, if any.
    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn is_proper_subset(&self, other: &Self) -> bool {
        self.is_subset(other) && self.bits != other.bits
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.check_universe(other);
        self.bits.is_disjoint(&other.bits)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut s = self.clone();
        s.union_with(other);
        s
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.check_universe(other);
        let mut s = self.clone();
        s.bits.difference_with(&other.bits);
        s
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.check_universe(other);
        self.bits.intersect_with(&other.bits);
    }

    pub fn union_with(&mut self, other: &Self) {
        self.check_universe(other);
        self.bits.union_with(&other.bits);
    }

    /// Re-index onto a smaller universe, keeping only members listed in
    /// `kept` (old indices, ascending). Member `kept[j]` becomes `j`.
    pub fn project(&self, kept: &[usize]) -> Self {
        Self::from_indices(
            kept.len(),
            kept.iter()
                .enumerate()
                .filter(|&(_, &old)| self.contains(old))
                .map(|(new, _)| new),
        )
    }

    fn check_universe(&self, other: &Self) {
        assert_eq!(
            self.universe(),
            other.universe(),
            "subsets from different universes"
        );
    }
}

impl<K> Clone for Subset<K> {
    fn clone(&self) -> Self {
        Self {
            bits: self.bits.clone(),
            _kind: PhantomData,
        }
    }
}

impl<K> PartialEq for Subset<K> {
    fn eq(&self, other: &Self) -> bool {
        self.bits == other.bits
    }
}

impl<K> Eq for Subset<K> {}

impl<K> Hash for Subset<K> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl<K> Ord for Subset<K> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then_with(|| self.universe().cmp(&other.universe()))
    }
}

impl<K> PartialOrd for Subset<K> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<K> fmt::Debug for Subset<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
