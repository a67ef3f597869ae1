use std::fmt;

use serde::{Serialize, Serializer};

/// A subset of the elements `0..order` of some finite semigroup.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: Vec<bool>,
}

impl ElementSet {
    pub fn empty(order: usize) -> Self {
        ElementSet {
            bits: vec![false; order],
        }
    }

    pub fn full(order: usize) -> Self {
        ElementSet {
            bits: vec![true; order],
        }
    }

    /// Panics if an index is `>= order`.
    pub fn from_indices(order: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(order);
        for x in indices {
            set.insert(x);
        }
        set
    }

    pub fn from_predicate(order: usize, mut pred: impl FnMut(usize) -> bool) -> Self {
        ElementSet {
            bits: (0..order).map(&mut pred).collect(),
        }
    }

    /// The subset encoded by the low `order` bits of `mask`.
    pub fn from_mask(order: usize, mask: u64) -> Self {
        Self::from_predicate(order, |x| mask >> x & 1 == 1)
    }

    pub fn order(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn contains(&self, x: usize) -> bool {
        self.bits.get(x).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, x: usize) {
        assert!(
            x < self.bits.len(),
            "element {x} outside 0..{}",
            self.bits.len()
        );
        self.bits[x] = true;
    }

    pub fn remove(&mut self, x: usize) {
        if x < self.bits.len() {
            self.bits[x] = false;
        }
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.bits.iter().any(|&b| b)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        ElementSet {
            bits: self.bits.iter().map(|b| !b).collect(),
        }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a && b)
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a || b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a && !b)
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.iter().all(|x| other.contains(x))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Self {
        assert_eq!(
            self.order(),
            other.order(),
            "sets over different semigroups"
        );
        ElementSet {
            bits: self
                .bits
                .iter()
                .zip(&other.bits)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}
