//! Subsets of a finite carrier, stored as a `u64` bitmask.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::model::MAX_ELEMENTS;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    n: u8,
    bits: u64,
}

impl ElementSet {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ELEMENTS, "universe size {n} exceeds {MAX_ELEMENTS}");
        Self { n: n as u8, bits: 0 }
    }

    pub fn full(n: usize) -> Self {
        Self::from_bits(n, universe_mask(n))
    }

    pub fn singleton(n: usize, a: usize) -> Self {
        assert!(a < n, "element {a} outside universe of size {n}");
        Self::from_bits(n, 1 << a)
    }

    /// Panics if `bits` has members outside `0..n`.
    pub fn from_bits(n: usize, bits: u64) -> Self {
        assert!(n <= MAX_ELEMENTS, "universe size {n} exceeds {MAX_ELEMENTS}");
        assert_eq!(bits & !universe_mask(n), 0, "members outside universe of size {n}");
        Self { n: n as u8, bits }
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Self {
        let mut set = Self::empty(n);
        for a in elements {
            set.insert(a);
        }
        set
    }

    pub fn universe(&self) -> usize {
        self.n as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, a: usize) -> bool {
        a < self.universe() && self.bits >> a & 1 == 1
    }

    pub fn insert(&mut self, a: usize) {
        assert!(a < self.universe(), "element {a} outside universe of size {}", self.n);
        self.bits |= 1 << a;
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.n, other.n);
        Self { n: self.n, bits: self.bits | other.bits }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        debug_assert_eq!(self.n, other.n);
        Self { n: self.n, bits: self.bits & other.bits }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        Self { n: self.n, bits: self.bits & !other.bits }
    }

    /// Least member, if any.
    pub fn first(&self) -> Option<usize> {
        (self.bits != 0).then(|| self.bits.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Members {
        Members { bits: self.bits }
    }

    /// Every subset of `0..n`, ascending by bit pattern. Includes `∅`.
    pub fn all_subsets(n: usize) -> impl Iterator<Item = ElementSet> {
        assert!(n < MAX_ELEMENTS, "cannot enumerate subsets of a {n}-element universe");
        (0..1u64 << n).map(move |bits| ElementSet::from_bits(n, bits))
    }
}

pub(crate) fn universe_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub struct Members {
    bits: u64,
}

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.bits == 0 {
            return None;
        }
        let a = self.bits.trailing_zeros() as usize;
        self.bits &= self.bits - 1;
        Some(a)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.bits.count_ones() as usize;
        (k, Some(k))
    }
}

impl IntoIterator for &ElementSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("}")
    }
}

#[derive(Serialize, Deserialize)]
struct SetRepr {
    n: usize,
    members: Vec<usize>,
}

impl Serialize for ElementSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SetRepr {
            n: self.universe(),
            members: self.iter().collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ElementSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = SetRepr::deserialize(deserializer)?;
        if repr.n > MAX_ELEMENTS {
            return Err(serde::de::Error::custom(format!(
                "universe size {} exceeds {MAX_ELEMENTS}",
                repr.n
            )));
        }
        if let Some(&bad) = repr.members.iter().find(|&&a| a >= repr.n) {
            return Err(serde::de::Error::custom(format!(
                "member {bad} outside universe of size {}",
                repr.n
            )));
        }
        Ok(ElementSet::from_elements(repr.n, repr.members))
    }
}
