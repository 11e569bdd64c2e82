use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Set of vertex indices below 64, stored as a single machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < 64, "vertex {v} exceeds the 64-vertex set capacity");
            s.insert(v);
        }
        s
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&v) = members.iter().find(|&&v| v >= 64) {
            return Err(serde::de::Error::custom(format!("vertex {v} exceeds 63")));
        }
        Ok(members.into_iter().collect())
    }
}
