use std::fmt;

use serde::{Serialize, Serializer};

/// A set of necklace vertices, as a bitset over positions `0..64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const fn empty() -> Self {
        Self(0)
    }

    pub const fn from_bits(bits: u64) -> Self {
        Self(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{lo, lo+1, ..., hi}`.
    pub fn range(lo: usize, hi: usize) -> Self {
        if lo > hi {
            return Self::empty();
        }
        let width = hi - lo + 1;
        let mask = if width >= 64 { u64::MAX } else { (1u64 << width) - 1 };
        Self(mask << lo)
    }

    pub fn singleton(v: usize) -> Self {
        Self(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 & (1 << v) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn union(self, other: Self) -> Self {
        Self(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        Self(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        Self(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Number of elements in `[lo, hi]`.
    pub fn count_between(self, lo: usize, hi: usize) -> usize {
        self.intersection(Self::range(lo, hi)).len()
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Image under a vertex map.
    pub fn map(self, f: &[usize]) -> Self {
        self.iter().map(|v| f[v]).collect()
    }

    /// Preimage under a vertex map with domain `0..f.len()`.
    pub fn preimage(self, f: &[usize]) -> Self {
        (0..f.len()).filter(|&v| self.contains(f[v])).collect()
    }

    /// Positions (ranks) of the elements of `self` inside `within`.
    pub fn relative_to(self, within: Self) -> Self {
        within.iter().enumerate().filter(|&(_, v)| self.contains(v)).map(|(i, _)| i).collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = Self::empty();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn range_and_iter() {
        assert_eq!(VertexSet::range(2, 4).to_vec(), vec![2, 3, 4]);
        assert_eq!(VertexSet::range(0, 63).len(), 64);
        assert!(VertexSet::range(3, 2).is_empty());
    }

    #[test]
    fn relative_positions() {
        let within = VertexSet::from_iter([1, 3, 4, 7]);
        let s = VertexSet::from_iter([3, 7]);
        assert_eq!(s.relative_to(within).to_vec(), vec![1, 3]);
    }

    proptest! {
        #[test]
        fn image_of_preimage_is_contained(bits in any::<u16>(), f in proptest::collection::vec(0usize..16, 1..16)) {
            let s = VertexSet::from_bits(bits as u64);
            let pre = s.preimage(&f);
            prop_assert!(pre.map(&f).is_subset(s));
        }
    }
}
