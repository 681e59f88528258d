use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, BitXor, BitXorAssign, Sub};

use serde::{Serialize, Serializer};

use super::EdgeId;

/// Largest edge count supported by [`EdgeSet`].
pub const MAX_EDGES: usize = 128;

/// A set of edge ids below [`MAX_EDGES`], stored as a single bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(u128);

impl EdgeSet {
    pub const EMPTY: EdgeSet = EdgeSet(0);

    #[inline]
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= MAX_EDGES);
        if m == MAX_EDGES {
            EdgeSet(u128::MAX)
        } else {
            EdgeSet((1u128 << m) - 1)
        }
    }

    #[inline]
    pub fn single(e: EdgeId) -> Self {
        EdgeSet(1u128 << e)
    }

    #[inline]
    pub fn from_bits(bits: u128) -> Self {
        EdgeSet(bits)
    }

    #[inline]
    pub fn bits(self) -> u128 {
        self.0
    }

    #[inline]
    pub fn contains(self, e: EdgeId) -> bool {
        e < MAX_EDGES && (self.0 >> e) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, e: EdgeId) {
        self.0 |= 1u128 << e;
    }

    #[inline]
    pub fn remove(&mut self, e: EdgeId) {
        self.0 &= !(1u128 << e);
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
    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: EdgeSet) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<EdgeId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> EdgeSetIter {
        EdgeSetIter(self.0)
    }
}

pub struct EdgeSetIter(u128);

impl Iterator for EdgeSetIter {
    type Item = EdgeId;

    #[inline]
    fn next(&mut self) -> Option<EdgeId> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }
}

impl IntoIterator for EdgeSet {
    type Item = EdgeId;
    type IntoIter = EdgeSetIter;

    fn into_iter(self) -> EdgeSetIter {
        self.iter()
    }
}

impl FromIterator<EdgeId> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        let mut s = EdgeSet::EMPTY;
        for e in iter {
            s.insert(e);
        }
        s
    }
}

macro_rules! bitop {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, $op:tt) => {
        impl $tr for EdgeSet {
            type Output = EdgeSet;
            #[inline]
            fn $f(self, rhs: EdgeSet) -> EdgeSet {
                EdgeSet(self.0 $op rhs.0)
            }
        }
        impl $atr for EdgeSet {
            #[inline]
            fn $af(&mut self, rhs: EdgeSet) {
                self.0 = self.0 $op rhs.0;
            }
        }
    };
}

bitop!(BitOr, bitor, BitOrAssign, bitor_assign, |);
bitop!(BitAnd, bitand, BitAndAssign, bitand_assign, &);
bitop!(BitXor, bitxor, BitXorAssign, bitxor_assign, ^);

impl Sub for EdgeSet {
    type Output = EdgeSet;

    #[inline]
    fn sub(self, rhs: EdgeSet) -> EdgeSet {
        EdgeSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for EdgeSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn full_and_len() {
        assert_eq!(EdgeSet::full(0).len(), 0);
        assert_eq!(EdgeSet::full(15).len(), 15);
        assert_eq!(EdgeSet::full(128).len(), 128);
    }

    proptest! {
        #[test]
        fn iter_round_trips(bits in any::<u128>()) {
            let s = EdgeSet::from_bits(bits);
            let back: EdgeSet = s.iter().collect();
            prop_assert_eq!(s, back);
            prop_assert_eq!(s.iter().count(), s.len());
        }

        #[test]
        fn symmetric_difference_identity(a in any::<u128>(), b in any::<u128>()) {
            let (a, b) = (EdgeSet::from_bits(a), EdgeSet::from_bits(b));
            prop_assert_eq!(a ^ b, (a - b) | (b - a));
        }
    }
}
