//! Goods and bundles of goods as 64-bit masks.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Index of a good in `[0, m)`.
pub type GoodId = usize;
/// Index of an agent in `[0, n)`.
pub type AgentId = usize;

/// Hard ceiling on the number of goods any bundle can hold.
pub const MAX_GOODS: usize = 64;

/// A set of goods. Bit `g` is set iff good `g` belongs to the bundle.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Bundle(u64);

impl Bundle {
    pub const EMPTY: Bundle = Bundle(0);

    pub const fn from_bits(bits: u64) -> Self {
        Bundle(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// All goods `0..m`.
    pub fn full(m: usize) -> Self {
        assert!(m <= MAX_GOODS, "at most {MAX_GOODS} goods");
        if m == MAX_GOODS {
            Bundle(u64::MAX)
        } else {
            Bundle((1u64 << m) - 1)
        }
    }

    pub fn singleton(g: GoodId) -> Self {
        assert!(g < MAX_GOODS, "good index {g} out of range");
        Bundle(1u64 << g)
    }

    pub fn from_goods<I: IntoIterator<Item = GoodId>>(goods: I) -> Self {
        goods.into_iter().fold(Bundle::EMPTY, |b, g| b.with(g))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, g: GoodId) -> bool {
        g < MAX_GOODS && self.0 >> g & 1 == 1
    }

    #[must_use]
    pub fn with(self, g: GoodId) -> Self {
        Bundle(self.0 | Bundle::singleton(g).0)
    }

    #[must_use]
    pub fn without(self, g: GoodId) -> Self {
        Bundle(self.0 & !Bundle::singleton(g).0)
    }

    pub fn insert(&mut self, g: GoodId) {
        *self = self.with(g);
    }

    pub fn remove(&mut self, g: GoodId) {
        *self = self.without(g);
    }

    #[must_use]
    pub fn union(self, other: Bundle) -> Self {
        Bundle(self.0 | other.0)
    }

    #[must_use]
    pub fn intersection(self, other: Bundle) -> Self {
        Bundle(self.0 & other.0)
    }

    #[must_use]
    pub fn difference(self, other: Bundle) -> Self {
        Bundle(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: Bundle) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Bundle) -> bool {
        self.0 & other.0 == 0
    }

    /// True iff every member is below `m`.
    pub fn fits(self, m: usize) -> bool {
        self.is_subset_of(Bundle::full(m))
    }

    /// Lowest-index member, if any.
    pub fn first(self) -> Option<GoodId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as GoodId)
    }

    /// Members in increasing index order.
    pub fn iter(self) -> Goods {
        Goods(self.0)
    }

    /// Every subset of `self`, the empty bundle included, in decreasing mask order.
    pub fn subsets(self) -> Subsets {
        Subsets {
            universe: self.0,
            next: Some(self.0),
        }
    }

    pub(crate) fn index(self) -> usize {
        self.0 as usize
    }
}

impl IntoIterator for Bundle {
    type Item = GoodId;
    type IntoIter = Goods;
    fn into_iter(self) -> Goods {
        self.iter()
    }
}

impl FromIterator<GoodId> for Bundle {
    fn from_iter<I: IntoIterator<Item = GoodId>>(iter: I) -> Self {
        Bundle::from_goods(iter)
    }
}

pub struct Goods(u64);

impl Iterator for Goods {
    type Item = GoodId;

    fn next(&mut self) -> Option<GoodId> {
        if self.0 == 0 {
            return None;
        }
        let g = self.0.trailing_zeros() as GoodId;
        self.0 &= self.0 - 1;
        Some(g)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Goods {}

pub struct Subsets {
    universe: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Bundle;

    fn next(&mut self) -> Option<Bundle> {
        let cur = self.next?;
        self.next = (cur != 0).then(|| (cur - 1) & self.universe);
        Some(Bundle(cur))
    }
}

impl fmt::Debug for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for Bundle {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for Bundle {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let goods = Vec::<GoodId>::deserialize(deserializer)?;
        bundle_from_list(&goods).map_err(D::Error::custom)
    }
}

/// Builds a bundle from an index list, rejecting duplicates and indices past [`MAX_GOODS`].
pub fn bundle_from_list(goods: &[GoodId]) -> Result<Bundle> {
    let mut b = Bundle::EMPTY;
    for &g in goods {
        if g >= MAX_GOODS {
            return Err(Error::Domain(format!("good index {g} exceeds {MAX_GOODS}")));
        }
        if b.contains(g) {
            return Err(Error::Domain(format!("duplicate good {g}")));
        }
        b.insert(g);
    }
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn iterates_members_in_order() {
        let b = Bundle::from_goods([5, 0, 3]);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![0, 3, 5]);
        assert_eq!(b.len(), 3);
        assert_eq!(b.first(), Some(0));
        assert!(Bundle::EMPTY.first().is_none());
    }

    #[test]
    fn subsets_cover_powerset_once() {
        let b = Bundle::from_goods([1, 4, 6]);
        let subs: Vec<_> = b.subsets().collect();
        assert_eq!(subs.len(), 8);
        let mut sorted = subs.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
        assert!(subs.iter().all(|s| s.is_subset_of(b)));
        assert_eq!(Bundle::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn full_bundle_edges() {
        assert_eq!(Bundle::full(0), Bundle::EMPTY);
        assert_eq!(Bundle::full(64).len(), 64);
        assert!(Bundle::singleton(63).fits(64));
        assert!(!Bundle::singleton(3).fits(3));
    }

    #[test]
    fn list_rejects_duplicates() {
        assert!(bundle_from_list(&[1, 2, 1]).is_err());
        assert!(bundle_from_list(&[64]).is_err());
        assert_eq!(bundle_from_list(&[2, 0]).unwrap(), Bundle::from_bits(0b101));
    }
}
