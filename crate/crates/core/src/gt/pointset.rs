use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest supported ground set. Point sets are `u64` bitmasks and the full
/// set `(1 << n) - 1` must fit.
pub const MAX_POINTS: usize = 63;

/// A subset of `{0, .., n-1}` stored as a bitmask.
///
/// `Ord` is the canonical family order: by cardinality, then lexicographic on
/// the sorted point indices (so `{0,1} < {0,2} < {1,2}`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_POINTS, "at most {MAX_POINTS} points");
        PointSet((1u64 << n) - 1)
    }

    pub fn singleton(p: usize) -> Self {
        PointSet(1u64 << p)
    }

    pub fn from_points<I: IntoIterator<Item = usize>>(points: I) -> Self {
        PointSet(points.into_iter().fold(0, |acc, p| acc | (1u64 << p)))
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn contains(self, p: usize) -> bool {
        p < 64 && self.0 >> p & 1 == 1
    }

    pub const fn union(self, other: PointSet) -> PointSet {
        PointSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: PointSet) -> PointSet {
        PointSet(self.0 & other.0)
    }

    pub const fn difference(self, other: PointSet) -> PointSet {
        PointSet(self.0 & !other.0)
    }

    /// Complement relative to `universe`.
    pub const fn complement_in(self, universe: PointSet) -> PointSet {
        PointSet(universe.0 & !self.0)
    }

    pub const fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub const fn is_disjoint(self, other: PointSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Largest point index plus one, i.e. the smallest `n` with `self ⊆ {0..n-1}`.
    pub const fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn points(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(p)
            }
        })
    }

    /// All subsets of `self`, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = PointSet> {
        let mask = self.0;
        let mut next = Some(0u64);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == mask { None } else { Some((cur.wrapping_sub(mask)) & mask) };
            Some(PointSet(cur))
        })
    }

    /// Maps point `i` of `self` (in increasing order) to `i`; the inverse of
    /// relabeling a subspace onto `{0..|self|-1}`.
    pub fn compress(self, within: PointSet) -> PointSet {
        let mut out = 0u64;
        for (i, p) in within.points().enumerate() {
            if self.contains(p) {
                out |= 1 << i;
            }
        }
        PointSet(out)
    }

    /// Inverse of [`compress`](Self::compress).
    pub fn expand(self, within: PointSet) -> PointSet {
        let mut out = 0u64;
        for (i, p) in within.points().enumerate() {
            if self.contains(i) {
                out |= 1 << p;
            }
        }
        PointSet(out)
    }
}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| {
            let diff = self.0 ^ other.0;
            if diff == 0 {
                Ordering::Equal
            } else if self.0 & diff & diff.wrapping_neg() != 0 {
                // the smallest differing point belongs to `self`
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.points().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.points())
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let points = Vec::<usize>::deserialize(d)?;
        if let Some(&p) = points.iter().find(|&&p| p >= MAX_POINTS) {
            return Err(serde::de::Error::custom(format!("point {p} out of range")));
        }
        Ok(PointSet::from_points(points))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    #[test]
    fn canonical_order() {
        let mut v = vec![s(&[1, 2]), s(&[0]), s(&[]), s(&[0, 2]), s(&[0, 1, 2]), s(&[2]), s(&[0, 1])];
        v.sort();
        assert_eq!(v, vec![s(&[]), s(&[0]), s(&[2]), s(&[0, 1]), s(&[0, 2]), s(&[1, 2]), s(&[0, 1, 2])]);
    }

    #[test]
    fn subsets_enumerates_all() {
        let all: Vec<_> = s(&[0, 2, 3]).subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| x.is_subset(s(&[0, 2, 3]))));
        assert_eq!(PointSet::EMPTY.subsets().count(), 1);
    }

    #[test]
    fn compress_expand_roundtrip() {
        let within = s(&[1, 3, 4]);
        assert_eq!(s(&[3, 4]).compress(within), s(&[1, 2]));
        assert_eq!(s(&[1, 2]).expand(within), s(&[3, 4]));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[0, 2]).to_string(), "{0,2}");
        assert_eq!(PointSet::EMPTY.to_string(), "{}");
    }
}
