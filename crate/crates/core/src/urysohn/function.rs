use std::collections::BTreeMap;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::gt::{FiniteGT, PointSet};
use crate::rational::{format_rational, int};
use crate::{Rational, Target};

/// A real-valued function on a finite set of points, with exact values.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FiniteFunction {
    values: BTreeMap<usize, Rational>,
}

impl FiniteFunction {
    pub fn new(values: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        FiniteFunction { values: values.into_iter().collect() }
    }

    /// Point `i` gets `values[i]`.
    pub fn on_points(values: Vec<Rational>) -> Self {
        Self::new(values.into_iter().enumerate())
    }

    pub fn constant(domain: PointSet, value: Rational) -> Self {
        Self::new(domain.points().map(|p| (p, value.clone())))
    }

    /// `low` on `set`, `high` on the rest of `domain`.
    pub fn two_valued(domain: PointSet, set: PointSet, low: Rational, high: Rational) -> Self {
        Self::new(domain.points().map(|p| (p, if set.contains(p) { low.clone() } else { high.clone() })))
    }

    /// Value `i` (as an integer) on the `i`-th block.
    pub fn from_blocks(blocks: &[PointSet]) -> Self {
        Self::new(
            blocks.iter().enumerate().flat_map(|(i, b)| b.points().map(move |p| (p, int(i as i64)))),
        )
    }

    pub fn domain(&self) -> PointSet {
        PointSet::from_points(self.values.keys().copied())
    }

    pub fn value(&self, p: usize) -> Option<&Rational> {
        self.values.get(&p)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.values.iter().map(|(p, v)| (*p, v))
    }

    /// Points where the predicate holds on the value.
    pub fn preimage(&self, pred: impl Fn(&Rational) -> bool) -> PointSet {
        PointSet::from_points(self.values.iter().filter(|(_, v)| pred(v)).map(|(p, _)| *p))
    }

    /// Distinct values ascending, each with its fiber.
    pub fn fibers(&self) -> Vec<(Rational, PointSet)> {
        let mut by_value: BTreeMap<&Rational, PointSet> = BTreeMap::new();
        for (p, v) in &self.values {
            let e = by_value.entry(v).or_default();
            *e = e.union(PointSet::singleton(*p));
        }
        by_value.into_iter().map(|(v, s)| (v.clone(), s)).collect()
    }

    /// Fibers in value order, without the values.
    pub fn ordered_blocks(&self) -> Vec<PointSet> {
        self.fibers().into_iter().map(|(_, s)| s).collect()
    }
}

impl Serialize for FiniteFunction {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.values.len()))?;
        for (p, v) in &self.values {
            map.serialize_entry(&p.to_string(), &format_rational(v))?;
        }
        map.end()
    }
}

/// Continuity of a finite-range map whose fibers, in increasing value order,
/// are `blocks`.
///
/// Into `τ_n`: every block is open (bounded open intervals form a base and
/// unions of fibers stay open). Into `gτ_n`: every prefix union and every
/// suffix union is open (preimages of the two kinds of rays).
pub fn blocks_continuous(space: &FiniteGT, blocks: &[PointSet], target: Target) -> bool {
    match target {
        Target::Taun => blocks.iter().all(|&b| space.is_open(b)),
        Target::Gtaun => {
            let mut prefix = PointSet::EMPTY;
            for &b in blocks {
                prefix = prefix.union(b);
                if !space.is_open(prefix) {
                    return false;
                }
            }
            let mut suffix = PointSet::EMPTY;
            for &b in blocks.iter().rev() {
                suffix = suffix.union(b);
                if !space.is_open(suffix) {
                    return false;
                }
            }
            true
        }
    }
}

/// Whether `f: X → ℝ` is ⟨μ, target⟩-continuous. A function whose domain is
/// not the whole ground set is not a map on `X` and is reported as `false`.
pub fn check_continuity_finite(f: &FiniteFunction, space: &FiniteGT, target: Target) -> bool {
    f.domain() == space.whole() && blocks_continuous(space, &f.ordered_blocks(), target)
}
