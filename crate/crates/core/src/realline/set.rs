//! Finite unions of intervals with exact rational endpoints.
//!
//! An endpoint is a *cut*: a position in the order of ℝ either just below or
//! just above a rational, or at ±∞. `Below(r) < Above(r) < Below(s)` for
//! `r < s`, and `x` lies in the interval `(lo, hi)` of cuts exactly when
//! `lo ≤ Below(x)` and `Above(x) ≤ hi`. Closed ends use `Below` on the left
//! and `Above` on the right.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::rational::format_rational;
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cut {
    NegInf,
    Below(Rational),
    Above(Rational),
    PosInf,
}

impl Cut {
    fn key(&self) -> (u8, Option<(&Rational, u8)>) {
        match self {
            Cut::NegInf => (0, None),
            Cut::Below(r) => (1, Some((r, 0))),
            Cut::Above(r) => (1, Some((r, 1))),
            Cut::PosInf => (2, None),
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            Cut::Below(r) | Cut::Above(r) => Some(r),
            _ => None,
        }
    }

    /// Image under `x ↦ αx + β` with `α ≠ 0`.
    pub fn affine(&self, alpha: &Rational, beta: &Rational) -> Cut {
        let positive = *alpha > crate::rational::zero();
        match (self, positive) {
            (Cut::NegInf, true) | (Cut::PosInf, false) => Cut::NegInf,
            (Cut::PosInf, true) | (Cut::NegInf, false) => Cut::PosInf,
            (Cut::Below(r), true) => Cut::Below(alpha * r + beta),
            (Cut::Above(r), true) => Cut::Above(alpha * r + beta),
            (Cut::Below(r), false) => Cut::Above(alpha * r + beta),
            (Cut::Above(r), false) => Cut::Below(alpha * r + beta),
        }
    }
}

impl Ord for Cut {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl PartialOrd for Cut {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn cmp_cuts(a: &Cut, b: &Cut) -> Ordering {
    a.cmp(b)
}

fn le(a: &Cut, b: &Cut) -> bool {
    cmp_cuts(a, b) != Ordering::Greater
}

fn lt(a: &Cut, b: &Cut) -> bool {
    cmp_cuts(a, b) == Ordering::Less
}

fn max_cut(a: Cut, b: Cut) -> Cut {
    if lt(&a, &b) {
        b
    } else {
        a
    }
}

fn min_cut(a: Cut, b: Cut) -> Cut {
    if lt(&b, &a) {
        b
    } else {
        a
    }
}

/// The nonempty set of reals strictly between two cuts.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Cut,
    hi: Cut,
}

impl Interval {
    /// `None` when the cuts describe an empty set.
    pub fn new(lo: Cut, hi: Cut) -> Option<Interval> {
        if matches!(lo, Cut::PosInf) || matches!(hi, Cut::NegInf) || !lt(&lo, &hi) {
            None
        } else {
            Some(Interval { lo, hi })
        }
    }

    pub fn lo(&self) -> &Cut {
        &self.lo
    }

    pub fn hi(&self) -> &Cut {
        &self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        le(&self.lo, &Cut::Below(x.clone())) && le(&Cut::Above(x.clone()), &self.hi)
    }

    /// Image under `x ↦ αx + β` with `α ≠ 0`.
    pub fn affine(&self, alpha: &Rational, beta: &Rational) -> Interval {
        let (a, b) = (self.lo.affine(alpha, beta), self.hi.affine(alpha, beta));
        if *alpha > crate::rational::zero() {
            Interval { lo: a, hi: b }
        } else {
            Interval { lo: b, hi: a }
        }
    }

    fn intersect(&self, other: &Interval) -> Option<Interval> {
        Interval::new(max_cut(self.lo.clone(), other.lo.clone()), min_cut(self.hi.clone(), other.hi.clone()))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.lo {
            Cut::NegInf => f.write_str("(-inf")?,
            Cut::Below(r) => write!(f, "[{}", format_rational(r))?,
            Cut::Above(r) => write!(f, "({}", format_rational(r))?,
            Cut::PosInf => unreachable!("lower cut at +inf"),
        }
        f.write_str(",")?;
        match &self.hi {
            Cut::PosInf => f.write_str("inf)"),
            Cut::Above(r) => write!(f, "{}]", format_rational(r)),
            Cut::Below(r) => write!(f, "{})", format_rational(r)),
            Cut::NegInf => unreachable!("upper cut at -inf"),
        }
    }
}

/// A canonical finite union of intervals: sorted, pairwise disjoint and with
/// no two components that could merge.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SymbolicSet {
    comps: Vec<Interval>,
}

impl SymbolicSet {
    pub fn empty() -> Self {
        SymbolicSet { comps: Vec::new() }
    }

    pub fn all() -> Self {
        SymbolicSet { comps: vec![Interval { lo: Cut::NegInf, hi: Cut::PosInf }] }
    }

    pub fn from_intervals(parts: impl IntoIterator<Item = Interval>) -> Self {
        let mut parts: Vec<Interval> = parts.into_iter().collect();
        parts.sort_by(|a, b| cmp_cuts(&a.lo, &b.lo));
        let mut comps: Vec<Interval> = Vec::with_capacity(parts.len());
        for p in parts {
            match comps.last_mut() {
                Some(cur) if le(&p.lo, &cur.hi) => {
                    if lt(&cur.hi, &p.hi) {
                        cur.hi = p.hi;
                    }
                }
                _ => comps.push(p),
            }
        }
        SymbolicSet { comps }
    }

    fn from_cuts(lo: Cut, hi: Cut) -> Self {
        Self::from_intervals(Interval::new(lo, hi))
    }

    /// `[a, b]`.
    pub fn closed(a: Rational, b: Rational) -> Self {
        Self::from_cuts(Cut::Below(a), Cut::Above(b))
    }

    /// `(a, b)`.
    pub fn open(a: Rational, b: Rational) -> Self {
        Self::from_cuts(Cut::Above(a), Cut::Below(b))
    }

    /// `[a, b)`.
    pub fn closed_open(a: Rational, b: Rational) -> Self {
        Self::from_cuts(Cut::Below(a), Cut::Below(b))
    }

    /// `(a, b]`.
    pub fn open_closed(a: Rational, b: Rational) -> Self {
        Self::from_cuts(Cut::Above(a), Cut::Above(b))
    }

    pub fn point(a: Rational) -> Self {
        Self::closed(a.clone(), a)
    }

    /// `(-∞, a)`, or `(-∞, a]` when `inclusive`.
    pub fn below(a: Rational, inclusive: bool) -> Self {
        Self::from_cuts(Cut::NegInf, if inclusive { Cut::Above(a) } else { Cut::Below(a) })
    }

    /// `(a, ∞)`, or `[a, ∞)` when `inclusive`.
    pub fn above(a: Rational, inclusive: bool) -> Self {
        Self::from_cuts(if inclusive { Cut::Below(a) } else { Cut::Above(a) }, Cut::PosInf)
    }

    pub fn components(&self) -> &[Interval] {
        &self.comps
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_all(&self) -> bool {
        *self == Self::all()
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.comps.iter().any(|c| c.contains(x))
    }

    pub fn union(&self, other: &SymbolicSet) -> SymbolicSet {
        Self::from_intervals(self.comps.iter().chain(&other.comps).cloned())
    }

    pub fn intersection(&self, other: &SymbolicSet) -> SymbolicSet {
        Self::from_intervals(self.comps.iter().flat_map(|a| other.comps.iter().filter_map(|b| a.intersect(b))))
    }

    pub fn complement(&self) -> SymbolicSet {
        let mut out = Vec::with_capacity(self.comps.len() + 1);
        let mut prev = Cut::NegInf;
        for c in &self.comps {
            out.extend(Interval::new(prev, c.lo.clone()));
            prev = c.hi.clone();
        }
        out.extend(Interval::new(prev, Cut::PosInf));
        SymbolicSet { comps: out }
    }

    pub fn difference(&self, other: &SymbolicSet) -> SymbolicSet {
        self.intersection(&other.complement())
    }

    pub fn is_subset(&self, other: &SymbolicSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &SymbolicSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// Lower cut of the convex hull; `None` for the empty set.
    pub fn lo(&self) -> Option<&Cut> {
        self.comps.first().map(|c| &c.lo)
    }

    /// Upper cut of the convex hull; `None` for the empty set.
    pub fn hi(&self) -> Option<&Cut> {
        self.comps.last().map(|c| &c.hi)
    }

    /// Image under `x ↦ αx + β` with `α ≠ 0`.
    pub fn affine(&self, alpha: &Rational, beta: &Rational) -> SymbolicSet {
        Self::from_intervals(self.comps.iter().map(|c| c.affine(alpha, beta)))
    }
}

impl fmt::Display for SymbolicSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("empty");
        }
        if self.is_all() {
            return f.write_str("all");
        }
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl Serialize for SymbolicSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn cut_order_interleaves_sides() {
        assert!(lt(&Cut::Below(int(1)), &Cut::Above(int(1))));
        assert!(lt(&Cut::Above(int(1)), &Cut::Below(int(2))));
        assert!(lt(&Cut::NegInf, &Cut::Below(int(-100))));
    }

    #[test]
    fn adjacent_halves_merge() {
        let s = SymbolicSet::closed_open(int(0), int(1)).union(&SymbolicSet::closed(int(1), int(2)));
        assert_eq!(s, SymbolicSet::closed(int(0), int(2)));
        let t = SymbolicSet::open(int(0), int(1)).union(&SymbolicSet::open(int(1), int(2)));
        assert_eq!(t.components().len(), 2);
    }

    #[test]
    fn complement_round_trip() {
        let s = SymbolicSet::closed(int(0), int(1)).union(&SymbolicSet::above(int(3), false));
        assert_eq!(s.complement().to_string(), "(-inf,0)|(1,3]");
        assert_eq!(s.complement().complement(), s);
        assert_eq!(SymbolicSet::empty().complement(), SymbolicSet::all());
    }

    #[test]
    fn membership_at_endpoints() {
        let s = SymbolicSet::closed_open(int(0), int(1));
        assert!(s.contains(&int(0)));
        assert!(!s.contains(&int(1)));
        assert!(s.contains(&frac(1, 2)));
        assert!(SymbolicSet::point(int(3)).contains(&int(3)));
        assert!(SymbolicSet::open(int(1), int(1)).is_empty());
    }

    #[test]
    fn affine_images() {
        let s = SymbolicSet::closed_open(int(0), int(1));
        assert_eq!(s.affine(&int(-1), &int(0)).to_string(), "(-1,0]");
        assert_eq!(s.affine(&int(2), &int(1)).to_string(), "[1,3)");
    }

    #[test]
    fn display_forms() {
        assert_eq!(SymbolicSet::below(int(3), false).to_string(), "(-inf,3)");
        assert_eq!(SymbolicSet::all().to_string(), "all");
        assert_eq!(SymbolicSet::empty().to_string(), "empty");
    }
}
