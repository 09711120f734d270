use std::fmt;

use serde::Serialize;

use super::pointset::{PointSet, MAX_POINTS};
use crate::{Error, Result};

/// The first axiom a candidate family fails, in checking order: empty set,
/// pairwise unions, whole set, pairwise intersections.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    MissingEmpty,
    MissingUnion { left: PointSet, right: PointSet, union: PointSet },
    MissingWhole,
    MissingIntersection { left: PointSet, right: PointSet, intersection: PointSet },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::MissingEmpty => f.write_str("missing the empty set"),
            Violation::MissingUnion { left, right, union } => {
                write!(f, "missing union {left} ∪ {right} = {union}")
            }
            Violation::MissingWhole => f.write_str("missing the whole set"),
            Violation::MissingIntersection { left, right, intersection } => {
                write!(f, "missing intersection {left} ∩ {right} = {intersection}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GTReport {
    pub is_gt: bool,
    pub is_strong: bool,
    pub is_topology: bool,
    pub violation: Option<Violation>,
}

fn canonical(mut family: Vec<PointSet>) -> Vec<PointSet> {
    family.sort();
    family.dedup();
    family
}

fn check_points(family: &[PointSet], n: usize) -> Result<()> {
    if n > MAX_POINTS {
        return Err(Error::Resource(format!("{n} points exceeds the maximum of {MAX_POINTS}")));
    }
    let full = PointSet::full(n);
    for set in family {
        if !set.is_subset(full) {
            let bad = set.difference(full).points().next().unwrap_or(0);
            return Err(Error::input(format!("point {bad} out of range for {n} points")));
        }
    }
    Ok(())
}

/// Checks the GT axioms for `family` on `n` points.
///
/// Union-closure is tested pairwise, which for a finite family is the same
/// as closure under arbitrary unions.
pub fn validate_gt(family: &[PointSet], n: usize) -> Result<GTReport> {
    check_points(family, n)?;
    let opens = canonical(family.to_vec());
    let member = |s: PointSet| opens.binary_search(&s).is_ok();
    let full = PointSet::full(n);

    let mut violation = None;
    let has_empty = member(PointSet::EMPTY);
    if !has_empty {
        violation = Some(Violation::MissingEmpty);
    }
    let mut unions_ok = true;
    'outer: for (i, &a) in opens.iter().enumerate() {
        for &b in &opens[i + 1..] {
            if !member(a.union(b)) {
                unions_ok = false;
                violation.get_or_insert(Violation::MissingUnion { left: a, right: b, union: a.union(b) });
                break 'outer;
            }
        }
    }
    let is_gt = has_empty && unions_ok;
    let is_strong = member(full);
    if !is_strong && violation.is_none() {
        violation = Some(Violation::MissingWhole);
    }
    let mut intersections_ok = true;
    'outer2: for (i, &a) in opens.iter().enumerate() {
        for &b in &opens[i + 1..] {
            if !member(a.intersection(b)) {
                intersections_ok = false;
                violation.get_or_insert(Violation::MissingIntersection {
                    left: a,
                    right: b,
                    intersection: a.intersection(b),
                });
                break 'outer2;
            }
        }
    }
    Ok(GTReport { is_gt, is_strong, is_topology: is_gt && is_strong && intersections_ok, violation })
}

/// A generalized topology on `{0, .., n-1}`: a union-closed family of point
/// sets containing ∅, stored deduplicated in canonical order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGT {
    n: usize,
    opens: Vec<PointSet>,
    by_bits: Vec<u64>,
}

impl fmt::Debug for FiniteGT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGT(n={}, {:?})", self.n, self.opens)
    }
}

impl FiniteGT {
    /// Builds a space, rejecting families that are not GTs.
    pub fn new(n: usize, family: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        let family: Vec<PointSet> = family.into_iter().collect();
        let report = validate_gt(&family, n)?;
        if !report.is_gt {
            let why = report.violation.map(|v| v.to_string()).unwrap_or_default();
            return Err(Error::input(format!("family is not a generalized topology: {why}")));
        }
        Ok(Self::from_canonical(n, canonical(family)))
    }

    /// Convenience constructor from point lists.
    pub fn from_lists(n: usize, lists: &[&[usize]]) -> Result<Self> {
        Self::new(n, lists.iter().map(|l| PointSet::from_points(l.iter().copied())))
    }

    /// The union-closure of `generators ∪ {∅}`.
    pub fn union_closure(n: usize, generators: impl IntoIterator<Item = PointSet>) -> Result<Self> {
        let mut family: Vec<PointSet> = vec![PointSet::EMPTY];
        family.extend(generators);
        check_points(&family, n)?;
        let mut family = canonical(family);
        loop {
            let mut added = Vec::new();
            for (i, &a) in family.iter().enumerate() {
                for &b in &family[i + 1..] {
                    let u = a.union(b);
                    if family.binary_search(&u).is_err() {
                        added.push(u);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            family.extend(added);
            family = canonical(family);
        }
        Ok(Self::from_canonical(n, family))
    }

    pub(crate) fn from_canonical(n: usize, opens: Vec<PointSet>) -> Self {
        debug_assert!(opens.windows(2).all(|w| w[0] < w[1]));
        let mut by_bits: Vec<u64> = opens.iter().map(|s| s.bits()).collect();
        by_bits.sort_unstable();
        FiniteGT { n, opens, by_bits }
    }

    pub fn points(&self) -> usize {
        self.n
    }

    pub fn whole(&self) -> PointSet {
        PointSet::full(self.n)
    }

    /// Open sets in canonical order.
    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn is_open(&self, s: PointSet) -> bool {
        self.by_bits.binary_search(&s.bits()).is_ok()
    }

    pub fn is_closed(&self, s: PointSet) -> bool {
        s.is_subset(self.whole()) && self.is_open(s.complement_in(self.whole()))
    }

    pub fn is_clopen(&self, s: PointSet) -> bool {
        self.is_open(s) && self.is_closed(s)
    }

    pub fn is_strong(&self) -> bool {
        self.is_open(self.whole())
    }

    /// Closed sets (complements of opens) in canonical order.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let whole = self.whole();
        canonical(self.opens.iter().map(|u| u.complement_in(whole)).collect())
    }

    /// Ordered pairs of disjoint closed sets, ordered by first then second
    /// component in canonical order.
    pub fn disjoint_closed_pairs(&self) -> Vec<(PointSet, PointSet)> {
        let closed = self.closed_sets();
        let mut out = Vec::new();
        for &a in &closed {
            for &b in &closed {
                if a.is_disjoint(b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn validate(&self) -> GTReport {
        validate_gt(&self.opens, self.n).expect("stored family is in range")
    }

    fn check_subset(&self, a: PointSet) -> Result<()> {
        if a.is_subset(self.whole()) {
            Ok(())
        } else {
            Err(Error::input(format!("{a} is not a subset of the {}-point ground set", self.n)))
        }
    }

    /// The largest open set disjoint from `a`.
    pub fn largest_open_disjoint_from(&self, a: PointSet) -> PointSet {
        self.opens.iter().filter(|u| u.is_disjoint(a)).fold(PointSet::EMPTY, |acc, &u| acc.union(u))
    }

    /// Intersection of all closed supersets of `a`.
    ///
    /// `X = X ∖ ∅` is always closed, so the collection is never empty and the
    /// result is itself closed.
    pub fn closure(&self, a: PointSet) -> Result<PointSet> {
        self.check_subset(a)?;
        Ok(self.closure_of(a))
    }

    pub(crate) fn closure_of(&self, a: PointSet) -> PointSet {
        self.largest_open_disjoint_from(a).complement_in(self.whole())
    }

    /// Union of all open subsets of `a`.
    pub fn interior(&self, a: PointSet) -> Result<PointSet> {
        self.check_subset(a)?;
        Ok(self.interior_of(a))
    }

    pub(crate) fn interior_of(&self, a: PointSet) -> PointSet {
        self.opens.iter().filter(|u| u.is_subset(a)).fold(PointSet::EMPTY, |acc, &u| acc.union(u))
    }

    /// Subspace on `a`, relabeled onto `{0..|a|-1}` preserving point order.
    pub fn subspace(&self, a: PointSet) -> Result<FiniteGT> {
        self.check_subset(a)?;
        let traces = self.opens.iter().map(|u| u.intersection(a).compress(a)).collect();
        Ok(Self::from_canonical(a.len(), canonical(traces)))
    }

    /// The product GT `{(U × X2) ∪ (X1 × V)}` on `X1 × X2`; point `(i, j)`
    /// is flattened to `i * n2 + j`.
    pub fn product(&self, other: &FiniteGT) -> Result<FiniteGT> {
        if !self.is_strong() || !other.is_strong() {
            return Err(Error::precondition("product is defined for strong GTs only"));
        }
        let n = self.n * other.n;
        if n > MAX_POINTS {
            return Err(Error::Resource(format!("product has {n} points, maximum is {MAX_POINTS}")));
        }
        let mut family = Vec::with_capacity(self.opens.len() * other.opens.len());
        for &u in &self.opens {
            for &v in &other.opens {
                family.push(product_rectangle_union(u, self.n, v, other.n));
            }
        }
        Ok(Self::from_canonical(n, canonical(family)))
    }

    /// The topology generated by a strong GT: close under pairwise
    /// intersections, then under unions.
    pub fn generated_topology(&self) -> Result<FiniteGT> {
        if !self.is_strong() {
            return Err(Error::precondition("generated topology is defined for strong GTs only"));
        }
        let mut family = self.opens.clone();
        loop {
            let mut added = Vec::new();
            for (i, &a) in family.iter().enumerate() {
                for &b in &family[i + 1..] {
                    let c = a.intersection(b);
                    if family.binary_search(&c).is_err() {
                        added.push(c);
                    }
                }
            }
            if added.is_empty() {
                break;
            }
            family.extend(added);
            family = canonical(family);
        }
        Self::union_closure(self.n, family)
    }
}

/// Flattened point index of `(i, j)` in `X1 × X2`.
pub fn product_point(i: usize, j: usize, n2: usize) -> usize {
    i * n2 + j
}

/// `A × B` as a point set of the flattened product.
pub fn rectangle(a: PointSet, b: PointSet, n2: usize) -> PointSet {
    let mut out = PointSet::EMPTY;
    for i in a.points() {
        for j in b.points() {
            out = out.union(PointSet::singleton(product_point(i, j, n2)));
        }
    }
    out
}

/// `(U × X2) ∪ (X1 × V)`.
pub fn product_rectangle_union(u: PointSet, n1: usize, v: PointSet, n2: usize) -> PointSet {
    rectangle(u, PointSet::full(n2), n2).union(rectangle(PointSet::full(n1), v, n2))
}

/// Projections of a product point set onto the two factors.
pub fn projections(s: PointSet, n2: usize) -> (PointSet, PointSet) {
    let mut p1 = PointSet::EMPTY;
    let mut p2 = PointSet::EMPTY;
    for p in s.points() {
        p1 = p1.union(PointSet::singleton(p / n2));
        p2 = p2.union(PointSet::singleton(p % n2));
    }
    (p1, p2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(points: &[usize]) -> PointSet {
        PointSet::from_points(points.iter().copied())
    }

    fn fam(lists: &[&[usize]]) -> Vec<PointSet> {
        lists.iter().map(|l| s(l)).collect()
    }

    fn nonnormal() -> FiniteGT {
        FiniteGT::from_lists(3, &[&[], &[0, 1], &[1, 2], &[0, 1, 2]]).unwrap()
    }

    #[test]
    fn validate_missing_union() {
        let r = validate_gt(&fam(&[&[], &[0, 1], &[1, 2]]), 3).unwrap();
        assert!(!r.is_gt);
        assert_eq!(
            r.violation,
            Some(Violation::MissingUnion { left: s(&[0, 1]), right: s(&[1, 2]), union: s(&[0, 1, 2]) })
        );
    }

    #[test]
    fn validate_power_set() {
        let r = validate_gt(&fam(&[&[], &[0], &[1], &[0, 1]]), 2).unwrap();
        assert!(r.is_gt && r.is_strong && r.is_topology);
        assert_eq!(r.violation, None);
    }

    #[test]
    fn validate_missing_intersection() {
        let r = validate_gt(&fam(&[&[], &[0, 1], &[1, 2], &[0, 1, 2]]), 3).unwrap();
        assert!(r.is_gt && r.is_strong && !r.is_topology);
        assert_eq!(
            r.violation,
            Some(Violation::MissingIntersection { left: s(&[0, 1]), right: s(&[1, 2]), intersection: s(&[1]) })
        );
    }

    #[test]
    fn validate_rejects_out_of_range() {
        assert!(matches!(validate_gt(&fam(&[&[], &[3]]), 3), Err(Error::Input(_))));
    }

    #[test]
    fn validate_missing_empty_and_whole() {
        let r = validate_gt(&fam(&[&[0]]), 2).unwrap();
        assert!(!r.is_gt);
        assert_eq!(r.violation, Some(Violation::MissingEmpty));
        let r = validate_gt(&fam(&[&[], &[0]]), 2).unwrap();
        assert!(r.is_gt && !r.is_strong && !r.is_topology);
        assert_eq!(r.violation, Some(Violation::MissingWhole));
    }

    #[test]
    fn closure_examples() {
        let x = nonnormal();
        assert_eq!(x.closure(s(&[1])).unwrap(), s(&[0, 1, 2]));
        assert_eq!(x.closure(s(&[0])).unwrap(), s(&[0]));
        assert_eq!(x.closure(PointSet::EMPTY).unwrap(), PointSet::EMPTY);
        assert!(x.closure(s(&[5])).is_err());
    }

    #[test]
    fn closure_in_non_strong_space_is_whole_set_when_nothing_smaller() {
        let x = FiniteGT::from_lists(2, &[&[], &[0]]).unwrap();
        assert_eq!(x.closure(PointSet::EMPTY).unwrap(), s(&[1]));
        assert_eq!(x.closure(s(&[0])).unwrap(), s(&[0, 1]));
    }

    #[test]
    fn interior_examples() {
        let x = nonnormal();
        assert_eq!(x.interior(s(&[0, 1])).unwrap(), s(&[0, 1]));
        assert_eq!(x.interior(s(&[1])).unwrap(), PointSet::EMPTY);
        assert_eq!(x.interior(x.whole()).unwrap(), x.whole());
    }

    #[test]
    fn subspace_examples() {
        let x = nonnormal();
        let sub = x.subspace(s(&[0, 2])).unwrap();
        assert_eq!(sub.points(), 2);
        assert_eq!(sub.opens(), &fam(&[&[], &[0], &[1], &[0, 1]])[..]);
        assert_eq!(x.subspace(x.whole()).unwrap(), x);
        let empty = x.subspace(PointSet::EMPTY).unwrap();
        assert_eq!(empty.points(), 0);
        assert_eq!(empty.opens(), &[PointSet::EMPTY]);
    }

    #[test]
    fn product_examples() {
        let a = FiniteGT::from_lists(2, &[&[], &[0], &[0, 1]]).unwrap();
        let b = FiniteGT::from_lists(2, &[&[], &[0, 1]]).unwrap();
        let p = a.product(&b).unwrap();
        assert_eq!(p.points(), 4);
        assert_eq!(p.opens(), &fam(&[&[], &[0, 1], &[0, 1, 2, 3]])[..]);
        let ind = FiniteGT::from_lists(2, &[&[], &[0, 1]]).unwrap();
        assert_eq!(ind.product(&ind).unwrap().opens().len(), 2);
        let weak = FiniteGT::from_lists(2, &[&[], &[0]]).unwrap();
        assert!(matches!(weak.product(&a), Err(Error::Precondition(_))));
    }

    #[test]
    fn generated_topology_examples() {
        let t = nonnormal().generated_topology().unwrap();
        assert_eq!(t.opens(), &fam(&[&[], &[1], &[0, 1], &[1, 2], &[0, 1, 2]])[..]);
        assert!(t.validate().is_topology);
        assert_eq!(t.generated_topology().unwrap(), t);
        let ind = FiniteGT::from_lists(3, &[&[], &[0, 1, 2]]).unwrap();
        assert_eq!(ind.generated_topology().unwrap(), ind);
    }

    #[test]
    fn union_closure_builds_gt() {
        let x = FiniteGT::union_closure(3, [s(&[0]), s(&[2])]).unwrap();
        assert_eq!(x.opens(), &fam(&[&[], &[0], &[2], &[0, 2]])[..]);
    }

    #[test]
    fn projections_of_rectangle() {
        let r = rectangle(s(&[0, 2]), s(&[1]), 3);
        assert_eq!(projections(r, 3), (s(&[0, 2]), s(&[1])));
    }
}
