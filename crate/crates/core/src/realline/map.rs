//! Piecewise-affine maps ℝ → ℝ with exact rational data, their preimages and
//! images, and continuity checks between the line GTs and `τ_n` / `gτ_n`.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::set::{Cut, Interval, SymbolicSet};
use super::space::LineSpace;
use crate::rational::{format_rational, int, one, zero};
use crate::{Error, Rational, Result, Target};

/// `x ↦ slope·x + intercept`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Affine {
    pub slope: Rational,
    pub intercept: Rational,
}

impl Affine {
    pub fn new(slope: Rational, intercept: Rational) -> Self {
        Affine { slope, intercept }
    }

    pub fn constant(c: Rational) -> Self {
        Affine { slope: zero(), intercept: c }
    }

    pub fn is_constant(&self) -> bool {
        self.slope == zero()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        &self.slope * x + &self.intercept
    }

    /// `{x ∈ ℝ : slope·x + intercept ∈ s}`.
    pub fn preimage(&self, s: &SymbolicSet) -> SymbolicSet {
        if self.is_constant() {
            return if s.contains(&self.intercept) { SymbolicSet::all() } else { SymbolicSet::empty() };
        }
        let alpha = one() / &self.slope;
        let beta = -&self.intercept / &self.slope;
        s.affine(&alpha, &beta)
    }

    pub fn image(&self, domain: &Interval) -> SymbolicSet {
        if self.is_constant() {
            SymbolicSet::point(self.intercept.clone())
        } else {
            SymbolicSet::from_intervals([domain.affine(&self.slope, &self.intercept)])
        }
    }
}

impl fmt::Display for Affine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*x", format_rational(&self.slope))?;
        if self.intercept < zero() {
            write!(f, "-{}", format_rational(&-&self.intercept))
        } else {
            write!(f, "+{}", format_rational(&self.intercept))
        }
    }
}

/// A map given by its breakpoints `b_1 < … < b_m`, an affine law on each of
/// the `m + 1` open intervals between them, and a value at each breakpoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiecewiseMap {
    breakpoints: Vec<Rational>,
    pieces: Vec<Affine>,
    point_values: Vec<Rational>,
}

impl PiecewiseMap {
    pub fn new(breakpoints: Vec<Rational>, pieces: Vec<Affine>, point_values: Vec<Rational>) -> Result<Self> {
        if pieces.len() != breakpoints.len() + 1 || point_values.len() != breakpoints.len() {
            return Err(Error::input("a map needs one more piece than breakpoints and one value per breakpoint"));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::input("breakpoints must be strictly increasing"));
        }
        Ok(PiecewiseMap { breakpoints, pieces, point_values })
    }

    pub fn constant(c: Rational) -> Self {
        PiecewiseMap { breakpoints: Vec::new(), pieces: vec![Affine::constant(c)], point_values: Vec::new() }
    }

    pub fn affine(slope: Rational, intercept: Rational) -> Self {
        PiecewiseMap { breakpoints: Vec::new(), pieces: vec![Affine::new(slope, intercept)], point_values: Vec::new() }
    }

    /// `left` below `at`, `right` above it, `value` at it.
    pub fn step(at: Rational, left: Rational, value: Rational, right: Rational) -> Self {
        PiecewiseMap {
            breakpoints: vec![at],
            pieces: vec![Affine::constant(left), Affine::constant(right)],
            point_values: vec![value],
        }
    }

    /// Builds a map from laws on intervals that partition ℝ.
    pub fn from_pieces(parts: Vec<(Interval, Affine)>) -> Result<Self> {
        for (i, (a, _)) in parts.iter().enumerate() {
            for (b, _) in &parts[i + 1..] {
                let (sa, sb) = (SymbolicSet::from_intervals([a.clone()]), SymbolicSet::from_intervals([b.clone()]));
                if !sa.is_disjoint(&sb) {
                    return Err(Error::input(format!("pieces {a} and {b} overlap")));
                }
            }
        }
        let cover = SymbolicSet::from_intervals(parts.iter().map(|(i, _)| i.clone()));
        if !cover.is_all() {
            return Err(Error::input(format!("pieces leave {} uncovered", cover.complement())));
        }
        let mut breakpoints: Vec<Rational> = parts
            .iter()
            .flat_map(|(i, _)| [i.lo().value().cloned(), i.hi().value().cloned()])
            .flatten()
            .collect();
        breakpoints.sort();
        breakpoints.dedup();
        let law_at = |x: &Rational| {
            parts.iter().find(|(i, _)| i.contains(x)).map(|(_, law)| law.clone()).expect("pieces cover ℝ")
        };
        let pieces = region_samples(&breakpoints).iter().map(law_at).collect();
        let point_values = breakpoints.iter().map(|b| law_at(b).eval(b)).collect();
        Ok(PiecewiseMap { breakpoints, pieces, point_values })
    }

    pub fn breakpoints(&self) -> &[Rational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Affine] {
        &self.pieces
    }

    pub fn point_values(&self) -> &[Rational] {
        &self.point_values
    }

    /// Open interval governed by piece `k`.
    pub fn piece_interval(&self, k: usize) -> Interval {
        let lo = if k == 0 { Cut::NegInf } else { Cut::Above(self.breakpoints[k - 1].clone()) };
        let hi = if k == self.breakpoints.len() { Cut::PosInf } else { Cut::Below(self.breakpoints[k].clone()) };
        Interval::new(lo, hi).expect("breakpoints are strictly increasing")
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        match self.breakpoints.binary_search(x) {
            Ok(i) => self.point_values[i].clone(),
            Err(k) => self.pieces[k].eval(x),
        }
    }

    pub fn preimage(&self, s: &SymbolicSet) -> SymbolicSet {
        let mut parts: Vec<Interval> = Vec::new();
        for (b, v) in self.breakpoints.iter().zip(&self.point_values) {
            if s.contains(v) {
                parts.extend(SymbolicSet::point(b.clone()).components().iter().cloned());
            }
        }
        for (k, law) in self.pieces.iter().enumerate() {
            let piece = SymbolicSet::from_intervals([self.piece_interval(k)]);
            parts.extend(law.preimage(s).intersection(&piece).components().iter().cloned());
        }
        SymbolicSet::from_intervals(parts)
    }

    pub fn image(&self) -> SymbolicSet {
        let mut out = SymbolicSet::from_intervals(
            self.point_values.iter().flat_map(|v| SymbolicSet::point(v.clone()).components().to_vec()),
        );
        for (k, law) in self.pieces.iter().enumerate() {
            out = out.union(&law.image(&self.piece_interval(k)));
        }
        out
    }

    /// `α·f + β`.
    pub fn post_affine(&self, alpha: &Rational, beta: &Rational) -> PiecewiseMap {
        PiecewiseMap {
            breakpoints: self.breakpoints.clone(),
            pieces: self
                .pieces
                .iter()
                .map(|p| Affine::new(alpha * &p.slope, alpha * &p.intercept + beta))
                .collect(),
            point_values: self.point_values.iter().map(|v| alpha * v + beta).collect(),
        }
    }

    /// `x ↦ f(clamp(x))`: constant `f(lo)` left of `lo`, `f(hi)` right of
    /// `hi`, unchanged in between.
    pub fn clamped(&self, lo: Option<&Rational>, hi: Option<&Rational>) -> PiecewiseMap {
        let inside = |b: &Rational| lo.map_or(true, |l| b > l) && hi.map_or(true, |h| b < h);
        let mut breakpoints: Vec<Rational> = lo.into_iter().cloned().collect();
        breakpoints.extend(self.breakpoints.iter().filter(|b| inside(b)).cloned());
        breakpoints.extend(hi.cloned());
        let samples = region_samples(&breakpoints);
        let last = samples.len() - 1;
        let pieces = samples
            .iter()
            .enumerate()
            .map(|(k, x)| {
                if let (0, Some(lo)) = (k, lo) {
                    Affine::constant(self.eval(lo))
                } else if let (true, Some(hi)) = (k == last, hi) {
                    Affine::constant(self.eval(hi))
                } else {
                    self.pieces[self.breakpoints.partition_point(|b| b < x)].clone()
                }
            })
            .collect();
        let point_values = breakpoints.iter().map(|b| self.eval(b)).collect();
        PiecewiseMap { breakpoints, pieces, point_values }
    }

    /// Values where the shape of `f⁻¹(-∞,q)`, `f⁻¹(q,∞)` or `f⁻¹(p,q)` can
    /// change: breakpoint values, one-sided limits and constant pieces.
    pub fn critical_values(&self) -> Vec<Rational> {
        let mut vals: Vec<Rational> = self.point_values.clone();
        for (i, b) in self.breakpoints.iter().enumerate() {
            vals.push(self.pieces[i].eval(b));
            vals.push(self.pieces[i + 1].eval(b));
        }
        vals.extend(self.pieces.iter().filter(|p| p.is_constant()).map(|p| p.intercept.clone()));
        vals.sort();
        vals.dedup();
        vals
    }
}

/// One sample point inside each open region cut out by sorted `points`.
fn region_samples(points: &[Rational]) -> Vec<Rational> {
    if points.is_empty() {
        return vec![zero()];
    }
    let mut out = vec![&points[0] - one()];
    for w in points.windows(2) {
        out.push((&w[0] + &w[1]) / int(2));
    }
    out.push(points.last().unwrap() + one());
    out
}

/// Each critical value plus two sample points in every region between them.
fn representatives(critical: &[Rational]) -> Vec<Rational> {
    if critical.is_empty() {
        return vec![zero(), one()];
    }
    let first = &critical[0];
    let last = critical.last().unwrap();
    let mut out = vec![first - int(2), first - one()];
    for (i, v) in critical.iter().enumerate() {
        out.push(v.clone());
        if let Some(next) = critical.get(i + 1) {
            let third = (next - v) / int(3);
            out.push(v + &third);
            out.push(v + &third * int(2));
        }
    }
    out.push(last + one());
    out.push(last + int(2));
    out
}

/// Target-open test sets that generate the target's opens under unions.
fn test_sets(reps: &[Rational], target: Target) -> Vec<SymbolicSet> {
    match target {
        Target::Gtaun => reps
            .iter()
            .flat_map(|q| [SymbolicSet::below(q.clone(), false), SymbolicSet::above(q.clone(), false)])
            .collect(),
        Target::Taun => reps
            .iter()
            .enumerate()
            .flat_map(|(i, p)| reps[i + 1..].iter().map(move |q| SymbolicSet::open(p.clone(), q.clone())))
            .collect(),
    }
}

/// Whether `s ⊆ domain` is the trace on `domain` of a `source`-open set.
fn is_relatively_open(s: &SymbolicSet, domain: &SymbolicSet, source: LineSpace) -> bool {
    let largest = source.closure(&domain.difference(s)).complement();
    largest.intersection(domain) == *s
}

/// The first generating target-open set whose preimage (within `domain`, if
/// given) is not open, or `None` when `f` is continuous.
pub fn continuity_violation(
    f: &PiecewiseMap,
    domain: Option<&SymbolicSet>,
    source: LineSpace,
    target: Target,
) -> Option<SymbolicSet> {
    let mut critical = f.critical_values();
    if let Some(d) = domain {
        for c in d.components() {
            for v in [c.lo().value(), c.hi().value()].into_iter().flatten() {
                critical.push(f.eval(v));
            }
        }
        critical.sort();
        critical.dedup();
    }
    test_sets(&representatives(&critical), target).into_iter().find(|v| {
        let pre = f.preimage(v);
        match domain {
            None => !source.is_open(&pre),
            Some(d) => !is_relatively_open(&pre.intersection(d), d, source),
        }
    })
}

/// `⟨source, target⟩`-continuity of `f` on all of ℝ.
pub fn check_continuity_sym(f: &PiecewiseMap, source: LineSpace, target: Target) -> bool {
    continuity_violation(f, None, source, target).is_none()
}

/// Continuity of `f` restricted to `domain` with the subspace GT.
pub fn check_continuity_on(f: &PiecewiseMap, domain: &SymbolicSet, source: LineSpace, target: Target) -> bool {
    continuity_violation(f, Some(domain), source, target).is_none()
}

/// Exact image and whether it is a single interval.
pub fn image_and_connectedness(f: &PiecewiseMap) -> (SymbolicSet, bool) {
    let image = f.image();
    let connected = image.components().len() == 1;
    (image, connected)
}

impl fmt::Display for PiecewiseMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, law) in self.pieces.iter().enumerate() {
            if k > 0 {
                let b = &self.breakpoints[k - 1];
                write!(f, "; at {}: {}; ", format_rational(b), format_rational(&self.point_values[k - 1]))?;
            }
            write!(f, "on {}: {}", self.piece_interval(k), law)?;
        }
        Ok(())
    }
}

impl Serialize for PiecewiseMap {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("PiecewiseMap", 1)?;
        st.serialize_field("text", &self.to_string())?;
        st.end()
    }
}
