//! Ladders `{U_r}` and pair-ladders `{⟨U_r, F_r⟩}` on a finite support of
//! rational indices in `(0, 1)`.
//!
//! The support clauses are checked exactly as stated for the full index set
//! `ℚ ∩ (0,1)`, restricted to the entries present. On a finite support they
//! do not by themselves make the induced function continuous, so reports also
//! carry a completion check: every `U_r` clopen for a ladder, `U_r = F_r` for
//! a pair-ladder. Functions are read off with a step rule: `f(x)` is the
//! index just before the first entry containing `x`, `0` if that is the first
//! entry, and `1` if no entry contains `x`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use super::function::{check_continuity_finite, FiniteFunction};
use super::require_disjoint_closed;
use crate::gt::{FiniteGT, PointSet};
use crate::rational::{dyadics_breadth_first, format_rational, one, zero};
use crate::{Error, Rational, Result, Target};

fn in_unit_interval(r: &Rational) -> bool {
    *r > zero() && *r < one()
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Ladder {
    entries: BTreeMap<Rational, PointSet>,
}

impl Ladder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Rational, PointSet)>) -> Self {
        Ladder { entries: entries.into_iter().collect() }
    }

    /// The same set at every index.
    pub fn constant(indices: &[Rational], u: PointSet) -> Self {
        Self::from_entries(indices.iter().map(|r| (r.clone(), u)))
    }

    pub fn insert(&mut self, r: Rational, u: PointSet) {
        self.entries.insert(r, u);
    }

    pub fn get(&self, r: &Rational) -> Option<PointSet> {
        self.entries.get(r).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rational, PointSet)> {
        self.entries.iter().map(|(r, u)| (r, *u))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for Ladder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (r, u) in &self.entries {
            map.serialize_entry(&format_rational(r), u)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PairLadder {
    entries: BTreeMap<Rational, (PointSet, PointSet)>,
}

impl PairLadder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = (Rational, (PointSet, PointSet))>) -> Self {
        PairLadder { entries: entries.into_iter().collect() }
    }

    pub fn insert(&mut self, r: Rational, open: PointSet, closed: PointSet) {
        self.entries.insert(r, (open, closed));
    }

    pub fn get(&self, r: &Rational) -> Option<(PointSet, PointSet)> {
        self.entries.get(r).copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rational, (PointSet, PointSet))> {
        self.entries.iter().map(|(r, p)| (r, *p))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

struct OpenClosed(PointSet, PointSet);

impl Serialize for OpenClosed {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("OpenClosed", 2)?;
        st.serialize_field("open", &self.0)?;
        st.serialize_field("closed", &self.1)?;
        st.end()
    }
}

impl Serialize for PairLadder {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (r, (u, f)) in &self.entries {
            map.serialize_entry(&format_rational(r), &OpenClosed(*u, *f))?;
        }
        map.end()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LadderMode {
    Single,
    Pair,
}

impl FromStr for LadderMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "single" => Ok(LadderMode::Single),
            "pair" => Ok(LadderMode::Pair),
            other => Err(Error::input(format!("unknown ladder mode `{other}` (expected single|pair)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", content = "entries", rename_all = "lowercase")]
pub enum AnyLadder {
    Single(Ladder),
    Pair(PairLadder),
}

/// Which requirement a ladder entry fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LadderClause {
    /// An index outside `(0, 1)`.
    Index,
    /// A ladder set that is not open.
    Open,
    I,
    II,
    III,
    /// Support clauses hold but the step function is not continuous.
    Completion,
}

impl fmt::Display for LadderClause {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LadderClause::Index => "index",
            LadderClause::Open => "open",
            LadderClause::I => "(i)",
            LadderClause::II => "(ii)",
            LadderClause::III => "(iii)",
            LadderClause::Completion => "completion",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderViolation {
    pub clause: LadderClause,
    #[serde(serialize_with = "crate::rational::text::serialize_vec")]
    pub indices: Vec<Rational>,
}

impl fmt::Display for LadderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(format_rational).collect();
        write!(f, "clause {} at index {}", self.clause, idx.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LadderReport {
    /// First violated support clause, if any.
    pub violation: Option<LadderViolation>,
    /// First entry failing completion, if any.
    pub incomplete: Option<LadderViolation>,
}

impl LadderReport {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }

    pub fn is_complete(&self) -> bool {
        self.violation.is_none() && self.incomplete.is_none()
    }
}

fn first_violation<'a, T: 'a>(
    entries: impl Iterator<Item = (&'a Rational, T)>,
    clause: LadderClause,
    bad: impl Fn(&T) -> bool,
) -> Option<LadderViolation> {
    for (r, v) in entries {
        if bad(&v) {
            return Some(LadderViolation { clause, indices: vec![r.clone()] });
        }
    }
    None
}

fn index_violation<T>(entries: &[(&Rational, T)]) -> Option<LadderViolation> {
    entries
        .iter()
        .find(|(r, _)| !in_unit_interval(r))
        .map(|(r, _)| LadderViolation { clause: LadderClause::Index, indices: vec![(*r).clone()] })
}

fn first_pair_violation<T: Copy>(
    entries: &[(&Rational, T)],
    clause: LadderClause,
    bad: impl Fn(T, T) -> bool,
) -> Option<LadderViolation> {
    for (i, (r, lo)) in entries.iter().enumerate() {
        for (s, hi) in &entries[i + 1..] {
            if bad(*lo, *hi) {
                return Some(LadderViolation { clause, indices: vec![(*r).clone(), (*s).clone()] });
            }
        }
    }
    None
}

/// Checks a ladder against `(a, b)`: indices in `(0,1)`, open sets, then
/// (i) `cl U_r ⊆ U_s` for `r < s`, (ii) `a ⊆ U_r`, (iii) `cl U_r ⊆ X ∖ b`.
pub fn check_ladder(space: &FiniteGT, ladder: &Ladder, a: PointSet, b: PointSet) -> LadderReport {
    let x = space.whole();
    let list: Vec<(&Rational, PointSet)> = ladder.entries().collect();
    let violation = index_violation(&list)
        .or_else(|| first_violation(list.iter().copied(), LadderClause::Open, |u| !space.is_open(*u)))
        .or_else(|| {
            first_pair_violation(&list, LadderClause::I, |u, w| !space.closure_of(u).is_subset(w))
        })
        .or_else(|| first_violation(list.iter().copied(), LadderClause::II, |u| !a.is_subset(*u)))
        .or_else(|| {
            first_violation(list.iter().copied(), LadderClause::III, |u| {
                !space.closure_of(*u).is_subset(b.complement_in(x))
            })
        });
    let incomplete = first_violation(list.iter().copied(), LadderClause::Completion, |u| !space.is_clopen(*u));
    LadderReport { violation, incomplete }
}

/// Checks a pair-ladder against `(a, b)`: (i) `U_r` open, `F_r` closed,
/// `a ⊆ U_r ⊆ F_r`; (ii) for `s < r`, `F_s ⊆ U_r` and `U_r ∖ F_s` open;
/// (iii) `F_r ∩ b = ∅`.
pub fn check_pair_ladder(space: &FiniteGT, ladder: &PairLadder, a: PointSet, b: PointSet) -> LadderReport {
    let list: Vec<(&Rational, (PointSet, PointSet))> = ladder.entries().collect();
    let violation = index_violation(&list)
        .or_else(|| {
            first_violation(list.iter().copied(), LadderClause::I, |&(u, f)| {
                !(space.is_open(u) && space.is_closed(f) && a.is_subset(u) && u.is_subset(f))
            })
        })
        .or_else(|| {
            first_pair_violation(&list, LadderClause::II, |(_, f_s), (u_r, _)| {
                !(f_s.is_subset(u_r) && space.is_open(u_r.difference(f_s)))
            })
        })
        .or_else(|| first_violation(list.iter().copied(), LadderClause::III, |&(_, f)| !f.is_disjoint(b)));
    let incomplete = first_violation(list.iter().copied(), LadderClause::Completion, |&(u, f)| u != f);
    LadderReport { violation, incomplete }
}

fn step_value(indices: &[&Rational], first_hit: Option<usize>) -> Rational {
    match first_hit {
        Some(0) => zero(),
        Some(j) => indices[j - 1].clone(),
        None => one(),
    }
}

fn step_function(space: &FiniteGT, sets: &[(&Rational, PointSet)]) -> FiniteFunction {
    let indices: Vec<&Rational> = sets.iter().map(|(r, _)| *r).collect();
    FiniteFunction::new(space.whole().points().map(|p| {
        let hit = sets.iter().position(|(_, u)| u.contains(p));
        (p, step_value(&indices, hit))
    }))
}

fn require_closed(space: &FiniteGT, b: PointSet) -> Result<()> {
    if !space.is_closed(b) {
        return Err(Error::precondition(format!("{b} is not closed")));
    }
    Ok(())
}

/// The function induced by a ladder, with `U_1 = X ∖ b` and `U_r = X` above 1.
///
/// Values lie in `{0, 1}` plus the support. The result is continuous into
/// `gτ_n` exactly when the ladder is complete.
pub fn function_from_ladder(space: &FiniteGT, ladder: &Ladder, b: PointSet) -> Result<FiniteFunction> {
    require_closed(space, b)?;
    if let Some(v) = check_ladder(space, ladder, PointSet::EMPTY, b).violation {
        return Err(Error::precondition(format!("ladder fails {v}")));
    }
    let sets: Vec<(&Rational, PointSet)> = ladder.entries().collect();
    Ok(step_function(space, &sets))
}

/// The function induced by a pair-ladder through its open members. Complete
/// pair-ladders give `τ_n`-continuous functions.
pub fn function_from_pair_ladder(space: &FiniteGT, ladder: &PairLadder, b: PointSet) -> Result<FiniteFunction> {
    require_closed(space, b)?;
    if let Some(v) = check_pair_ladder(space, ladder, PointSet::EMPTY, b).violation {
        return Err(Error::precondition(format!("pair-ladder fails {v}")));
    }
    let sets: Vec<(&Rational, PointSet)> = ladder.entries().map(|(r, (u, _))| (r, u)).collect();
    Ok(step_function(space, &sets))
}

/// Preimage ladder of a continuous `f`: `U_r = f⁻¹(-∞, r)` and, for pairs,
/// `F_r = f⁻¹(-∞, r]`. Single mode needs `gτ_n`-continuity, pair mode
/// `τ_n`-continuity.
pub fn ladder_from_function(
    space: &FiniteGT,
    f: &FiniteFunction,
    mode: LadderMode,
    indices: &[Rational],
) -> Result<AnyLadder> {
    if f.domain() != space.whole() {
        return Err(Error::input(format!("function is defined on {}, not on the ground set", f.domain())));
    }
    if let Some(r) = indices.iter().find(|r| !in_unit_interval(r)) {
        return Err(Error::input(format!("ladder index {} is outside (0, 1)", format_rational(r))));
    }
    let target = match mode {
        LadderMode::Single => Target::Gtaun,
        LadderMode::Pair => Target::Taun,
    };
    if !check_continuity_finite(f, space, target) {
        return Err(Error::precondition(format!("function is not continuous into {target}")));
    }
    Ok(match mode {
        LadderMode::Single => {
            AnyLadder::Single(Ladder::from_entries(indices.iter().map(|r| (r.clone(), f.preimage(|v| v < r)))))
        }
        LadderMode::Pair => AnyLadder::Pair(PairLadder::from_entries(
            indices.iter().map(|r| (r.clone(), (f.preimage(|v| v < r), f.preimage(|v| v <= r)))),
        )),
    })
}

/// Outcome of one ladder extension step.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum LadderStep {
    Extended { ladder: Ladder },
    /// The closed sets that must be separated at the new index and cannot be.
    NoExtension { blocking: (PointSet, PointSet) },
}

/// Adds `next_index` to a valid ladder using the canonically least open `W`
/// with `L ⊆ W` and `cl W ⊆ H`, where `L` is the closure of the nearest lower
/// entry (or `a`) and `H` the nearest upper entry (or `X ∖ b`).
pub fn extend_ladder_step(
    space: &FiniteGT,
    partial: &Ladder,
    a: PointSet,
    b: PointSet,
    next_index: &Rational,
) -> Result<LadderStep> {
    require_disjoint_closed(space, a, b)?;
    if !in_unit_interval(next_index) {
        return Err(Error::input(format!("ladder index {} is outside (0, 1)", format_rational(next_index))));
    }
    if partial.get(next_index).is_some() {
        return Err(Error::input(format!("index {} is already in the ladder", format_rational(next_index))));
    }
    if let Some(v) = check_ladder(space, partial, a, b).violation {
        return Err(Error::precondition(format!("partial ladder fails {v}")));
    }
    let x = space.whole();
    let lower = partial
        .entries
        .range(..next_index.clone())
        .next_back()
        .map(|(_, u)| space.closure_of(*u))
        .unwrap_or(a);
    let upper = partial
        .entries
        .range(next_index.clone()..)
        .next()
        .map(|(_, u)| *u)
        .unwrap_or_else(|| b.complement_in(x));
    let found = space
        .opens()
        .iter()
        .copied()
        .find(|&w| lower.is_subset(w) && space.closure_of(w).is_subset(upper));
    Ok(match found {
        Some(w) => {
            let mut ladder = partial.clone();
            ladder.insert(next_index.clone(), w);
            LadderStep::Extended { ladder }
        }
        None => LadderStep::NoExtension { blocking: (lower, upper.complement_in(x)) },
    })
}

/// Builds a ladder on the dyadics of the given level by repeated extension,
/// in breadth-first index order.
pub fn build_ladder(space: &FiniteGT, a: PointSet, b: PointSet, level: u32) -> Result<LadderStep> {
    let mut ladder = Ladder::new();
    for r in dyadics_breadth_first(level) {
        match extend_ladder_step(space, &ladder, a, b, &r)? {
            LadderStep::Extended { ladder: next } => ladder = next,
            blocked => return Ok(blocked),
        }
    }
    Ok(LadderStep::Extended { ladder })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{dyadics, frac, int};

    fn set(p: &[usize]) -> PointSet {
        PointSet::from_points(p.iter().copied())
    }

    fn discrete(n: usize) -> FiniteGT {
        FiniteGT::new(n, PointSet::full(n).subsets()).unwrap()
    }

    fn clopen_partition() -> FiniteGT {
        FiniteGT::from_lists(4, &[&[], &[0, 1], &[2, 3], &[0, 1, 2, 3]]).unwrap()
    }

    fn non_normal() -> FiniteGT {
        FiniteGT::from_lists(3, &[&[], &[0, 1], &[1, 2], &[0, 1, 2]]).unwrap()
    }

    #[test]
    fn constant_ladder_function() {
        let x = discrete(2);
        let ladder = Ladder::constant(&dyadics(3), set(&[0]));
        let f = function_from_ladder(&x, &ladder, set(&[1])).unwrap();
        assert_eq!(f.value(0), Some(&int(0)));
        assert_eq!(f.value(1), Some(&int(1)));
    }

    #[test]
    fn empty_ladder_is_constant_one() {
        let x = discrete(3);
        let f = function_from_ladder(&x, &Ladder::new(), PointSet::EMPTY).unwrap();
        assert!(f.iter().all(|(_, v)| *v == int(1)));
    }

    #[test]
    fn whole_set_at_half_bounds_values() {
        let x = discrete(3);
        let ladder = Ladder::from_entries([(frac(1, 4), set(&[0])), (frac(1, 2), x.whole())]);
        let f = function_from_ladder(&x, &ladder, PointSet::EMPTY).unwrap();
        assert!(f.iter().all(|(_, v)| *v <= frac(1, 2)));
    }

    #[test]
    fn non_monotone_ladder_is_rejected() {
        let x = discrete(2);
        let ladder = Ladder::from_entries([(frac(1, 4), set(&[0, 1])), (frac(1, 2), set(&[0]))]);
        assert!(matches!(function_from_ladder(&x, &ladder, PointSet::EMPTY), Err(Error::Precondition(_))));
    }

    #[test]
    fn preimage_ladders() {
        let x = discrete(2);
        let f = FiniteFunction::on_points(vec![int(0), int(1)]);
        let half = [frac(1, 2)];
        let single = ladder_from_function(&x, &f, LadderMode::Single, &half).unwrap();
        assert_eq!(single, AnyLadder::Single(Ladder::from_entries([(frac(1, 2), set(&[0]))])));
        let pair = ladder_from_function(&x, &f, LadderMode::Pair, &half).unwrap();
        assert_eq!(pair, AnyLadder::Pair(PairLadder::from_entries([(frac(1, 2), (set(&[0]), set(&[0])))])));

        let x = discrete(3);
        let f = FiniteFunction::on_points(vec![int(0), frac(1, 2), int(1)]);
        let idx = [frac(1, 4), frac(1, 2), frac(3, 4)];
        let AnyLadder::Pair(p) = ladder_from_function(&x, &f, LadderMode::Pair, &idx).unwrap() else {
            panic!("pair mode")
        };
        assert_eq!(p.get(&frac(1, 4)).unwrap().0, set(&[0]));
        assert_eq!(p.get(&frac(3, 4)).unwrap().0, set(&[0, 1]));
        assert_eq!(p.get(&frac(1, 2)).unwrap().1, set(&[0, 1]));
    }

    #[test]
    fn discontinuous_function_is_rejected() {
        let x = FiniteGT::from_lists(2, &[&[], &[0], &[0, 1]]).unwrap();
        let f = FiniteFunction::on_points(vec![int(0), int(1)]);
        let r = ladder_from_function(&x, &f, LadderMode::Single, &[frac(1, 2)]);
        assert!(matches!(r, Err(Error::Precondition(_))));
    }

    #[test]
    fn clopen_ladder_checks() {
        let x = clopen_partition();
        let ladder = Ladder::constant(&dyadics(2), set(&[0, 1]));
        let report = check_ladder(&x, &ladder, set(&[0, 1]), set(&[2, 3]));
        assert!(report.is_complete());
    }

    #[test]
    fn broken_monotonicity_reports_clause_one() {
        let x = discrete(3);
        let ladder = Ladder::from_entries([(frac(1, 4), set(&[0, 1])), (frac(1, 2), set(&[0]))]);
        let report = check_ladder(&x, &ladder, set(&[0]), set(&[2]));
        let v = report.violation.unwrap();
        assert_eq!(v.clause, LadderClause::I);
        assert_eq!(v.indices, vec![frac(1, 4), frac(1, 2)]);
    }

    #[test]
    fn pair_clause_two_needs_open_difference() {
        // U_{1/2} ∖ F_{1/4} = {1} is not open
        let x = FiniteGT::from_lists(3, &[&[], &[0], &[0, 1], &[0, 1, 2]]).unwrap();
        let p = PairLadder::from_entries([
            (frac(1, 4), (set(&[0]), set(&[0]))),
            (frac(1, 2), (set(&[0, 1]), set(&[0, 1]))),
        ]);
        // {0} is not closed here, so clause (i) fires first
        assert_eq!(check_pair_ladder(&x, &p, set(&[0]), PointSet::EMPTY).violation.unwrap().clause, LadderClause::I);
        let d = discrete(3);
        assert!(check_pair_ladder(&d, &p, set(&[0]), set(&[2])).is_complete());
    }

    #[test]
    fn first_extension_is_least_open() {
        let x = discrete(3);
        let step = extend_ladder_step(&x, &Ladder::new(), set(&[0]), set(&[2]), &frac(1, 2)).unwrap();
        let LadderStep::Extended { ladder } = step else { panic!("normal space") };
        assert_eq!(ladder.get(&frac(1, 2)), Some(set(&[0])));
    }

    #[test]
    fn clopen_partition_gives_constant_ladder() {
        let x = clopen_partition();
        let LadderStep::Extended { ladder } = build_ladder(&x, set(&[0, 1]), set(&[2, 3]), 4).unwrap() else {
            panic!("normal space")
        };
        assert_eq!(ladder.len(), 15);
        assert!(ladder.entries().all(|(_, u)| u == set(&[0, 1])));
    }

    #[test]
    fn non_normal_space_blocks_extension() {
        let x = non_normal();
        let step = extend_ladder_step(&x, &Ladder::new(), set(&[0]), set(&[2]), &frac(1, 2)).unwrap();
        assert_eq!(step, LadderStep::NoExtension { blocking: (set(&[0]), set(&[2])) });
    }

    #[test]
    fn ladder_serializes_with_text_indices() {
        let ladder = Ladder::from_entries([(frac(1, 2), set(&[0]))]);
        assert_eq!(serde_json::to_string(&ladder).unwrap(), r#"{"1/2":[0]}"#);
    }
}
