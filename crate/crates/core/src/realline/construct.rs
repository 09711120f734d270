//! Explicit witnesses on the line: separating functions, extensions,
//! effective-normality choices, dyadic ladders and product lifts.

use std::collections::BTreeMap;

use num::BigUint;
use serde::{Serialize, Serializer};

use super::enumerate::least_psi_in;
use super::map::{check_continuity_on, check_continuity_sym, Affine, PiecewiseMap};
use super::set::{Cut, Interval, SymbolicSet};
use super::space::{Classification, LineSpace};
use crate::rational::{dyadics_breadth_first, format_rational, frac, int, one, zero};
use crate::urysohn::{LadderClause, LadderViolation};
use crate::{Error, Rational, Result, Target};

fn require_closed(s: &SymbolicSet, space: LineSpace) -> Result<()> {
    if !space.is_closed(s) {
        return Err(Error::precondition(format!("{s} is not closed in {space}")));
    }
    Ok(())
}

fn require_disjoint_closed(a: &SymbolicSet, b: &SymbolicSet, space: LineSpace) -> Result<()> {
    require_closed(a, space)?;
    require_closed(b, space)?;
    if !a.is_disjoint(b) {
        return Err(Error::precondition(format!("{a} and {b} intersect")));
    }
    Ok(())
}

/// A `⟨space, gτ_n⟩`-continuous `f` with `a ⊆ f⁻¹(0)` and `b ⊆ f⁻¹(1)`.
///
/// With the left set ending at `c` and the right one starting at `d`:
/// `0` up to `c`, `(x-c)/(d-c)` on `(c,d)`, `1` from `d`; composed with
/// `t ↦ 1-t` when `b` is the left set. Sets that touch (possible in `gτ_s`,
/// e.g. `[0,1)` and `[1,2]`) get a step at the common endpoint taking the
/// right set's value there.
pub fn gul_witness(a: &SymbolicSet, b: &SymbolicSet, space: LineSpace) -> Result<PiecewiseMap> {
    require_disjoint_closed(a, b, space)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::precondition("both sets must be nonempty"));
    }
    let a_left = a.hi() <= b.lo();
    let (left, right) = if a_left { (a, b) } else { (b, a) };
    let c = left.hi().and_then(Cut::value).expect("bounded above by the right set").clone();
    let d = right.lo().and_then(Cut::value).expect("bounded below by the left set").clone();
    let g = if c < d {
        let slope = one() / (&d - &c);
        let intercept = -&c * &slope;
        PiecewiseMap::new(
            vec![c, d],
            vec![Affine::constant(zero()), Affine::new(slope, intercept), Affine::constant(one())],
            vec![zero(), one()],
        )?
    } else {
        PiecewiseMap::step(c, zero(), one(), one())
    };
    Ok(if a_left { g } else { g.post_affine(&int(-1), &one()) })
}

/// Extends a continuous `f: p → ℝ` from a closed `p` of the form `[a,b]`,
/// `(-∞,a]` or `[b,∞)` by constants: `f(a)` left of `a`, `f(b)` right of `b`.
pub fn tietze_extend(p: &SymbolicSet, f: &PiecewiseMap, target: Target) -> Result<PiecewiseMap> {
    require_closed(p, LineSpace::Gtn)?;
    let [c] = p.components() else {
        return Err(Error::precondition(format!("{p} is not a nonempty closed interval or ray")));
    };
    if p.is_all() {
        return Err(Error::precondition("nothing to extend on the whole line"));
    }
    let (lo, hi) = (c.lo().value(), c.hi().value());
    if lo.is_some() && lo == hi {
        return Err(Error::precondition(format!("{p} is a singleton")));
    }
    if !check_continuity_on(f, p, LineSpace::Gtn, target) {
        return Err(Error::precondition(format!("the map is not continuous into {target} on {p}")));
    }
    let g = f.clamped(lo, hi);
    debug_assert!(check_continuity_sym(&g, LineSpace::Gtn, target));
    Ok(g)
}

/// The three windows `(-1,1/4)`, `(1/3,2/3)`, `(3/4,∞)` pulled back by `f`
/// and classified in `gτ_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OpenTriple {
    pub u: SymbolicSet,
    pub v: SymbolicSet,
    pub w: SymbolicSet,
    pub u_class: Classification,
    pub v_class: Classification,
    pub w_class: Classification,
}

pub fn disjoint_open_triple(f: &PiecewiseMap) -> OpenTriple {
    let u = f.preimage(&SymbolicSet::open(int(-1), frac(1, 4)));
    let v = f.preimage(&SymbolicSet::open(frac(1, 3), frac(2, 3)));
    let w = f.preimage(&SymbolicSet::above(frac(3, 4), false));
    let gtn = LineSpace::Gtn;
    OpenTriple { u_class: gtn.classify(&u), v_class: gtn.classify(&v), w_class: gtn.classify(&w), u, v, w }
}

/// Which rule produced an effective-normality pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EffectiveRule {
    EmptyA,
    EmptyB,
    OpenA,
    OpenB,
    /// `⟨(-∞,q), (q,∞)⟩` in either orientation.
    Rays,
    /// `⟨(-∞,q), [q,∞)⟩` in either orientation; `gτ_s` only.
    SplitRays,
}

/// A disjoint open pair `⟨U, V⟩` with `a ⊆ U`, `b ⊆ V`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SymbolicWitness {
    pub u: SymbolicSet,
    pub v: SymbolicSet,
    pub rule: EffectiveRule,
    /// ψ-index of the ray endpoint, for the ray rules.
    #[serde(serialize_with = "index_text")]
    pub index: Option<BigUint>,
    #[serde(serialize_with = "crate::rational::text::serialize_opt")]
    pub q: Option<Rational>,
}

fn index_text<S: Serializer>(i: &Option<BigUint>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match i {
        Some(i) => s.serialize_some(&i.to_string()),
        None => s.serialize_none(),
    }
}

/// `q` with `s ⊆ (-∞,q)` form an interval starting at the cut `s.hi`.
fn q_above(s: &SymbolicSet) -> Cut {
    s.hi().cloned().unwrap_or(Cut::NegInf)
}

/// `q` with `s ⊆ (q,∞)` form an interval ending at the cut `s.lo`.
fn q_below_open(s: &SymbolicSet) -> Cut {
    s.lo().cloned().unwrap_or(Cut::PosInf)
}

/// `q` with `s ⊆ [q,∞)`: `q ≤ inf s`.
fn q_below_closed(s: &SymbolicSet) -> Cut {
    match s.lo() {
        None => Cut::PosInf,
        Some(Cut::NegInf) => Cut::NegInf,
        Some(c) => Cut::Above(c.value().expect("finite cut").clone()),
    }
}

/// The effective-normality choice `F(⟨a, b⟩)`.
///
/// Empty sides give `⟨∅,ℝ⟩` / `⟨ℝ,∅⟩`. In `gτ_s`, an open `a` gives
/// `⟨a, ℝ∖a⟩` and otherwise an open `b` gives `⟨ℝ∖b, b⟩`. Everything else
/// takes the rational `q` of least ψ-index for which the rays at `q` (in
/// either orientation) separate the sets; in `gτ_s` the split `(-∞,q)`,
/// `[q,∞)` also counts, which separates sets that touch at `q`.
pub fn effective_f(a: &SymbolicSet, b: &SymbolicSet, space: LineSpace) -> Result<SymbolicWitness> {
    require_disjoint_closed(a, b, space)?;
    let simple = |u, v, rule| SymbolicWitness { u, v, rule, index: None, q: None };
    if a.is_empty() {
        return Ok(simple(SymbolicSet::empty(), SymbolicSet::all(), EffectiveRule::EmptyA));
    }
    if b.is_empty() {
        return Ok(simple(SymbolicSet::all(), SymbolicSet::empty(), EffectiveRule::EmptyB));
    }
    if space == LineSpace::Gts {
        if space.is_open(a) {
            return Ok(simple(a.clone(), a.complement(), EffectiveRule::OpenA));
        }
        if space.is_open(b) {
            return Ok(simple(b.complement(), b.clone(), EffectiveRule::OpenB));
        }
    }
    // (q-range, a on the left?, split?)
    let mut options = vec![
        (Interval::new(q_above(a), q_below_open(b)), true, false),
        (Interval::new(q_above(b), q_below_open(a)), false, false),
    ];
    if space == LineSpace::Gts {
        options.push((Interval::new(q_above(a), q_below_closed(b)), true, true));
        options.push((Interval::new(q_above(b), q_below_closed(a)), false, true));
    }
    let best = options
        .into_iter()
        .filter_map(|(range, a_left, split)| range.map(|r| (least_psi_in(&r), a_left, split)))
        .min_by(|x, y| x.0 .0.cmp(&y.0 .0));
    let Some(((index, q), a_left, split)) = best else {
        return Err(Error::precondition(format!("{a} and {b} are not separated by rays")));
    };
    let lower = SymbolicSet::below(q.clone(), false);
    let upper = SymbolicSet::above(q.clone(), split);
    let (u, v) = if a_left { (lower, upper) } else { (upper, lower) };
    let rule = if split { EffectiveRule::SplitRays } else { EffectiveRule::Rays };
    Ok(SymbolicWitness { u, v, rule, index: Some(index), q: Some(q) })
}

/// Open sets `U_r` indexed by dyadic rationals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolicLadder {
    entries: BTreeMap<Rational, SymbolicSet>,
}

impl SymbolicLadder {
    pub fn get(&self, r: &Rational) -> Option<&SymbolicSet> {
        self.entries.get(r)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&Rational, &SymbolicSet)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for SymbolicLadder {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.entries.len()))?;
        for (r, u) in &self.entries {
            map.serialize_entry(&format_rational(r), u)?;
        }
        map.end()
    }
}

/// Dyadic ladder up to level `k` built from [`effective_f`]: each new
/// `U_r` is the first set of `F(cl U_below, ℝ ∖ U_above)`, with `a` standing
/// in below the smallest index and `ℝ ∖ b` above the largest.
pub fn ladder_from_f(a: &SymbolicSet, b: &SymbolicSet, space: LineSpace, k: u32) -> Result<SymbolicLadder> {
    require_disjoint_closed(a, b, space)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::precondition("both sets must be nonempty"));
    }
    let mut entries: BTreeMap<Rational, SymbolicSet> = BTreeMap::new();
    for r in dyadics_breadth_first(k) {
        let lower = entries.range(..r.clone()).next_back().map(|(_, u)| space.closure(u)).unwrap_or_else(|| a.clone());
        let upper_closed =
            entries.range(r.clone()..).next().map(|(_, u)| u.complement()).unwrap_or_else(|| b.clone());
        let w = effective_f(&lower, &upper_closed, space)?;
        entries.insert(r, w.u);
    }
    Ok(SymbolicLadder { entries })
}

/// The ladder clauses for `(a, b)`, checked symbolically: open sets,
/// (i) `cl U_r ⊆ U_s` for `r < s`, (ii) `a ⊆ U_r`, (iii) `cl U_r ∩ b = ∅`.
pub fn check_ladder_sym(
    ladder: &SymbolicLadder,
    a: &SymbolicSet,
    b: &SymbolicSet,
    space: LineSpace,
) -> Option<LadderViolation> {
    let list: Vec<(&Rational, &SymbolicSet)> = ladder.entries().collect();
    let one_index = |clause, r: &Rational| Some(LadderViolation { clause, indices: vec![r.clone()] });
    for (r, _) in &list {
        if **r <= zero() || **r >= one() {
            return one_index(LadderClause::Index, r);
        }
    }
    for (r, u) in &list {
        if !space.is_open(u) {
            return one_index(LadderClause::Open, r);
        }
    }
    for (i, (r, u)) in list.iter().enumerate() {
        let cl = space.closure(u);
        for (s, w) in &list[i + 1..] {
            if !cl.is_subset(w) {
                return Some(LadderViolation { clause: LadderClause::I, indices: vec![(*r).clone(), (*s).clone()] });
            }
        }
    }
    for (r, u) in &list {
        if !a.is_subset(u) {
            return one_index(LadderClause::II, r);
        }
    }
    for (r, u) in &list {
        if !space.closure(u).is_disjoint(b) {
            return one_index(LadderClause::III, r);
        }
    }
    None
}

/// A separating map on `ℝ × ℝ` that depends on one coordinate only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductWitness {
    /// 1 or 2.
    pub coordinate: u8,
    pub map: PiecewiseMap,
}

impl ProductWitness {
    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        self.map.eval(if self.coordinate == 1 { x } else { y })
    }

    /// The preimage of `s` is `P × ℝ` (coordinate 1) or `ℝ × P`
    /// (coordinate 2); returns `P`.
    pub fn preimage_factor(&self, s: &SymbolicSet) -> SymbolicSet {
        self.map.preimage(s)
    }
}

/// GUL witness for rectangles `A = a1 × a2`, `B = b1 × b2` in the product of
/// two copies of the line: the witness for the first coordinate with
/// disjoint factors, lifted. An empty rectangle `A` gives `g ≡ 1`, an empty
/// `B` gives `g ≡ 0`.
pub fn product_gul_witness(
    a1: &SymbolicSet,
    a2: &SymbolicSet,
    b1: &SymbolicSet,
    b2: &SymbolicSet,
    space: LineSpace,
) -> Result<ProductWitness> {
    for s in [a1, a2, b1, b2] {
        require_closed(s, space)?;
    }
    if a1.is_empty() || a2.is_empty() {
        return Ok(ProductWitness { coordinate: 1, map: PiecewiseMap::constant(one()) });
    }
    if b1.is_empty() || b2.is_empty() {
        return Ok(ProductWitness { coordinate: 1, map: PiecewiseMap::constant(zero()) });
    }
    if a1.is_disjoint(b1) {
        Ok(ProductWitness { coordinate: 1, map: gul_witness(a1, b1, space)? })
    } else if a2.is_disjoint(b2) {
        Ok(ProductWitness { coordinate: 2, map: gul_witness(a2, b2, space)? })
    } else {
        Err(Error::precondition("the rectangles intersect"))
    }
}
