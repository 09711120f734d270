//! Exact decision of UL, GUL, TET and GTET on finite strong GT spaces.
//!
//! A finite-range map is continuous or not according to the ordered
//! partition of its fibers alone, so every search here runs over sets and
//! ordered partitions rather than real values.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::function::{blocks_continuous, FiniteFunction};
use super::require_disjoint_closed;
use crate::gt::{FiniteGT, PointSet};
use crate::rational::{one, zero};
use crate::{Error, Result, Target};

/// Largest ground set accepted by the extension-theorem deciders.
pub const MAX_EXTENSION_POINTS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Statement {
    Ul,
    Gul,
    Tet,
    Gtet,
}

impl Statement {
    pub const ALL: [Statement; 4] = [Statement::Ul, Statement::Gul, Statement::Tet, Statement::Gtet];

    /// Target GT on ℝ the statement's functions are continuous into.
    pub fn target(self) -> Target {
        match self {
            Statement::Ul | Statement::Tet => Target::Taun,
            Statement::Gul | Statement::Gtet => Target::Gtaun,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Statement::Ul => "UL",
            Statement::Gul => "GUL",
            Statement::Tet => "TET",
            Statement::Gtet => "GTET",
        })
    }
}

impl FromStr for Statement {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "UL" => Ok(Statement::Ul),
            "GUL" => Ok(Statement::Gul),
            "TET" => Ok(Statement::Tet),
            "GTET" => Ok(Statement::Gtet),
            _ => Err(Error::input(format!("unknown statement `{s}` (expected UL|GUL|TET|GTET)"))),
        }
    }
}

/// A separating function for one closed pair.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairWitness {
    pub pair: (PointSet, PointSet),
    pub function: FiniteFunction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// Every disjoint closed pair has a witness.
    AllPairsSeparated { pairs: usize },
    /// The first disjoint closed pair without a witness.
    Unseparated { pair: (PointSet, PointSet) },
    /// Every continuous map on every closed subset extends.
    AllExtended { subsets: usize, functions: usize },
    /// A continuous map on a closed subset (values are fiber ranks) with no
    /// continuous extension.
    NotExtendable { subset: PointSet, function: FiniteFunction },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub statement: Statement,
    pub holds: bool,
    pub certificate: Certificate,
}

fn require_strong(space: &FiniteGT) -> Result<()> {
    if !space.is_strong() {
        return Err(Error::precondition("the space is not strong (X is not open)"));
    }
    Ok(())
}

/// A `gτ_n`-continuous `f` with `a ⊆ f⁻¹(0)`, `b ⊆ f⁻¹(1)`, if one exists:
/// `0` on the least clopen `U` with `a ⊆ U ⊆ X ∖ b`, `1` elsewhere.
pub fn decide_gul_pair(space: &FiniteGT, a: PointSet, b: PointSet) -> Result<Option<FiniteFunction>> {
    require_strong(space)?;
    require_disjoint_closed(space, a, b)?;
    let x = space.whole();
    let upper = b.complement_in(x);
    Ok(space
        .opens()
        .iter()
        .find(|&&u| a.is_subset(u) && u.is_subset(upper) && space.is_open(u.complement_in(x)))
        .map(|&u| FiniteFunction::two_valued(x, u, zero(), one())))
}

/// A `τ_n`-continuous separating function, if one exists.
///
/// Searches open fibers directly: a zero fiber `P0 ⊇ a`, a one fiber
/// `P1 ⊇ b` and the remaining points, which must form an open set (any
/// union of the other fibers) or be empty.
pub fn decide_ul_pair(space: &FiniteGT, a: PointSet, b: PointSet) -> Result<Option<FiniteFunction>> {
    require_strong(space)?;
    require_disjoint_closed(space, a, b)?;
    let x = space.whole();
    let mut found = None;
    'search: for &p0 in space.opens().iter().filter(|p| a.is_subset(**p) && p.is_disjoint(b)) {
        for &p1 in space.opens().iter().filter(|p| b.is_subset(**p) && p.is_disjoint(p0)) {
            let rest = x.difference(p0.union(p1));
            if rest.is_empty() || space.is_open(rest) {
                found = Some(FiniteFunction::two_valued(x, p0, zero(), one()));
                break 'search;
            }
        }
    }
    debug_assert_eq!(found.is_some(), decide_gul_pair(space, a, b)?.is_some(), "finite UL/GUL collapse");
    Ok(found)
}

/// Whether some clopen `C` has `a ⊆ C ⊆ X ∖ b`, by brute force over all
/// subsets using the interior and closure operators.
pub fn clopen_separator_exists(space: &FiniteGT, a: PointSet, b: PointSet) -> bool {
    let x = space.whole();
    let upper = b.complement_in(x);
    upper.subsets().any(|c| a.is_subset(c) && space.interior_of(c) == c && space.closure_of(c) == c)
}

/// Every ordered partition of `domain` into nonempty blocks, in a fixed order.
pub fn ordered_partitions(domain: PointSet) -> Vec<Vec<PointSet>> {
    let points: Vec<usize> = domain.points().collect();
    let m = points.len();
    if m == 0 {
        return vec![Vec::new()];
    }
    let total = m.pow(m as u32);
    let mut out = Vec::new();
    let mut ranks = vec![0usize; m];
    for code in 0..total {
        let mut c = code;
        for r in ranks.iter_mut() {
            *r = c % m;
            c /= m;
        }
        let k = ranks.iter().max().unwrap() + 1;
        let mut blocks = vec![PointSet::EMPTY; k];
        for (&p, &r) in points.iter().zip(&ranks) {
            blocks[r] = blocks[r].union(PointSet::singleton(p));
        }
        if blocks.iter().all(|b| !b.is_empty()) {
            out.push(blocks);
        }
    }
    out
}

fn decide_pairs(space: &FiniteGT, statement: Statement) -> Result<Verdict> {
    let pairs = space.disjoint_closed_pairs();
    for &(a, b) in &pairs {
        let witness = match statement {
            Statement::Ul => decide_ul_pair(space, a, b)?,
            _ => decide_gul_pair(space, a, b)?,
        };
        if witness.is_none() {
            return Ok(Verdict { statement, holds: false, certificate: Certificate::Unseparated { pair: (a, b) } });
        }
    }
    Ok(Verdict { statement, holds: true, certificate: Certificate::AllPairsSeparated { pairs: pairs.len() } })
}

fn decide_extension(space: &FiniteGT, statement: Statement) -> Result<Verdict> {
    if space.points() > MAX_EXTENSION_POINTS {
        return Err(Error::Resource(format!(
            "{statement} is decided by exhaustive search on at most {MAX_EXTENSION_POINTS} points"
        )));
    }
    let target = statement.target();
    let x = space.whole();
    let extendable: Vec<Vec<PointSet>> =
        ordered_partitions(x).into_iter().filter(|p| blocks_continuous(space, p, target)).collect();
    let closed = space.closed_sets();
    let mut functions = 0;
    for &a in &closed {
        let sub = space.subspace(a)?;
        let restrictions: HashSet<Vec<PointSet>> = extendable
            .iter()
            .map(|p| p.iter().map(|blk| blk.intersection(a)).filter(|blk| !blk.is_empty()).collect())
            .collect();
        for q in ordered_partitions(a) {
            let local: Vec<PointSet> = q.iter().map(|blk| blk.compress(a)).collect();
            if !blocks_continuous(&sub, &local, target) {
                continue;
            }
            functions += 1;
            if !restrictions.contains(&q) {
                return Ok(Verdict {
                    statement,
                    holds: false,
                    certificate: Certificate::NotExtendable { subset: a, function: FiniteFunction::from_blocks(&q) },
                });
            }
        }
    }
    Ok(Verdict {
        statement,
        holds: true,
        certificate: Certificate::AllExtended { subsets: closed.len(), functions },
    })
}

/// Decides one statement, with a counterexample or a summary certificate.
pub fn decide_statement(space: &FiniteGT, statement: Statement) -> Result<Verdict> {
    require_strong(space)?;
    match statement {
        Statement::Ul | Statement::Gul => decide_pairs(space, statement),
        Statement::Tet | Statement::Gtet => decide_extension(space, statement),
    }
}
