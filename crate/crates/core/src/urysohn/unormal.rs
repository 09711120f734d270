//! U-normality: chains `⟨U_0,F_0⟩, …, ⟨U_n,F_n⟩` of open/closed sandwiches
//! between `A` and `X ∖ B`, checked clause by clause and searched
//! exhaustively in canonical order.
//!
//! Clause (iii) is read literally: for each position `i` there is an
//! auxiliary open `U` and closed `F` with `U ⊆ F`, subject to
//! `F ⊆ U_0` when `i = 0`, `F_n ⊆ U` when `i = n`, `F_i ⊆ U` and
//! `F ⊆ U_{i+1}` when `0 < i < n`, and for every `j`: `F ⊆ U_j` implies
//! `U_j ∖ F` open, `F_j ⊆ U` implies `U ∖ F_j` open.

use serde::Serialize;

use super::require_disjoint_closed;
use crate::gt::{FiniteGT, PointSet};
use crate::{Error, Result};

/// Default largest chain index `n` examined by [`is_u_normal`].
pub const DEFAULT_U_NORMAL_MAX: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum UClause {
    #[serde(rename = "(i)")]
    I,
    #[serde(rename = "(ii)")]
    II,
    #[serde(rename = "(iii)")]
    III,
}

/// One labeled pair of a U-family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct UEntry {
    pub label: usize,
    pub open: PointSet,
    pub closed: PointSet,
}

/// A U-family: labeled pairs listed in chain order. The chain order is the
/// bijection from positions `0..=n` to labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UFamily {
    entries: Vec<UEntry>,
}

impl UFamily {
    /// A family from labeled pairs in chain order; labels must be distinct
    /// and there must be at least one pair.
    pub fn new(entries: Vec<UEntry>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::input("a U-family has at least one pair"));
        }
        let mut labels: Vec<usize> = entries.iter().map(|e| e.label).collect();
        labels.sort_unstable();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::input("U-family labels must be distinct"));
        }
        Ok(UFamily { entries })
    }

    /// Pairs in chain order, labeled by position.
    pub fn from_chain(chain: &[(PointSet, PointSet)]) -> Result<Self> {
        Self::new(chain.iter().enumerate().map(|(i, &(open, closed))| UEntry { label: i, open, closed }).collect())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[UEntry] {
        &self.entries
    }

    pub fn get(&self, label: usize) -> Option<(PointSet, PointSet)> {
        self.entries.iter().find(|e| e.label == label).map(|e| (e.open, e.closed))
    }

    pub fn chain(&self) -> Vec<(PointSet, PointSet)> {
        self.entries.iter().map(|e| (e.open, e.closed)).collect()
    }
}

fn sandwiches(space: &FiniteGT, a: PointSet, b: PointSet) -> Vec<(PointSet, PointSet)> {
    let upper = b.complement_in(space.whole());
    let closed = space.closed_sets();
    let mut out = Vec::new();
    for &u in space.opens().iter().filter(|u| a.is_subset(**u) && u.is_subset(upper)) {
        for &f in closed.iter().filter(|f| u.is_subset(**f) && f.is_subset(upper)) {
            out.push((u, f));
        }
    }
    out
}

fn clause_one(space: &FiniteGT, chain: &[(PointSet, PointSet)], a: PointSet, b: PointSet) -> bool {
    let upper = b.complement_in(space.whole());
    chain.iter().all(|&(u, f)| {
        space.is_open(u) && space.is_closed(f) && a.is_subset(u) && u.is_subset(f) && f.is_subset(upper)
    }) && chain.windows(2).all(|w| w[0].1.is_subset(w[1].0))
}

fn clause_two(space: &FiniteGT, chain: &[(PointSet, PointSet)]) -> bool {
    (0..chain.len()).all(|j| (0..j).all(|i| space.is_open(chain[j].0.difference(chain[i].1))))
}

fn auxiliary_exists(space: &FiniteGT, chain: &[(PointSet, PointSet)], closed: &[PointSet], i: usize) -> bool {
    let n = chain.len() - 1;
    space.opens().iter().any(|&u| {
        closed.iter().any(|&f| {
            if !u.is_subset(f) {
                return false;
            }
            if i == 0 && !f.is_subset(chain[0].0) {
                return false;
            }
            if i == n && !chain[n].1.is_subset(u) {
                return false;
            }
            if 0 < i && i < n && !(chain[i].1.is_subset(u) && f.is_subset(chain[i + 1].0)) {
                return false;
            }
            chain.iter().all(|&(u_j, f_j)| {
                (!f.is_subset(u_j) || space.is_open(u_j.difference(f)))
                    && (!f_j.is_subset(u) || space.is_open(u.difference(f_j)))
            })
        })
    })
}

fn clause_three(space: &FiniteGT, chain: &[(PointSet, PointSet)], closed: &[PointSet]) -> bool {
    (0..chain.len()).all(|i| auxiliary_exists(space, chain, closed, i))
}

/// The first clause a chain fails, or `None` if it satisfies all three.
pub fn check_u_chain(space: &FiniteGT, chain: &[(PointSet, PointSet)], a: PointSet, b: PointSet) -> Option<UClause> {
    if chain.is_empty() || !clause_one(space, chain, a, b) {
        return Some(UClause::I);
    }
    if !clause_two(space, chain) {
        return Some(UClause::II);
    }
    if !clause_three(space, chain, &space.closed_sets()) {
        return Some(UClause::III);
    }
    None
}

pub fn check_u_family(space: &FiniteGT, family: &UFamily, a: PointSet, b: PointSet) -> Option<UClause> {
    check_u_chain(space, &family.chain(), a, b)
}

/// The first chain of length `n + 1` (lexicographic over canonically ordered
/// sandwiches) satisfying all three clauses.
pub fn u_family_search(space: &FiniteGT, a: PointSet, b: PointSet, n: usize) -> Option<UFamily> {
    let candidates = sandwiches(space, a, b);
    let closed = space.closed_sets();
    let mut chain = Vec::with_capacity(n + 1);
    if search(space, &candidates, &closed, n, &mut chain) {
        Some(UFamily::from_chain(&chain).expect("nonempty chain"))
    } else {
        None
    }
}

fn search(
    space: &FiniteGT,
    candidates: &[(PointSet, PointSet)],
    closed: &[PointSet],
    n: usize,
    chain: &mut Vec<(PointSet, PointSet)>,
) -> bool {
    for &(u, f) in candidates {
        if let Some(&(_, prev_f)) = chain.last() {
            if !prev_f.is_subset(u) {
                continue;
            }
        }
        if !chain.iter().all(|&(_, f_i)| space.is_open(u.difference(f_i))) {
            continue;
        }
        chain.push((u, f));
        let done = if chain.len() == n + 1 {
            clause_three(space, chain, closed)
        } else {
            search(space, candidates, closed, n, chain)
        };
        if done {
            return true;
        }
        chain.pop();
    }
    false
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UNormalVerdict {
    pub n: usize,
    pub holds: bool,
    /// First nonempty disjoint closed pair with no family, when `holds` is false.
    pub blocking_pair: Option<(PointSet, PointSet)>,
}

/// Per-`n` verdicts for `n = 0..=n_max`. Says nothing about larger `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UNormalReport {
    pub n_max: usize,
    pub holds_up_to_n_max: bool,
    pub verdicts: Vec<UNormalVerdict>,
}

pub fn is_u_normal(space: &FiniteGT, n_max: usize) -> Result<UNormalReport> {
    if !space.is_strong() {
        return Err(Error::precondition("the space is not strong (X is not open)"));
    }
    let pairs: Vec<(PointSet, PointSet)> = space
        .disjoint_closed_pairs()
        .into_iter()
        .filter(|(a, b)| !a.is_empty() && !b.is_empty())
        .collect();
    let verdicts: Vec<UNormalVerdict> = (0..=n_max)
        .map(|n| {
            let blocking_pair = pairs.iter().copied().find(|&(a, b)| u_family_search(space, a, b, n).is_none());
            UNormalVerdict { n, holds: blocking_pair.is_none(), blocking_pair }
        })
        .collect();
    Ok(UNormalReport { n_max, holds_up_to_n_max: verdicts.iter().all(|v| v.holds), verdicts })
}

/// A family one longer that keeps every existing labeled pair: a new label
/// (one past the largest) at the canonically least sandwich and then the
/// earliest chain position that works. `Ok(None)` if no extension exists.
pub fn extend_u_family(space: &FiniteGT, family: &UFamily, a: PointSet, b: PointSet) -> Result<Option<UFamily>> {
    require_disjoint_closed(space, a, b)?;
    if let Some(clause) = check_u_family(space, family, a, b) {
        return Err(Error::precondition(format!("input family fails clause {clause:?}")));
    }
    let label = family.entries.iter().map(|e| e.label).max().map_or(0, |m| m + 1);
    for (open, closed) in sandwiches(space, a, b) {
        for pos in 0..=family.len() {
            let mut entries = family.entries.clone();
            entries.insert(pos, UEntry { label, open, closed });
            let candidate = UFamily { entries };
            if check_u_family(space, &candidate, a, b).is_none() {
                return Ok(Some(candidate));
            }
        }
    }
    Ok(None)
}
