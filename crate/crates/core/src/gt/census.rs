//! Exhaustive enumeration of strong GTs on `n` labeled points.
//!
//! Proper nonempty subsets are decided in canonical order. When a subset
//! comes up, all of its proper subsets are already decided, so it is forced
//! into the family exactly when it is the union of included proper subsets,
//! and free otherwise. Every leaf of that search is a distinct union-closed
//! family and there are no dead ends. Free subsets are tried "excluded"
//! first; the resulting depth-first order is the canonical census order.

use rand::Rng;

use super::{FiniteGT, PointSet};
use crate::{Error, Result};

/// Census size accepted without a warning.
pub const DEFAULT_MAX_POINTS: usize = 4;
/// Census size accepted at all.
pub const HARD_MAX_POINTS: usize = 5;

fn check_size(n: usize) -> Result<()> {
    if n > HARD_MAX_POINTS {
        return Err(Error::Resource(format!(
            "census on {n} points is too large (maximum {HARD_MAX_POINTS})"
        )));
    }
    if n > DEFAULT_MAX_POINTS {
        log::warn!("census on {n} points enumerates over a million spaces");
    }
    Ok(())
}

#[derive(Clone, Copy)]
struct Decision {
    include: bool,
    free: bool,
}

/// Deterministic stream of every strong GT on `n` points, each exactly once.
pub struct Census {
    n: usize,
    subsets: Vec<PointSet>,
    prefix: Vec<bool>,
    included: Vec<bool>,
    stack: Vec<Decision>,
    started: bool,
    done: bool,
}

impl Census {
    fn with_prefix(n: usize, prefix: Vec<bool>) -> Self {
        let full = PointSet::full(n);
        let mut subsets: Vec<PointSet> =
            full.subsets().filter(|s| !s.is_empty() && *s != full).collect();
        subsets.sort();
        Census {
            n,
            subsets,
            prefix,
            included: vec![false; 1usize << n],
            stack: Vec::new(),
            started: false,
            done: false,
        }
    }

    fn forced(&self, s: PointSet) -> bool {
        let cover = s
            .subsets()
            .filter(|t| !t.is_empty() && *t != s && self.included[t.bits() as usize])
            .fold(PointSet::EMPTY, |acc, t| acc.union(t));
        cover == s
    }

    fn push(&mut self, d: Decision) {
        let s = self.subsets[self.stack.len()];
        self.included[s.bits() as usize] = d.include;
        self.stack.push(d);
    }

    fn pop(&mut self) -> Option<Decision> {
        let d = self.stack.pop()?;
        let s = self.subsets[self.stack.len()];
        self.included[s.bits() as usize] = false;
        Some(d)
    }

    /// Fills the remaining positions; false if a fixed prefix choice
    /// contradicts a forced inclusion.
    fn descend(&mut self) -> bool {
        while self.stack.len() < self.subsets.len() {
            let i = self.stack.len();
            let s = self.subsets[i];
            let forced = self.forced(s);
            if i < self.prefix.len() {
                let want = self.prefix[i];
                if forced && !want {
                    return false;
                }
                self.push(Decision { include: want, free: false });
            } else if forced {
                self.push(Decision { include: true, free: false });
            } else {
                self.push(Decision { include: false, free: true });
            }
        }
        true
    }

    /// Flips the deepest free exclusion to an inclusion.
    fn backtrack(&mut self) -> bool {
        while let Some(d) = self.pop() {
            if d.free && !d.include {
                self.push(Decision { include: true, free: true });
                return true;
            }
        }
        false
    }

    fn emit(&self) -> FiniteGT {
        let mut opens = vec![PointSet::EMPTY];
        opens.extend(self.subsets.iter().copied().filter(|s| self.included[s.bits() as usize]));
        if self.n > 0 {
            opens.push(PointSet::full(self.n));
        }
        FiniteGT::from_canonical(self.n, opens)
    }
}

impl Iterator for Census {
    type Item = FiniteGT;

    fn next(&mut self) -> Option<FiniteGT> {
        if self.done {
            return None;
        }
        loop {
            let ok = if !self.started {
                self.started = true;
                self.descend()
            } else if self.backtrack() {
                self.descend()
            } else {
                self.done = true;
                return None;
            };
            if ok {
                return Some(self.emit());
            }
        }
    }
}

/// Streams every strong GT on `n` points in canonical order.
pub fn enumerate_strong_gts(n: usize) -> Result<Census> {
    check_size(n)?;
    Ok(Census::with_prefix(n, Vec::new()))
}

fn prefixes(n: usize) -> Vec<Vec<bool>> {
    // for n ≥ 2 the first `n` canonical subsets are the singletons, which are
    // never forced; for n = 1 the only singleton is the whole set
    let depth = if n >= 2 { n.min(3) } else { 0 };
    (0..1u32 << depth)
        .map(|code| (0..depth).map(|i| code >> (depth - 1 - i) & 1 == 1).collect())
        .collect()
}

/// Collects the census, splitting the search by prefix across workers and
/// concatenating in prefix order.
pub fn census(n: usize) -> Result<Vec<FiniteGT>> {
    check_size(n)?;
    let parts = crate::par::map(&prefixes(n), |p| Census::with_prefix(n, p.clone()).collect::<Vec<_>>());
    Ok(parts.into_iter().flatten().collect())
}

/// Single-threaded [`census`].
pub fn census_sequential(n: usize) -> Result<Vec<FiniteGT>> {
    enumerate_strong_gts(n).map(Iterator::collect)
}

/// A random strong GT: the union-closure of `{X}` plus each proper nonempty
/// subset included independently with probability `density`.
pub fn random_strong_gt<R: Rng + ?Sized>(n: usize, density: f64, rng: &mut R) -> FiniteGT {
    let full = PointSet::full(n);
    let mut gens = vec![full];
    for s in full.subsets() {
        if !s.is_empty() && s != full && rng.gen_bool(density) {
            gens.push(s);
        }
    }
    FiniteGT::union_closure(n, gens).expect("subsets of the ground set")
}
