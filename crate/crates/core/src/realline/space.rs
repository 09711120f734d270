//! The generalized topologies `gτ_n` and `gτ_s` on ℝ by their finite catalogs
//! of set forms.
//!
//! `gτ_n` opens: `∅`, `ℝ`, `(-∞,a)`, `(a,∞)`, `(-∞,a) ∪ (b,∞)` with `a ≤ b`.
//! `gτ_s` adds `[a,∞)` and `(-∞,a) ∪ [b,∞)`. Closed sets are complements.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::set::{Cut, Interval, SymbolicSet};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LineSpace {
    Gtn,
    Gts,
}

impl fmt::Display for LineSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LineSpace::Gtn => "gtn",
            LineSpace::Gts => "gts",
        })
    }
}

impl FromStr for LineSpace {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gtn" => Ok(LineSpace::Gtn),
            "gts" => Ok(LineSpace::Gts),
            other => Err(Error::input(format!("unknown space `{other}` (expected gtn|gts)"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Classification {
    Open,
    Closed,
    Clopen,
    Neither,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Open => "open",
            Classification::Closed => "closed",
            Classification::Clopen => "clopen",
            Classification::Neither => "neither",
        })
    }
}

fn is_lower_ray(c: &Interval) -> bool {
    matches!((c.lo(), c.hi()), (Cut::NegInf, Cut::Below(_)))
}

fn is_upper_ray(c: &Interval, space: LineSpace) -> bool {
    match (c.lo(), c.hi()) {
        (Cut::Above(_), Cut::PosInf) => true,
        (Cut::Below(_), Cut::PosInf) => space == LineSpace::Gts,
        _ => false,
    }
}

impl LineSpace {
    pub fn is_open(self, s: &SymbolicSet) -> bool {
        match s.components() {
            [] => true,
            [c] => s.is_all() || is_lower_ray(c) || is_upper_ray(c, self),
            [l, u] => is_lower_ray(l) && is_upper_ray(u, self),
            _ => false,
        }
    }

    pub fn is_closed(self, s: &SymbolicSet) -> bool {
        self.is_open(&s.complement())
    }

    pub fn classify(self, s: &SymbolicSet) -> Classification {
        match (self.is_open(s), self.is_closed(s)) {
            (true, true) => Classification::Clopen,
            (true, false) => Classification::Open,
            (false, true) => Classification::Closed,
            (false, false) => Classification::Neither,
        }
    }

    /// Smallest closed superset. In `gτ_n` this is the closed convex hull; in
    /// `gτ_s` the hull closed on the left only, since `[a,b)` and `(-∞,b)`
    /// are closed there.
    pub fn closure(self, s: &SymbolicSet) -> SymbolicSet {
        let (Some(lo), Some(hi)) = (s.lo(), s.hi()) else {
            return SymbolicSet::empty();
        };
        let lo = match lo {
            Cut::Above(r) | Cut::Below(r) => Cut::Below(r.clone()),
            other => other.clone(),
        };
        let hi = match (self, hi) {
            (LineSpace::Gtn, Cut::Above(r) | Cut::Below(r)) => Cut::Above(r.clone()),
            (_, other) => other.clone(),
        };
        SymbolicSet::from_intervals(Interval::new(lo, hi))
    }

    /// Largest open subset: the complement of the closure of the complement.
    pub fn interior(self, s: &SymbolicSet) -> SymbolicSet {
        self.closure(&s.complement()).complement()
    }
}

pub fn classify(s: &SymbolicSet, space: LineSpace) -> Classification {
    space.classify(s)
}

pub fn closure_sym(s: &SymbolicSet, space: LineSpace) -> SymbolicSet {
    space.closure(s)
}
