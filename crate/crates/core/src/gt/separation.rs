use serde::Serialize;

use super::{FiniteGT, PointSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationProfile {
    pub t0: bool,
    pub t1: bool,
    pub t2: bool,
    pub normal: bool,
}

impl FiniteGT {
    fn exists_open(&self, pred: impl Fn(PointSet) -> bool) -> bool {
        self.opens().iter().any(|&u| pred(u))
    }

    /// Some disjoint open pair `U ⊇ a`, `V ⊇ b`, least `U` first then least `V`.
    pub fn separating_open_pair(&self, a: PointSet, b: PointSet) -> Option<(PointSet, PointSet)> {
        for &u in self.opens().iter().filter(|u| a.is_subset(**u)) {
            if !b.is_subset(self.largest_open_disjoint_from(u)) {
                continue;
            }
            if let Some(&v) = self.opens().iter().find(|v| b.is_subset(**v) && v.is_disjoint(u)) {
                return Some((u, v));
            }
        }
        None
    }

    /// The first disjoint closed pair (canonical order) with no disjoint open
    /// supersets, if any.
    pub fn normality_obstruction(&self) -> Option<(PointSet, PointSet)> {
        self.disjoint_closed_pairs().into_iter().find(|&(a, b)| self.separating_open_pair(a, b).is_none())
    }

    pub fn is_normal(&self) -> bool {
        self.normality_obstruction().is_none()
    }

    pub fn separation_profile(&self) -> SeparationProfile {
        let n = self.points();
        let pairs = || (0..n).flat_map(move |x| (0..n).filter(move |&y| y != x).map(move |y| (x, y)));
        let t0 = pairs().filter(|(x, y)| x < y).all(|(x, y)| {
            self.exists_open(|u| u.contains(x) != u.contains(y))
        });
        let t1 = pairs().all(|(x, y)| self.exists_open(|u| u.contains(x) && !u.contains(y)));
        let t2 = pairs().filter(|(x, y)| x < y).all(|(x, y)| {
            let nx = PointSet::singleton(x);
            let ny = PointSet::singleton(y);
            self.separating_open_pair(nx, ny).is_some()
        });
        SeparationProfile { t0, t1, t2, normal: self.is_normal() }
    }
}
