//! JSON document format for finite spaces: `{"points": n, "open_sets": [[..], ..]}`.

use serde::{Deserialize, Serialize};

use super::{FiniteGT, PointSet};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceFile {
    pub points: usize,
    pub open_sets: Vec<Vec<usize>>,
}

impl SpaceFile {
    /// The listed family, after range checks. Order and duplicates are ignored.
    pub fn family(&self) -> Result<Vec<PointSet>> {
        if self.points > super::MAX_POINTS {
            return Err(Error::Resource(format!("{} points exceeds the maximum", self.points)));
        }
        self.open_sets
            .iter()
            .map(|set| {
                if let Some(&p) = set.iter().find(|&&p| p >= self.points) {
                    Err(Error::input(format!("point {p} out of range for {} points", self.points)))
                } else {
                    Ok(PointSet::from_points(set.iter().copied()))
                }
            })
            .collect()
    }

    pub fn to_space(&self) -> Result<FiniteGT> {
        FiniteGT::new(self.points, self.family()?)
    }
}

impl From<&FiniteGT> for SpaceFile {
    fn from(x: &FiniteGT) -> Self {
        SpaceFile {
            points: x.points(),
            open_sets: x.opens().iter().map(|s| s.points().collect()).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn input_order_is_irrelevant_output_is_canonical() {
        let f = SpaceFile { points: 3, open_sets: vec![vec![2, 1], vec![0, 1, 2], vec![], vec![1, 0], vec![0, 1]] };
        let x = f.to_space().unwrap();
        let back = SpaceFile::from(&x);
        assert_eq!(back.open_sets, vec![vec![], vec![0, 1], vec![1, 2], vec![0, 1, 2]]);
    }

    #[test]
    fn out_of_range_point() {
        let f = SpaceFile { points: 2, open_sets: vec![vec![], vec![2]] };
        assert!(matches!(f.to_space(), Err(Error::Input(_))));
    }
}
