//! Effective normality: a total choice of separating open pairs, and the
//! product constructions that combine factor witnesses.

use std::collections::BTreeMap;

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::decide::{decide_gul_pair, decide_ul_pair, Statement};
use super::function::FiniteFunction;
use super::require_disjoint_closed;
use crate::gt::{projections, rectangle, FiniteGT, PointSet};
use crate::{Error, Result};

/// A map from every disjoint closed pair `⟨A, B⟩` to a disjoint open pair
/// `⟨U, V⟩` with `A ⊆ U` and `B ⊆ V`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct EffectiveWitness {
    table: BTreeMap<(PointSet, PointSet), (PointSet, PointSet)>,
}

impl EffectiveWitness {
    pub fn get(&self, a: PointSet, b: PointSet) -> Option<(PointSet, PointSet)> {
        self.table.get(&(a, b)).copied()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((PointSet, PointSet), (PointSet, PointSet))> + '_ {
        self.table.iter().map(|(k, v)| (*k, *v))
    }

    /// Whether the table covers exactly the disjoint closed pairs of `space`
    /// and every entry is a disjoint open pair containing its key.
    pub fn verify(&self, space: &FiniteGT) -> bool {
        let pairs = space.disjoint_closed_pairs();
        pairs.len() == self.table.len()
            && pairs.iter().all(|&(a, b)| match self.get(a, b) {
                Some((u, v)) => {
                    space.is_open(u) && space.is_open(v) && u.is_disjoint(v) && a.is_subset(u) && b.is_subset(v)
                }
                None => false,
            })
    }
}

#[derive(Serialize)]
struct Row {
    pair: (PointSet, PointSet),
    open: (PointSet, PointSet),
}

impl Serialize for EffectiveWitness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.table.len()))?;
        for (pair, open) in self.iter() {
            seq.serialize_element(&Row { pair, open })?;
        }
        seq.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum EffectiveOutcome {
    Witness { table: EffectiveWitness },
    NotNormal { blocking: (PointSet, PointSet) },
}

/// The canonical effective-normality witness: `⟨∅, X⟩` when `A = ∅`,
/// `⟨X, ∅⟩` when `B = ∅`, otherwise the least separating open pair.
pub fn effective_witness(space: &FiniteGT) -> Result<EffectiveOutcome> {
    if !space.is_strong() {
        return Err(Error::precondition("the space is not strong (X is not open)"));
    }
    let x = space.whole();
    let mut table = BTreeMap::new();
    for (a, b) in space.disjoint_closed_pairs() {
        let pair = if a.is_empty() {
            (PointSet::EMPTY, x)
        } else if b.is_empty() {
            (x, PointSet::EMPTY)
        } else {
            match space.separating_open_pair(a, b) {
                Some(p) => p,
                None => return Ok(EffectiveOutcome::NotNormal { blocking: (a, b) }),
            }
        };
        table.insert((a, b), pair);
    }
    Ok(EffectiveOutcome::Witness { table: EffectiveWitness { table } })
}

/// Splits a product closed pair into factor pairs and picks the first
/// coordinate whose factors are disjoint.
fn split(a: PointSet, b: PointSet, n2: usize) -> (usize, (PointSet, PointSet)) {
    let (a1, a2) = projections(a, n2);
    let (b1, b2) = projections(b, n2);
    if a1.is_disjoint(b1) {
        (1, (a1, b1))
    } else {
        (2, (a2, b2))
    }
}

/// Effective witness for the product GT from factor witnesses:
/// `⟨U × X2, V × X2⟩` from the first factor when the first projections are
/// disjoint, `⟨X1 × U, X1 × V⟩` from the second otherwise.
pub fn product_effective_witness(
    s1: &FiniteGT,
    w1: &EffectiveWitness,
    s2: &FiniteGT,
    w2: &EffectiveWitness,
) -> Result<EffectiveWitness> {
    let product = s1.product(s2)?;
    let n2 = s2.points();
    let mut table = BTreeMap::new();
    for (a, b) in product.disjoint_closed_pairs() {
        let (coord, (fa, fb)) = split(a, b, n2);
        let (x1, x2) = (s1.whole(), s2.whole());
        let w = if coord == 1 { w1 } else { w2 };
        let (u, v) = w
            .get(fa, fb)
            .ok_or_else(|| Error::precondition(format!("factor witness has no entry for ({fa}, {fb})")))?;
        let pair = if coord == 1 {
            (rectangle(u, x2, n2), rectangle(v, x2, n2))
        } else {
            (rectangle(x1, u, n2), rectangle(x1, v, n2))
        };
        table.insert((a, b), pair);
    }
    Ok(EffectiveWitness { table })
}

/// A UL or GUL witness on the product lifted from a factor:
/// `g(x, y) = f(x)` (or `f(y)`), where `f` separates the projections.
/// `Ok(None)` when that factor has no witness.
pub fn lift_pair_witness(
    s1: &FiniteGT,
    s2: &FiniteGT,
    a: PointSet,
    b: PointSet,
    statement: Statement,
) -> Result<Option<FiniteFunction>> {
    let product = s1.product(s2)?;
    require_disjoint_closed(&product, a, b)?;
    let n2 = s2.points();
    let (coord, (fa, fb)) = split(a, b, n2);
    let factor = if coord == 1 { s1 } else { s2 };
    let f = match statement {
        Statement::Ul => decide_ul_pair(factor, fa, fb)?,
        Statement::Gul => decide_gul_pair(factor, fa, fb)?,
        other => return Err(Error::input(format!("{other} is not a separation statement"))),
    };
    Ok(f.map(|f| {
        FiniteFunction::new(product.whole().points().map(|p| {
            let q = if coord == 1 { p / n2 } else { p % n2 };
            (p, f.value(q).expect("factor function is total").clone())
        }))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::urysohn::check_continuity_finite;

    fn set(p: &[usize]) -> PointSet {
        PointSet::from_points(p.iter().copied())
    }

    fn clopen_partition() -> FiniteGT {
        FiniteGT::from_lists(4, &[&[], &[0, 1], &[2, 3], &[0, 1, 2, 3]]).unwrap()
    }

    fn non_normal() -> FiniteGT {
        FiniteGT::from_lists(3, &[&[], &[0, 1], &[1, 2], &[0, 1, 2]]).unwrap()
    }

    fn table(x: &FiniteGT) -> EffectiveWitness {
        match effective_witness(x).unwrap() {
            EffectiveOutcome::Witness { table } => table,
            other => panic!("expected a witness, got {other:?}"),
        }
    }

    #[test]
    fn clopen_partition_table() {
        let x = clopen_partition();
        let w = table(&x);
        assert_eq!(w.get(set(&[0, 1]), set(&[2, 3])), Some((set(&[0, 1]), set(&[2, 3]))));
        assert_eq!(w.get(PointSet::EMPTY, set(&[2, 3])), Some((PointSet::EMPTY, x.whole())));
        assert!(w.verify(&x));
    }

    #[test]
    fn non_normal_has_no_table() {
        assert_eq!(
            effective_witness(&non_normal()).unwrap(),
            EffectiveOutcome::NotNormal { blocking: (set(&[0]), set(&[2])) }
        );
    }

    #[test]
    fn product_table_is_valid() {
        let x = clopen_partition();
        let y = FiniteGT::from_lists(2, &[&[], &[0], &[1], &[0, 1]]).unwrap();
        let w = product_effective_witness(&x, &table(&x), &y, &table(&y)).unwrap();
        assert!(w.verify(&x.product(&y).unwrap()));
    }

    #[test]
    fn lifted_witnesses_are_continuous() {
        let x = clopen_partition();
        let y = FiniteGT::from_lists(2, &[&[], &[0], &[1], &[0, 1]]).unwrap();
        let p = x.product(&y).unwrap();
        for (a, b) in p.disjoint_closed_pairs() {
            for st in [Statement::Ul, Statement::Gul] {
                let g = lift_pair_witness(&x, &y, a, b, st).unwrap().unwrap();
                assert!(check_continuity_finite(&g, &p, st.target()));
                assert!(a.is_subset(g.preimage(|v| *v == crate::rational::zero())));
                assert!(b.is_subset(g.preimage(|v| *v == crate::rational::one())));
            }
        }
    }
}
