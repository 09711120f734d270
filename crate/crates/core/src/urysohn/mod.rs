//! Decision procedures and witness constructions for Urysohn-type statements
//! on finite GT spaces.

pub mod decide;
pub mod effective;
pub mod function;
pub mod ladder;
pub mod unormal;

pub use decide::{
    clopen_separator_exists, decide_gul_pair, decide_statement, decide_ul_pair, ordered_partitions, Certificate,
    PairWitness, Statement, Verdict, MAX_EXTENSION_POINTS,
};
pub use effective::{effective_witness, lift_pair_witness, product_effective_witness, EffectiveOutcome, EffectiveWitness};
pub use function::{blocks_continuous, check_continuity_finite, FiniteFunction};
pub use ladder::{
    build_ladder, check_ladder, check_pair_ladder, extend_ladder_step, function_from_ladder,
    function_from_pair_ladder, ladder_from_function, AnyLadder, Ladder, LadderClause, LadderMode, LadderReport,
    LadderStep, LadderViolation, PairLadder,
};
pub use unormal::{
    check_u_family, extend_u_family, is_u_normal, u_family_search, UFamily, UNormalReport, UNormalVerdict,
    DEFAULT_U_NORMAL_MAX,
};

use crate::gt::{FiniteGT, PointSet};
use crate::{Error, Result};

/// `a` and `b` are closed subsets of `X` with empty intersection.
pub(crate) fn require_disjoint_closed(space: &FiniteGT, a: PointSet, b: PointSet) -> Result<()> {
    for s in [a, b] {
        if !s.is_subset(space.whole()) {
            return Err(Error::input(format!("{s} is not a subset of the {}-point ground set", space.points())));
        }
        if !space.is_closed(s) {
            return Err(Error::precondition(format!("{s} is not closed")));
        }
    }
    if !a.is_disjoint(b) {
        return Err(Error::precondition(format!("{a} and {b} intersect")));
    }
    Ok(())
}
