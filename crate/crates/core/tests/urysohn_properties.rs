use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gtsep::gt::{census, random_strong_gt};
use gtsep::rational::{dyadics, frac, int, one, zero};
use gtsep::urysohn::{
    build_ladder, check_continuity_finite, check_ladder, check_pair_ladder, clopen_separator_exists,
    decide_gul_pair, decide_statement, decide_ul_pair, effective_witness, function_from_ladder,
    function_from_pair_ladder, is_u_normal, ladder_from_function, AnyLadder, EffectiveOutcome, FiniteFunction,
    LadderMode, LadderStep, Statement,
};
use gtsep::{FiniteGT, PointSet, Rational, Target};

fn strong_gt(max_points: usize) -> impl Strategy<Value = FiniteGT> {
    (1usize..=max_points, any::<u64>(), 0.05f64..0.7)
        .prop_map(|(n, seed, d)| random_strong_gt(n, d, &mut ChaCha8Rng::seed_from_u64(seed)))
}

fn space_and_function() -> impl Strategy<Value = (FiniteGT, FiniteFunction)> {
    strong_gt(4).prop_flat_map(|x| {
        let n = x.points();
        prop::collection::vec(-3i64..4, n).prop_map(move |vals| {
            (x.clone(), FiniteFunction::on_points(vals.into_iter().map(|v| frac(v, 2)).collect()))
        })
    })
}

/// Preimages of rays or bounded intervals with endpoints at, between and
/// beyond the attained values.
fn continuity_oracle(x: &FiniteGT, f: &FiniteFunction, target: Target) -> bool {
    let mut vals: Vec<Rational> = f.iter().map(|(_, v)| v.clone()).collect();
    vals.sort();
    vals.dedup();
    let mut cuts: Vec<Rational> = Vec::new();
    if let (Some(lo), Some(hi)) = (vals.first(), vals.last()) {
        cuts.push(lo - one());
        cuts.push(hi + one());
        for w in vals.windows(2) {
            cuts.push((&w[0] + &w[1]) / int(2));
        }
    }
    let pre = |lo: Option<&Rational>, hi: Option<&Rational>| {
        f.preimage(|v| lo.map_or(true, |l| v > l) && hi.map_or(true, |h| v < h))
    };
    match target {
        Target::Gtaun => cuts.iter().all(|q| x.is_open(pre(None, Some(q))) && x.is_open(pre(Some(q), None))),
        Target::Taun => cuts.iter().all(|p| cuts.iter().filter(|q| p < *q).all(|q| x.is_open(pre(Some(p), Some(q))))),
    }
}

fn separates(f: &FiniteFunction, a: PointSet, b: PointSet) -> bool {
    a.points().all(|p| *f.value(p).unwrap() == zero()) && b.points().all(|p| *f.value(p).unwrap() == one())
}

proptest! {
    #[test]
    fn block_criterion_matches_interval_oracle((x, f) in space_and_function()) {
        for t in [Target::Taun, Target::Gtaun] {
            prop_assert_eq!(check_continuity_finite(&f, &x, t), continuity_oracle(&x, &f, t), "{:?}", t);
        }
        if check_continuity_finite(&f, &x, Target::Taun) {
            prop_assert!(check_continuity_finite(&f, &x, Target::Gtaun));
        }
    }

    #[test]
    fn pair_witnesses_separate_continuously(x in strong_gt(4)) {
        for (a, b) in x.disjoint_closed_pairs() {
            let gul = decide_gul_pair(&x, a, b).unwrap();
            prop_assert_eq!(gul.is_some(), clopen_separator_exists(&x, a, b));
            if let Some(f) = &gul {
                prop_assert!(check_continuity_finite(f, &x, Target::Gtaun) && separates(f, a, b));
            }
            let ul = decide_ul_pair(&x, a, b).unwrap();
            if let Some(f) = &ul {
                prop_assert!(check_continuity_finite(f, &x, Target::Taun) && separates(f, a, b));
                prop_assert!(gul.is_some());
            }
        }
    }

    #[test]
    fn ladders_round_trip_through_functions(x in strong_gt(4)) {
        let indices = dyadics(2);
        for (a, b) in x.disjoint_closed_pairs() {
            if let Some(f) = decide_gul_pair(&x, a, b).unwrap() {
                let AnyLadder::Single(l) = ladder_from_function(&x, &f, LadderMode::Single, &indices).unwrap() else {
                    panic!("single mode");
                };
                prop_assert!(check_ladder(&x, &l, a, b).is_complete());
                let g = function_from_ladder(&x, &l, b).unwrap();
                prop_assert!(check_continuity_finite(&g, &x, Target::Gtaun) && separates(&g, a, b));
                prop_assert_eq!(g, f);
            }
            if let Some(f) = decide_ul_pair(&x, a, b).unwrap() {
                let AnyLadder::Pair(l) = ladder_from_function(&x, &f, LadderMode::Pair, &indices).unwrap() else {
                    panic!("pair mode");
                };
                prop_assert!(check_pair_ladder(&x, &l, a, b).is_complete());
                let g = function_from_pair_ladder(&x, &l, b).unwrap();
                prop_assert!(check_continuity_finite(&g, &x, Target::Taun) && separates(&g, a, b));
            }
        }
    }

    #[test]
    fn effective_witness_implies_gul(x in strong_gt(4)) {
        let gul = decide_statement(&x, Statement::Gul).unwrap().holds;
        match effective_witness(&x).unwrap() {
            EffectiveOutcome::Witness { table } => {
                prop_assert!(table.verify(&x));
                prop_assert!(gul);
            }
            EffectiveOutcome::NotNormal { .. } => prop_assert!(!x.is_normal()),
        }
    }

    #[test]
    fn u_normality_matches_normality(x in strong_gt(3)) {
        let r = is_u_normal(&x, 2).unwrap();
        prop_assert_eq!(r.holds_up_to_n_max, x.is_normal());
    }
}

#[test]
fn ladder_extension_succeeds_on_normal_census_spaces() {
    for n in 0..=3 {
        for x in census(n).unwrap().iter().filter(|x| x.is_normal()) {
            for (a, b) in x.disjoint_closed_pairs() {
                for k in 1..=5 {
                    match build_ladder(x, a, b, k).unwrap() {
                        LadderStep::Extended { ladder } => assert!(check_ladder(x, &ladder, a, b).is_valid()),
                        other => panic!("{x:?} ({a}, {b}) level {k}: {other:?}"),
                    }
                }
            }
        }
    }
}

#[test]
fn blocked_extension_on_a_non_normal_space() {
    let x = FiniteGT::from_lists(3, &[&[], &[0, 1], &[1, 2], &[0, 1, 2]]).unwrap();
    let (a, b) = (PointSet::singleton(0), PointSet::singleton(2));
    assert_eq!(
        build_ladder(&x, a, b, 1).unwrap(),
        LadderStep::NoExtension { blocking: (a, b) }
    );
}
