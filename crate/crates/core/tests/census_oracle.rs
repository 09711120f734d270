use std::collections::BTreeSet;

use gtsep::gt::{census, census_sequential, enumerate_strong_gts};
use gtsep::PointSet;

/// Every union-closed family on `n` points containing ∅ and X, by filtering
/// all families of proper nonempty subsets. Families as sorted bitmask lists.
fn brute_force(n: usize) -> BTreeSet<Vec<u64>> {
    let full: u64 = (1 << n) - 1;
    let proper: Vec<u64> = if n == 0 { Vec::new() } else { (1..full).collect() };
    let mut out = BTreeSet::new();
    for mask in 0u64..1 << proper.len() {
        let mut fam: Vec<u64> = vec![0, full];
        fam.extend(proper.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, s)| *s));
        if fam.iter().all(|x| fam.iter().all(|y| fam.contains(&(x | y)))) {
            fam.sort();
            fam.dedup();
            out.insert(fam);
        }
    }
    out
}

fn as_bitmasks(opens: &[PointSet]) -> Vec<u64> {
    let mut v: Vec<u64> = opens.iter().map(|s| s.bits()).collect();
    v.sort();
    v
}

#[test]
fn census_matches_brute_force_up_to_four_points() {
    for n in 0..=4 {
        let oracle = brute_force(n);
        let got: Vec<Vec<u64>> = census(n).unwrap().iter().map(|x| as_bitmasks(x.opens())).collect();
        let distinct: BTreeSet<Vec<u64>> = got.iter().cloned().collect();
        assert_eq!(distinct.len(), got.len(), "duplicates at n = {n}");
        assert_eq!(distinct, oracle, "n = {n}");
    }
}

#[test]
fn known_counts() {
    let counts: Vec<usize> = (0..=4).map(|n| enumerate_strong_gts(n).unwrap().count()).collect();
    assert_eq!(counts, vec![1, 1, 4, 45, 2271]);
}

#[test]
fn stream_is_reproducible() {
    assert_eq!(census_sequential(3).unwrap(), census_sequential(3).unwrap());
    assert_eq!(census(4).unwrap(), census_sequential(4).unwrap());
}
