//! Fixed enumerations of the rationals.
//!
//! All of ℚ: `ψ(0) = 0`, `ψ(2k-1) = c_k`, `ψ(2k) = -c_k`, where
//! `c_1, c_2, … = 1, 1/2, 2, 1/3, 3/2, 2/3, 3, …` is the Calkin–Wilf
//! sequence (breadth-first order of the Calkin–Wilf tree).
//! ℚ ∩ (0,1): reduced fractions by denominator, then numerator.
//!
//! The depth of a positive rational is the same in the Calkin–Wilf and
//! Stern–Brocot trees, and any interval holds a unique rational of least
//! Stern–Brocot depth (its simplest rational). So the least Calkin–Wilf
//! index in an interval is attained at the simplest rational there, which
//! a continued-fraction recursion finds.

use num::bigint::{BigInt, BigUint};
use num::{Integer, One, Signed, ToPrimitive, Zero};

use super::set::{Cut, Interval};
use crate::rational::{floor, int, one, zero};
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumerationVariant {
    /// ψ: ω → ℚ.
    AllRationals,
    /// ω → ℚ ∩ (0,1).
    UnitInterval,
}

/// A deterministic bijection between indices and rationals.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RationalEnumeration {
    pub variant: EnumerationVariant,
}

impl RationalEnumeration {
    pub const ALL: RationalEnumeration = RationalEnumeration { variant: EnumerationVariant::AllRationals };
    pub const UNIT: RationalEnumeration = RationalEnumeration { variant: EnumerationVariant::UnitInterval };

    pub fn nth(&self, i: &BigUint) -> Rational {
        match self.variant {
            EnumerationVariant::AllRationals => psi(i),
            EnumerationVariant::UnitInterval => unit_nth(i.to_u64().expect("index fits in u64")),
        }
    }

    /// Index of `q`, or `None` if `q` is outside the enumerated range.
    pub fn index_of(&self, q: &Rational) -> Option<BigUint> {
        match self.variant {
            EnumerationVariant::AllRationals => Some(psi_index(q)),
            EnumerationVariant::UnitInterval => unit_index(q).map(BigUint::from),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = Rational> + '_ {
        (0u64..).map(move |i| self.nth(&BigUint::from(i)))
    }
}

/// `k`-th Calkin–Wilf rational, `k ≥ 1`: follow the bits of `k` after the
/// leading one from the root `1/1` (0 = left child `a/(a+b)`, 1 = right
/// child `(a+b)/b`).
pub fn calkin_wilf(k: &BigUint) -> Rational {
    assert!(!k.is_zero(), "Calkin-Wilf indices start at 1");
    let (mut a, mut b) = (BigInt::one(), BigInt::one());
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        if k.bit(i) {
            a = &a + &b;
        } else {
            b = &a + &b;
        }
    }
    Rational::new(a, b)
}

/// Calkin–Wilf index of a positive rational, walking up the tree one run of
/// equal moves at a time.
pub fn calkin_wilf_index(q: &Rational) -> BigUint {
    assert!(q.is_positive(), "Calkin-Wilf indices are for positive rationals");
    let (mut p, mut d) = (q.numer().magnitude().clone(), q.denom().magnitude().clone());
    let mut runs: Vec<(bool, BigUint)> = Vec::new();
    while !(p.is_one() && d.is_one()) {
        if p < d {
            let k = (&d - 1u32) / &p;
            d -= &k * &p;
            runs.push((false, k));
        } else {
            let k = (&p - 1u32) / &d;
            p -= &k * &d;
            runs.push((true, k));
        }
    }
    let mut index = BigUint::one();
    for (right, k) in runs.into_iter().rev() {
        let k = k.to_u64().expect("run length fits in u64");
        index <<= k;
        if right {
            index |= (BigUint::one() << k) - 1u32;
        }
    }
    index
}

pub fn psi(i: &BigUint) -> Rational {
    if i.is_zero() {
        return zero();
    }
    let (k, r) = (i + 1u32).div_rem(&BigUint::from(2u32));
    let c = calkin_wilf(&k);
    if r.is_zero() {
        c
    } else {
        -c
    }
}

pub fn psi_index(q: &Rational) -> BigUint {
    if q.is_zero() {
        return BigUint::zero();
    }
    let k = calkin_wilf_index(&q.abs());
    if q.is_positive() {
        2u32 * k - 1u32
    } else {
        2u32 * k
    }
}

fn unit_nth(i: u64) -> Rational {
    let mut left = i;
    let mut d: u64 = 2;
    loop {
        for n in 1..d {
            if n.gcd(&d) == 1 {
                if left == 0 {
                    return Rational::new(BigInt::from(n), BigInt::from(d));
                }
                left -= 1;
            }
        }
        d += 1;
    }
}

fn unit_index(q: &Rational) -> Option<u64> {
    if *q <= zero() || *q >= one() {
        return None;
    }
    let n = q.numer().to_u64()?;
    let d = q.denom().to_u64()?;
    let mut idx = 0u64;
    for e in 2..d {
        idx += (1..e).filter(|m| m.gcd(&e) == 1).count() as u64;
    }
    idx += (1..n).filter(|m| m.gcd(&d) == 1).count() as u64;
    Some(idx)
}

/// A one-sided bound: value and whether it is included.
#[derive(Clone, Debug)]
struct Bound {
    value: Rational,
    closed: bool,
}

fn above_lower(x: &Rational, lo: &Bound) -> bool {
    if lo.closed {
        *x >= lo.value
    } else {
        *x > lo.value
    }
}

fn below_upper(x: &Rational, hi: &Option<Bound>) -> bool {
    match hi {
        None => true,
        Some(h) if h.closed => *x <= h.value,
        Some(h) => *x < h.value,
    }
}

/// Simplest rational in a nonempty interval of nonnegative reals whose lower
/// bound excludes 0 or is positive.
fn simplest_positive(lo: Bound, hi: Option<Bound>) -> Rational {
    let n = if lo.closed && lo.value.is_integer() { lo.value.clone() } else { floor(&lo.value) + one() };
    if below_upper(&n, &hi) {
        return n.max(one());
    }
    // no integer inside: shift into (0,1) and recurse on reciprocals
    let base = floor(&lo.value);
    let h = hi.expect("bounded, since an integer would otherwise fit");
    let shifted_lo = &lo.value - &base;
    let shifted_hi = &h.value - &base;
    let new_lo = Bound { value: one() / shifted_hi, closed: h.closed };
    let new_hi = if shifted_lo.is_zero() {
        None
    } else {
        Some(Bound { value: one() / shifted_lo, closed: lo.closed })
    };
    base + one() / simplest_positive(new_lo, new_hi)
}

/// Least Calkin–Wilf index rational among the positive members of
/// `interval`, if there are any.
fn least_positive(interval: &Interval) -> Option<Rational> {
    let lo = match interval.lo() {
        Cut::NegInf => Bound { value: zero(), closed: false },
        Cut::Below(r) => Bound { value: r.clone(), closed: true },
        Cut::Above(r) => Bound { value: r.clone(), closed: false },
        Cut::PosInf => return None,
    };
    let lo = if lo.value < zero() || (lo.value.is_zero() && lo.closed) {
        Bound { value: zero(), closed: false }
    } else {
        lo
    };
    let hi = match interval.hi() {
        Cut::PosInf => None,
        Cut::Below(r) => Some(Bound { value: r.clone(), closed: false }),
        Cut::Above(r) => Some(Bound { value: r.clone(), closed: true }),
        Cut::NegInf => return None,
    };
    let probe = match &hi {
        None => true,
        Some(h) => h.value > lo.value || (h.value == lo.value && h.closed && lo.closed),
    };
    if !probe {
        return None;
    }
    let q = simplest_positive(lo.clone(), hi.clone());
    debug_assert!(above_lower(&q, &lo) && below_upper(&q, &hi));
    Some(q)
}

/// The rational of least ψ-index in `interval`, with its index.
pub fn least_psi_in(interval: &Interval) -> (BigUint, Rational) {
    if interval.contains(&zero()) {
        return (BigUint::zero(), zero());
    }
    let pos = least_positive(interval);
    let neg = least_positive(&interval.affine(&int(-1), &zero())).map(|q| -q);
    let best = [pos, neg].into_iter().flatten().map(|q| (psi_index(&q), q)).min_by(|a, b| a.0.cmp(&b.0));
    best.expect("a nonempty interval contains a rational")
}

/// Least ψ-index by scanning ψ(0), ψ(1), …; the test oracle for [`least_psi_in`].
pub fn scan_least_psi(interval: &Interval, limit: u64) -> Option<(BigUint, Rational)> {
    (0..limit).map(BigUint::from).map(|i| (i.clone(), psi(&i))).find(|(_, q)| interval.contains(q))
}
