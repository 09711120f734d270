//! Exact rationals and their textual form.

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `["-"] digits ["/" digits]`. The whole string must match.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = num.strip_prefix('-').unwrap_or(num);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::input(format!("malformed rational `{s}`")));
    }
    let n: BigInt = num.parse().map_err(|_| Error::input(format!("malformed rational `{s}`")))?;
    let d: BigInt = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::input(format!("malformed rational `{s}`")));
            }
            d.parse().map_err(|_| Error::input(format!("malformed rational `{s}`")))?
        }
    };
    if d.is_zero() {
        return Err(Error::input(format!("zero denominator in `{s}`")));
    }
    Ok(Rational::new(n, d))
}

/// Reduced `p/q` text, or `p` for integers. Never a decimal.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Floor as an integer-valued rational.
pub fn floor(r: &Rational) -> Rational {
    r.floor()
}

pub fn abs(r: &Rational) -> Rational {
    r.abs()
}

pub fn midpoint(a: &Rational, b: &Rational) -> Rational {
    (a + b) / int(2)
}

/// Dyadic rationals `j / 2^level` for `0 < j < 2^level`, ascending.
pub fn dyadics(level: u32) -> Vec<Rational> {
    let den = BigInt::from(1u64) << level;
    let count: u64 = 1u64 << level;
    (1..count).map(|j| Rational::new(BigInt::from(j), den.clone())).collect()
}

/// Dyadics up to `level`, ordered level by level (1/2, 1/4, 3/4, 1/8, ...).
pub fn dyadics_breadth_first(level: u32) -> Vec<Rational> {
    let mut out = Vec::new();
    for l in 1..=level {
        let den = BigInt::from(1u64) << l;
        for j in (1..(1u64 << l)).step_by(2) {
            out.push(Rational::new(BigInt::from(j), den.clone()));
        }
    }
    out
}

/// Serde helpers writing rationals in their `p/q` text form.
pub mod text {
    use serde::ser::SerializeSeq;
    use serde::Serializer;

    use super::{format_rational, Rational};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn serialize_vec<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    pub fn serialize_opt<S: Serializer>(r: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
        match r {
            Some(r) => s.serialize_some(&format_rational(r)),
            None => s.serialize_none(),
        }
    }
}
