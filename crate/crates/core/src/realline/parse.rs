//! Text forms for line sets and piecewise maps.
//!
//! Sets: `empty`, `all`, or intervals joined by `|`, e.g. `(-inf,0]|[1,2)`.
//! Maps: a single affine law such as `1/2*x-1`, or `;`-separated segments
//! `on <interval>: <law>` and `at <q>: <value>` that partition ℝ, which is
//! the form maps are displayed in.

use super::map::{Affine, PiecewiseMap};
use super::set::{Cut, Interval, SymbolicSet};
use crate::rational::{one, parse_rational, zero};
use crate::{Error, Rational, Result};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str) -> Self {
        Parser { src, pos: 0 }
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.rest().chars().next()
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<()> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(format!("expected `{token}`")))
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::parse(self.pos, msg)
    }

    fn finish(&mut self) -> Result<()> {
        self.skip_ws();
        if self.pos < self.src.len() {
            return Err(self.error("unexpected trailing input"));
        }
        Ok(())
    }

    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let mut len = usize::from(rest.starts_with('-'));
        len += rest[len..].bytes().take_while(|b| b.is_ascii_digit() || *b == b'/').count();
        let text = &rest[..len];
        let r = parse_rational(text).map_err(|_| Error::parse(start, format!("malformed rational `{text}`")))?;
        self.pos += len;
        Ok(r)
    }

    fn infinity(&mut self) -> Option<bool> {
        if self.eat("-inf") {
            Some(false)
        } else if self.eat("+inf") || self.eat("inf") {
            Some(true)
        } else {
            None
        }
    }

    fn interval(&mut self) -> Result<Interval> {
        let start = self.pos;
        let lo = if self.eat("[") {
            self.skip_ws();
            let at = self.pos;
            if self.infinity().is_some() {
                return Err(Error::parse(at, "an infinite end must be open"));
            }
            Cut::Below(self.rational()?)
        } else if self.eat("(") {
            self.skip_ws();
            let at = self.pos;
            match self.infinity() {
                Some(false) => Cut::NegInf,
                Some(true) => return Err(Error::parse(at, "lower end cannot be +inf")),
                None => Cut::Above(self.rational()?),
            }
        } else {
            return Err(self.error("expected `[` or `(`"));
        };
        self.expect(",")?;
        self.skip_ws();
        let at = self.pos;
        let hi = match self.infinity() {
            Some(true) => {
                self.expect(")")?;
                Cut::PosInf
            }
            Some(false) => return Err(Error::parse(at, "upper end cannot be -inf")),
            None => {
                let b = self.rational()?;
                if self.eat("]") {
                    Cut::Above(b)
                } else if self.eat(")") {
                    Cut::Below(b)
                } else {
                    return Err(self.error("expected `]` or `)`"));
                }
            }
        };
        Interval::new(lo, hi).ok_or_else(|| Error::parse(start, "empty interval"))
    }

    fn set(&mut self) -> Result<SymbolicSet> {
        if self.eat("empty") {
            return Ok(SymbolicSet::empty());
        }
        if self.eat("all") {
            return Ok(SymbolicSet::all());
        }
        let mut parts = vec![self.interval()?];
        while self.eat("|") {
            parts.push(self.interval()?);
        }
        Ok(SymbolicSet::from_intervals(parts))
    }

    /// `x`, `-x`, `c` or `c*x`, returned as (slope, intercept).
    fn term(&mut self) -> Result<(Rational, Rational)> {
        if self.eat("x") {
            return Ok((one(), zero()));
        }
        if self.eat("-x") {
            return Ok((-one(), zero()));
        }
        let c = self.rational()?;
        if self.eat("*") {
            self.expect("x")?;
            Ok((c, zero()))
        } else {
            Ok((zero(), c))
        }
    }

    fn affine(&mut self) -> Result<Affine> {
        let (mut slope, mut intercept) = self.term()?;
        loop {
            let sign = match self.peek() {
                Some('+') => one(),
                Some('-') => -one(),
                _ => break,
            };
            self.pos += 1;
            let (s, c) = self.term()?;
            slope += &sign * s;
            intercept += sign * c;
        }
        Ok(Affine::new(slope, intercept))
    }

    fn map(&mut self) -> Result<PiecewiseMap> {
        self.skip_ws();
        if !self.rest().starts_with("on") && !self.rest().starts_with("at") {
            let law = self.affine()?;
            return Ok(PiecewiseMap::affine(law.slope, law.intercept));
        }
        let mut parts: Vec<(Interval, Affine)> = Vec::new();
        loop {
            if self.eat("on") {
                let i = self.interval()?;
                self.expect(":")?;
                parts.push((i, self.affine()?));
            } else if self.eat("at") {
                let q = self.rational()?;
                self.expect(":")?;
                let v = self.rational()?;
                let point = Interval::new(Cut::Below(q.clone()), Cut::Above(q)).expect("a point");
                parts.push((point, Affine::constant(v)));
            } else {
                return Err(self.error("expected `on` or `at`"));
            }
            if !self.eat(";") {
                break;
            }
        }
        let end = self.pos;
        PiecewiseMap::from_pieces(parts).map_err(|e| match e {
            Error::Input(m) => Error::parse(end, m),
            other => other,
        })
    }
}

pub fn parse_set(s: &str) -> Result<SymbolicSet> {
    let mut p = Parser::new(s);
    let set = p.set()?;
    p.finish()?;
    Ok(set)
}

pub fn parse_interval(s: &str) -> Result<Interval> {
    let mut p = Parser::new(s);
    let i = p.interval()?;
    p.finish()?;
    Ok(i)
}

pub fn parse_affine(s: &str) -> Result<Affine> {
    let mut p = Parser::new(s);
    let a = p.affine()?;
    p.finish()?;
    Ok(a)
}

pub fn parse_map(s: &str) -> Result<PiecewiseMap> {
    let mut p = Parser::new(s);
    let m = p.map()?;
    p.finish()?;
    Ok(m)
}

impl std::str::FromStr for SymbolicSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_set(s)
    }
}

impl std::str::FromStr for PiecewiseMap {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_map(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn sets_round_trip() {
        for text in ["empty", "all", "(-inf,0]|[1,2)", "(1/2,inf)", "[0,0]|(3,4]"] {
            let s = parse_set(text).unwrap();
            assert_eq!(s.to_string(), text);
        }
        assert_eq!(parse_set(" [0, 1] | [1,2] ").unwrap(), SymbolicSet::closed(int(0), int(2)));
    }

    #[test]
    fn bad_sets_report_positions() {
        let cases = [("[0,1", 4), ("[-inf,1]", 1), ("(2,1)", 0), ("[0,1] x", 6), ("[a,1]", 1)];
        for (text, at) in cases {
            match parse_set(text) {
                Err(Error::Parse { position, .. }) => assert_eq!(position, at, "{text}"),
                other => panic!("{text}: {other:?}"),
            }
        }
    }

    #[test]
    fn affine_forms() {
        assert_eq!(parse_affine("1/2*x+-1").unwrap(), Affine::new(frac(1, 2), int(-1)));
        assert_eq!(parse_affine("1/2*x-1").unwrap(), Affine::new(frac(1, 2), int(-1)));
        assert_eq!(parse_affine("x").unwrap(), Affine::new(one(), zero()));
        assert_eq!(parse_affine("-3/4").unwrap(), Affine::constant(frac(-3, 4)));
        assert_eq!(parse_affine("2 - x").unwrap(), Affine::new(int(-1), int(2)));
    }

    #[test]
    fn maps_round_trip_through_display() {
        let m = parse_map("on (-inf,1): 0; at 1: 0; on (1,2): x-1; at 2: 1; on (2,inf): 1").unwrap();
        assert_eq!(m.eval(&frac(3, 2)), frac(1, 2));
        assert_eq!(parse_map(&m.to_string()).unwrap(), m);
        assert_eq!(parse_map("1/2*x").unwrap(), PiecewiseMap::affine(frac(1, 2), zero()));
    }

    #[test]
    fn gappy_maps_are_rejected() {
        assert!(matches!(parse_map("on (-inf,1): 0; on (1,inf): 1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_map("on (-inf,1]: 0; on [1,inf): 1"), Err(Error::Parse { .. })));
    }
}
