//! Rational points of the Cantor set `{0,1}^ω` and the action of F on them.
//!
//! A rational point is an eventually periodic sequence `v w w w ...`, kept in
//! the canonical form where `w` is primitive and `v` is empty or ends in a
//! letter different from the last letter of `w`. Generators act by rewriting a
//! bounded prefix of the sequence.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::word::{GenWord, Letter};

/// A finite word over `{0, 1}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitString(Vec<u8>);

impl BitString {
    pub fn new(bits: Vec<u8>) -> Result<Self> {
        if let Some(i) = bits.iter().position(|b| *b > 1) {
            return Err(Error::invalid(format!("bit {i} is {}, expected 0 or 1", bits[i])));
        }
        Ok(BitString(bits))
    }

    pub fn empty() -> Self {
        BitString(Vec::new())
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> BitString {
        BitString(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &BitString) -> BitString {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        BitString(v)
    }

    /// Shortest `r` with `self = r^k`.
    pub fn primitive_root(&self) -> BitString {
        let n = self.0.len();
        for d in 1..n {
            if n.is_multiple_of(d) && (d..n).all(|i| self.0[i] == self.0[i - d]) {
                return BitString(self.0[..d].to_vec());
            }
        }
        self.clone()
    }

    pub fn is_primitive(&self) -> bool {
        !self.0.is_empty() && self.primitive_root().len() == self.0.len()
    }

    /// Reads the bits as a binary integer; the empty string is 0.
    pub fn to_integer(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |acc, b| (acc << 1u32) + BigInt::from(*b))
    }

    fn rotate_left(&mut self) {
        self.0.rotate_left(1);
    }

    fn rotate_right(&mut self) {
        self.0.rotate_right(1);
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.0 {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .enumerate()
            .map(|(i, c)| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::parse(i, format!("expected a binary digit, found {c:?}"))),
            })
            .collect::<Result<Vec<u8>>>()
            .map(BitString)
    }
}

/// A canonical eventually periodic binary sequence `preperiod · period^∞`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    preperiod: BitString,
    period: BitString,
}

/// Prefix rewriting rules of the generators on `{0,1}^ω`.
const X0_RULES: &[(&[u8], &[u8])] = &[(&[0], &[0, 0]), (&[1, 0], &[0, 1]), (&[1, 1], &[1])];
const X1_RULES: &[(&[u8], &[u8])] =
    &[(&[0], &[0]), (&[1, 0], &[1, 0, 0]), (&[1, 1, 0], &[1, 0, 1]), (&[1, 1, 1], &[1, 1])];

/// Longest prefix any rule (or its inverse) inspects.
const MAX_RULE_PREFIX: usize = 3;

impl RationalPoint {
    /// Canonical form of `v w^∞`: `w` is reduced to its primitive root, then
    /// trailing letters of `v` equal to the last letter of `w` are absorbed
    /// into the period by rotating it.
    pub fn canonicalize(v: BitString, w: BitString) -> Result<Self> {
        if w.is_empty() {
            return Err(Error::invalid("period must be nonempty"));
        }
        let mut v = v;
        let mut w = w.primitive_root();
        while let (Some(a), Some(b)) = (v.0.last(), w.0.last()) {
            if a != b {
                break;
            }
            v.0.pop();
            w.rotate_right();
        }
        Ok(RationalPoint { preperiod: v, period: w })
    }

    /// Parses the two binary strings and canonicalizes.
    pub fn from_parts(v: &str, w: &str) -> Result<Self> {
        Self::canonicalize(v.parse()?, w.parse()?)
    }

    pub fn zero_tail() -> Self {
        RationalPoint { preperiod: BitString::empty(), period: BitString(vec![0]) }
    }

    pub fn one_tail() -> Self {
        RationalPoint { preperiod: BitString::empty(), period: BitString(vec![1]) }
    }

    pub fn preperiod(&self) -> &BitString {
        &self.preperiod
    }

    pub fn period(&self) -> &BitString {
        &self.period
    }

    /// True for `0^∞` and `1^∞`, the two points fixed by all of F.
    pub fn is_global_fixed_point(&self) -> bool {
        self.preperiod.is_empty() && self.period.len() == 1
    }

    /// The first `n` letters of the sequence.
    pub fn prefix(&self, n: usize) -> Vec<u8> {
        self.preperiod.0.iter().chain(self.period.0.iter().cycle()).take(n).copied().collect()
    }

    /// Moves letters from the period into the preperiod until the latter has
    /// at least `n` letters. The result is generally not canonical.
    fn unrolled(&self, n: usize) -> (BitString, BitString) {
        let mut v = self.preperiod.clone();
        let mut w = self.period.clone();
        while v.len() < n {
            v.0.push(w.0[0]);
            w.rotate_left();
        }
        (v, w)
    }

    pub fn act_letter(&self, letter: Letter) -> RationalPoint {
        let (rules, inverse) = match letter {
            Letter::X0 => (X0_RULES, false),
            Letter::X0Inv => (X0_RULES, true),
            Letter::X1 => (X1_RULES, false),
            Letter::X1Inv => (X1_RULES, true),
        };
        let (v, w) = self.unrolled(MAX_RULE_PREFIX);
        for &(lhs, rhs) in rules {
            let (from, to) = if inverse { (rhs, lhs) } else { (lhs, rhs) };
            if v.0.starts_with(from) {
                let mut out = to.to_vec();
                out.extend_from_slice(&v.0[from.len()..]);
                return RationalPoint::canonicalize(BitString(out), w).expect("period stays nonempty");
            }
        }
        unreachable!("rule prefixes form a complete prefix code")
    }

    /// Applies the letters of `word` from left to right.
    pub fn act_word(&self, word: &GenWord) -> RationalPoint {
        word.letters().iter().fold(self.clone(), |p, l| p.act_letter(*l))
    }

    /// The rational number `0.v w w w ...` in lowest terms.
    pub fn value(&self) -> BigRational {
        let v = &self.preperiod;
        let w = &self.period;
        let cycle = (BigInt::one() << w.len()) - BigInt::one();
        let numer = v.to_integer() * &cycle + w.to_integer();
        let denom = (BigInt::one() << v.len()) * cycle;
        BigRational::new(numer, denom)
    }

    /// The point whose binary expansion is `r`. Dyadic values get the `0^∞`
    /// tail, except 1 itself which is `1^∞`.
    pub fn from_value(r: &BigRational) -> Result<Self> {
        if r.is_negative() || *r > BigRational::one() {
            return Err(Error::Domain { value: r.to_string() });
        }
        if r.is_one() {
            return Ok(Self::one_tail());
        }
        let q = r.denom().clone();
        let mut rem = r.numer().clone();
        let mut digits: Vec<u8> = Vec::new();
        let mut seen: HashMap<BigInt, usize> = HashMap::new();
        let start = loop {
            if rem.is_zero() {
                digits.push(0);
                break digits.len() - 1;
            }
            if let Some(&i) = seen.get(&rem) {
                break i;
            }
            seen.insert(rem.clone(), digits.len());
            rem <<= 1u32;
            let (digit, next) = rem.div_rem(&q);
            digits.push(if digit.is_zero() { 0 } else { 1 });
            rem = next;
        };
        let period = digits.split_off(start);
        Self::canonicalize(BitString(digits), BitString(period))
    }

    /// The one-sided shift: drops the first letter.
    pub fn shift(&self) -> RationalPoint {
        let (mut v, w) = self.unrolled(1);
        v.0.remove(0);
        RationalPoint::canonicalize(v, w).expect("period stays nonempty")
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})", self.preperiod, self.period)
    }
}

/// Accepts `v(w)` with binary `v` (possibly empty) and nonempty binary `w`, or
/// a fraction `p/q` with `0 <= p <= q`.
impl FromStr for RationalPoint {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let s = text.trim();
        let offset = text.len() - text.trim_start().len();
        if s.is_empty() {
            return Err(Error::parse(offset, "empty point"));
        }
        if let Some(open) = s.find('(') {
            let v: BitString = s[..open].parse().map_err(|e| shift_pos(e, offset))?;
            let close = s
                .rfind(')')
                .filter(|c| *c > open)
                .ok_or_else(|| Error::parse(offset + s.len(), "missing ')' after period"))?;
            if close + 1 != s.len() {
                return Err(Error::parse(offset + close + 1, "trailing characters after ')'"));
            }
            let inner = &s[open + 1..close];
            if inner.is_empty() {
                return Err(Error::parse(offset + open + 1, "empty period"));
            }
            let w: BitString = inner.parse().map_err(|e| shift_pos(e, offset + open + 1))?;
            return Self::canonicalize(v, w);
        }
        if let Some(slash) = s.find('/') {
            let p: BigInt = parse_int(&s[..slash], offset)?;
            let q: BigInt = parse_int(&s[slash + 1..], offset + slash + 1)?;
            if q < BigInt::one() {
                return Err(Error::parse(offset + slash + 1, "denominator must be at least 1"));
            }
            if p.is_negative() || p > q {
                return Err(Error::parse(offset, format!("{p}/{q} is outside [0, 1]")));
            }
            return Self::from_value(&BigRational::new(p, q));
        }
        match s {
            "0" => Ok(Self::zero_tail()),
            "1" => Ok(Self::one_tail()),
            _ => Err(Error::parse(offset, "expected `v(w)` or `p/q`")),
        }
    }
}

fn shift_pos(e: Error, by: usize) -> Error {
    match e {
        Error::Parse { pos, msg } => Error::Parse { pos: pos + by, msg },
        other => other,
    }
}

fn parse_int(s: &str, pos: usize) -> Result<BigInt> {
    if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
        return Err(Error::parse(pos, format!("expected a non-negative integer, found {s:?}")));
    }
    s.parse().map_err(|_| Error::parse(pos, "integer out of range"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(v: &str, w: &str) -> RationalPoint {
        RationalPoint::from_parts(v, w).unwrap()
    }

    fn q(n: i64, m: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(m))
    }

    #[test]
    fn canonicalize_examples() {
        let p = pt("0", "1000");
        assert_eq!((p.preperiod().to_string(), p.period().to_string()), ("".into(), "0100".into()));
        assert_eq!(pt("", "0101").to_string(), "(01)");
        assert_eq!(pt("1", "1"), RationalPoint::one_tail());
        assert_eq!(pt("10", "0100").to_string(), "1(0010)");
        assert!(RationalPoint::from_parts("1", "").is_err());
    }

    #[test]
    fn point_equality() {
        assert_eq!(pt("", "0100"), pt("0", "1000"));
        assert_ne!(pt("1", "0"), pt("0", "1"));
    }

    #[test]
    fn act_letter_examples() {
        assert_eq!(pt("10", "0100").act_letter(Letter::X0), pt("01", "0100"));
        assert_eq!(pt("", "01").act_letter(Letter::X1), pt("", "01"));
        assert_eq!(RationalPoint::one_tail().act_letter(Letter::X0), RationalPoint::one_tail());
        assert_eq!(RationalPoint::zero_tail().act_letter(Letter::X1Inv), RationalPoint::zero_tail());
    }

    #[test]
    fn act_word_examples() {
        let p = pt("10", "0100");
        assert_eq!(p.act_word(&GenWord::empty()), p);
        assert_eq!(p.act_word(&"aA".parse().unwrap()), p);
        assert_eq!(pt("1", "0").act_word(&GenWord::x1()), pt("1", "0"));
    }

    #[test]
    fn values() {
        assert_eq!(pt("", "0100").value(), q(4, 15));
        assert_eq!(pt("1", "0").value(), q(1, 2));
        assert_eq!(pt("10", "0100").value(), q(17, 30));
        assert_eq!(RationalPoint::one_tail().value(), q(1, 1));
        assert_eq!(pt("0", "1").value(), q(1, 2));
    }

    #[test]
    fn from_value_examples() {
        assert_eq!(RationalPoint::from_value(&q(4, 15)).unwrap(), pt("", "0100"));
        assert_eq!(RationalPoint::from_value(&q(1, 2)).unwrap(), pt("1", "0"));
        assert_eq!(RationalPoint::from_value(&q(17, 30)).unwrap(), pt("10", "0100"));
        assert_eq!(RationalPoint::from_value(&q(0, 1)).unwrap(), RationalPoint::zero_tail());
        assert_eq!(RationalPoint::from_value(&q(1, 1)).unwrap(), RationalPoint::one_tail());
        assert!(matches!(RationalPoint::from_value(&q(3, 2)), Err(Error::Domain { .. })));
        assert!(matches!(RationalPoint::from_value(&q(-1, 2)), Err(Error::Domain { .. })));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(pt("10", "0100").shift(), pt("0", "0100"));
        assert_eq!(pt("", "01").shift(), pt("", "10"));
        assert_eq!(RationalPoint::zero_tail().shift(), RationalPoint::zero_tail());
    }

    #[test]
    fn parse_points() {
        assert_eq!("10(0100)".parse::<RationalPoint>().unwrap(), pt("10", "0100"));
        assert_eq!("4/15".parse::<RationalPoint>().unwrap(), pt("", "0100"));
        assert_eq!("0(1000)".parse::<RationalPoint>().unwrap(), pt("", "0100"));
        assert_eq!("(01)".parse::<RationalPoint>().unwrap(), pt("", "01"));
        for (bad, at) in [("10()", 3), ("1(01", 4), ("12(0)", 1), ("3/2", 0), ("1/0", 2), ("1(0)x", 4), ("", 0)] {
            match bad.parse::<RationalPoint>() {
                Err(Error::Parse { pos, .. }) => assert_eq!(pos, at, "{bad}"),
                other => panic!("{bad}: {other:?}"),
            }
        }
    }

    #[test]
    fn primitive_roots() {
        assert_eq!("0101".parse::<BitString>().unwrap().primitive_root().to_string(), "01");
        assert!("0100".parse::<BitString>().unwrap().is_primitive());
        assert!(!"000".parse::<BitString>().unwrap().is_primitive());
        assert!(!BitString::empty().is_primitive());
    }
}
