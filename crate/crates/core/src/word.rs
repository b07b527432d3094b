//! Words over `{x0, x0^-1, x1, x1^-1}`.
//!
//! Text syntax: `a` = x0, `A` = x0^-1, `b` = x1, `B` = x1^-1, read left to
//! right in action order, so `aB` applies x0 and then x1^-1. The empty word
//! is written `e` (the empty string is accepted too).

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::plmap::{Generator, PLMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Letter {
    X0,
    X0Inv,
    X1,
    X1Inv,
}

impl Letter {
    /// All letters in breadth-first exploration order.
    pub const ALL: [Letter; 4] = [Letter::X0, Letter::X0Inv, Letter::X1, Letter::X1Inv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::X0 => Letter::X0Inv,
            Letter::X0Inv => Letter::X0,
            Letter::X1 => Letter::X1Inv,
            Letter::X1Inv => Letter::X1,
        }
    }

    pub fn generator(self) -> Generator {
        match self {
            Letter::X0 | Letter::X0Inv => Generator::X0,
            Letter::X1 | Letter::X1Inv => Generator::X1,
        }
    }

    pub fn is_inverse(self) -> bool {
        matches!(self, Letter::X0Inv | Letter::X1Inv)
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::X0 => 'a',
            Letter::X0Inv => 'A',
            Letter::X1 => 'b',
            Letter::X1Inv => 'B',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::X0),
            'A' => Some(Letter::X0Inv),
            'b' => Some(Letter::X1),
            'B' => Some(Letter::X1Inv),
            _ => None,
        }
    }

    pub fn to_plmap(self) -> PLMap {
        let g = PLMap::generator(self.generator());
        if self.is_inverse() {
            g.inverse()
        } else {
            g
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GenWord(Vec<Letter>);

impl GenWord {
    pub fn new(letters: Vec<Letter>) -> Self {
        GenWord(letters)
    }

    pub fn empty() -> Self {
        GenWord(Vec::new())
    }

    pub fn letter(l: Letter) -> Self {
        GenWord(vec![l])
    }

    pub fn x0() -> Self {
        Self::letter(Letter::X0)
    }

    pub fn x1() -> Self {
        Self::letter(Letter::X1)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation, i.e. the product `self * other`.
    pub fn then(&self, other: &GenWord) -> GenWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        GenWord(v)
    }

    pub fn inverse(&self) -> GenWord {
        GenWord(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// `self^h = h self h^{-1}`.
    pub fn conjugate(&self, h: &GenWord) -> GenWord {
        h.then(self).then(&h.inverse())
    }

    /// `[self, g] = self g self^{-1} g^{-1}`.
    pub fn commutator(&self, g: &GenWord) -> GenWord {
        self.then(g).then(&self.inverse()).then(&g.inverse())
    }

    pub fn pow(&self, k: i64) -> GenWord {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut v = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            v.extend_from_slice(&base.0);
        }
        GenWord(v)
    }

    /// Concatenates the images of `items` under `image`.
    pub fn substitute<T>(items: impl IntoIterator<Item = T>, image: impl Fn(T) -> GenWord) -> GenWord {
        let mut v = Vec::new();
        for it in items {
            v.extend(image(it).0);
        }
        GenWord(v)
    }

    /// The word `x_0^{n-1} x_1 x_0^{-(n-1)}` for `x_n`, `n >= 1`.
    pub fn xn(n: u32) -> GenWord {
        assert!(n >= 1, "x_n needs n >= 1");
        let k = i64::from(n) - 1;
        GenWord::x0().pow(k).then(&GenWord::x1()).then(&GenWord::x0().pow(-k))
    }

    /// The word `x_0^{-n-1} x_1 x_0^n` for `y_n`, `n >= 1`.
    pub fn yn(n: u32) -> GenWord {
        assert!(n >= 1, "y_n needs n >= 1");
        let k = i64::from(n);
        GenWord::x0().pow(-k - 1).then(&GenWord::x1()).then(&GenWord::x0().pow(k))
    }

    /// Left-to-right product of the letter maps.
    pub fn to_plmap(&self) -> PLMap {
        let x0 = PLMap::x0();
        let x1 = PLMap::x1();
        let maps = [x0.clone(), x0.inverse(), x1.clone(), x1.inverse()];
        self.0.iter().fold(PLMap::identity(), |acc, l| acc.then(&maps[*l as usize]))
    }
}

impl From<Vec<Letter>> for GenWord {
    fn from(v: Vec<Letter>) -> Self {
        GenWord(v)
    }
}

impl fmt::Display for GenWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "e");
        }
        for l in &self.0 {
            write!(f, "{}", l.to_char())?;
        }
        Ok(())
    }
}

impl FromStr for GenWord {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "e" {
            return Ok(GenWord::empty());
        }
        s.chars()
            .enumerate()
            .map(|(i, c)| {
                Letter::from_char(c).ok_or_else(|| Error::parse(i, format!("unexpected character {c:?} in word")))
            })
            .collect::<Result<Vec<_>>>()
            .map(GenWord)
    }
}

impl Serialize for GenWord {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GenWord {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GenWord {
        s.parse().unwrap()
    }

    #[test]
    fn parse_and_print() {
        assert_eq!(w("aB").letters(), &[Letter::X0, Letter::X1Inv]);
        assert_eq!(w("").to_string(), "e");
        assert_eq!(w("e"), GenWord::empty());
        assert_eq!(w("abAB").to_string(), "abAB");
        match "abc".parse::<GenWord>() {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn word_helpers() {
        assert_eq!(w("ab").inverse(), w("BA"));
        assert_eq!(w("b").conjugate(&GenWord::empty()), w("b"));
        assert_eq!(w("b").conjugate(&w("a")), w("abA"));
        assert_eq!(w("a").pow(-3), w("AAA"));
        assert_eq!(GenWord::xn(3), w("aabAA"));
        assert_eq!(GenWord::yn(2), w("AAAbaa"));
    }

    #[test]
    fn word_to_plmap_examples() {
        assert!(GenWord::empty().to_plmap().is_identity());
        assert!(w("aA").to_plmap().is_identity());
        assert_eq!(w("abA").to_plmap(), PLMap::build_xn(2).unwrap());
        assert_eq!(w("b").conjugate(&w("a")).to_plmap(), PLMap::build_xn(2).unwrap());
    }

    #[test]
    fn finite_presentation_relators() {
        // [x1^-1 x0, x0 x1 x0^-1] and [x1^-1 x0, x0^2 x1 x0^-2]
        let u = w("Ba");
        assert!(u.commutator(&w("abA")).to_plmap().is_identity());
        assert!(u.commutator(&w("aabAA")).to_plmap().is_identity());
    }
}
