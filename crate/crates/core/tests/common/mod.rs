//! Reference implementation of the Cantor-set action written directly on
//! strings, sharing no code with the library. A point `v w^∞` is a pair of
//! `'0'/'1'` strings; a letter rewrites a prefix of the sequence, and points
//! are named by brute-force search for the shortest eventual period and then
//! the shortest preperiod.

#![allow(dead_code)]

use std::collections::HashMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Prefix-replacement tables, one per letter `a, A, b, B`.
const RULES: [(char, &[(&str, &str)]); 4] = [
    ('a', &[("0", "00"), ("10", "01"), ("11", "1")]),
    ('A', &[("00", "0"), ("01", "10"), ("1", "11")]),
    ('b', &[("0", "0"), ("10", "100"), ("110", "101"), ("111", "11")]),
    ('B', &[("0", "0"), ("100", "10"), ("101", "110"), ("11", "111")]),
];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Seq {
    pub pre: String,
    pub per: String,
}

impl Seq {
    pub fn new(pre: &str, per: &str) -> Self {
        assert!(!per.is_empty());
        Seq { pre: pre.to_owned(), per: per.to_owned() }.named()
    }

    fn at(&self, i: usize) -> u8 {
        let b = if i < self.pre.len() {
            self.pre.as_bytes()[i]
        } else {
            self.per.as_bytes()[(i - self.pre.len()) % self.per.len()]
        };
        b - b'0'
    }

    /// The shortest eventual period, then the shortest preperiod for it.
    fn named(&self) -> Seq {
        let (v, w) = (self.pre.len(), self.per.len());
        for q in 1..=w {
            for pre in 0..=v + w {
                let end = pre.max(v) + w;
                if (pre..end).all(|i| self.at(i) == self.at(i + q)) {
                    let take =
                        |from: usize, n: usize| (from..from + n).map(|i| char::from(b'0' + self.at(i))).collect();
                    return Seq { pre: take(0, pre), per: take(pre, q) };
                }
            }
        }
        unreachable!("the stored period is always an eventual period")
    }

    pub fn act(&self, letter: char) -> Seq {
        let rules = RULES.iter().find(|(c, _)| *c == letter).expect("letter in aAbB").1;
        let mut head = self.pre.clone();
        while head.len() < 3 {
            head.push_str(&self.per);
        }
        let (from, to) = rules.iter().find(|(from, _)| head.starts_with(from)).expect("rules are complete");
        let pre = format!("{to}{}", &head[from.len()..]);
        Seq { pre, per: self.per.clone() }.named()
    }

    pub fn act_word(&self, word: &str) -> Seq {
        word.chars().fold(self.clone(), |p, c| p.act(c))
    }

    /// `(int(v) + int(w) / (2^|w| - 1)) / 2^|v|`
    pub fn value(&self) -> BigRational {
        let int = |s: &str| s.chars().fold(BigInt::zero(), |acc, c| acc * 2 + u32::from(c == '1'));
        let one = BigInt::one();
        let cycle = BigRational::new(int(&self.per), (&one << self.per.len()) - &one);
        (BigRational::from_integer(int(&self.pre)) + cycle) / BigRational::from_integer(one << self.pre.len())
    }

    pub fn name(&self) -> String {
        format!("{}({})", self.pre, self.per)
    }
}

/// The ball of `radius` around `seed`: vertices in breadth-first order over
/// `a, A, b, B`, plus `(source, "x0"|"x1", target)` edges inside the ball.
pub fn ball(seed: &Seq, radius: usize) -> (Vec<Seq>, Vec<(usize, &'static str, usize)>) {
    let mut verts = vec![seed.clone()];
    let mut index: HashMap<Seq, usize> = HashMap::from([(seed.clone(), 0)]);
    let mut start = 0;
    for _ in 0..radius {
        let end = verts.len();
        for i in start..end {
            for c in ['a', 'A', 'b', 'B'] {
                let img = verts[i].act(c);
                if !index.contains_key(&img) {
                    index.insert(img.clone(), verts.len());
                    verts.push(img);
                }
            }
        }
        start = end;
    }
    let mut edges = Vec::new();
    for (i, v) in verts.iter().enumerate() {
        for (c, label) in [('a', "x0"), ('b', "x1")] {
            if let Some(&j) = index.get(&v.act(c)) {
                edges.push((i, label, j));
            }
        }
    }
    (verts, edges)
}

pub fn ball_dot(seed: &Seq, radius: usize) -> String {
    let (verts, edges) = ball(seed, radius);
    let mut out = String::from("digraph schreier {\n");
    for (i, v) in verts.iter().enumerate() {
        let extra = if i == 0 { " [peripheries=2]" } else { "" };
        writeln!(out, "  \"{}\"{extra};", v.name()).unwrap();
    }
    for (s, label, t) in edges {
        writeln!(out, "  \"{}\" -> \"{}\" [label=\"{label}\"];", verts[s].name(), verts[t].name()).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Path of the frozen DOT output for the ball of radius 4 around `1/2`.
pub const HALF_RADIUS4_FIXTURE: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/fixtures/half_r4.dot");
