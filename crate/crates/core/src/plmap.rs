//! Elements of Thompson's group F as piecewise-linear homeomorphisms of `[0, 1]`.
//!
//! A map is stored as its list of breakpoints `(t, f(t))`, starting at
//! `(0, 0)` and ending at `(1, 1)`, with no interior point collinear with its
//! neighbours. That representative is unique, so two elements are equal iff
//! their breakpoint lists are equal. Products use the right-action convention:
//! `f.then(g)` is the map `t -> g(f(t))`.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::dyadic::Dyadic;
use crate::error::{Error, Result};

/// One of the two standard generators of F.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X0,
    X1,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PLMap {
    points: Vec<(Dyadic, Dyadic)>,
}

/// An affine branch `t -> 2^slope * t + intercept`, used to build maps from
/// their closed forms.
struct Branch {
    slope: i64,
    intercept: Dyadic,
}

impl Branch {
    fn new(slope: i64, intercept: Dyadic) -> Self {
        Branch { slope, intercept }
    }

    fn at(&self, t: &Dyadic) -> Dyadic {
        &t.mul_pow2(self.slope) + &self.intercept
    }
}

/// Builds a map from interior breakpoints `cuts` and the affine branch used on
/// each of the `cuts.len() + 1` pieces.
fn from_branches(cuts: &[Dyadic], branches: &[Branch]) -> PLMap {
    debug_assert_eq!(cuts.len() + 1, branches.len());
    let mut points = vec![(Dyadic::zero(), branches[0].at(&Dyadic::zero()))];
    for (i, cut) in cuts.iter().enumerate() {
        let left = branches[i].at(cut);
        debug_assert_eq!(left, branches[i + 1].at(cut), "closed form is discontinuous at {cut}");
        points.push((cut.clone(), left));
    }
    let last = branches.last().expect("at least one branch");
    points.push((Dyadic::one(), last.at(&Dyadic::one())));
    PLMap::from_breakpoints(points).expect("closed form describes an element of F")
}

impl PLMap {
    pub fn identity() -> Self {
        PLMap { points: vec![(Dyadic::zero(), Dyadic::zero()), (Dyadic::one(), Dyadic::one())] }
    }

    /// Validates a breakpoint list and drops collinear interior points.
    pub fn from_breakpoints(points: Vec<(Dyadic, Dyadic)>) -> Result<Self> {
        let n = points.len();
        if n < 2 {
            return Err(Error::InvalidMap("need at least the two endpoints".into()));
        }
        if points[0] != (Dyadic::zero(), Dyadic::zero()) {
            return Err(Error::InvalidMap("first breakpoint must be (0, 0)".into()));
        }
        if points[n - 1] != (Dyadic::one(), Dyadic::one()) {
            return Err(Error::InvalidMap("last breakpoint must be (1, 1)".into()));
        }
        for w in points.windows(2) {
            let dt = &w[1].0 - &w[0].0;
            let df = &w[1].1 - &w[0].1;
            if !dt.is_positive() || !df.is_positive() {
                return Err(Error::InvalidMap(format!("breakpoints not strictly increasing at t = {}", w[0].0)));
            }
            if dt.log2_ratio(&df).is_none() {
                return Err(Error::InvalidMap(format!("slope on [{}, {}] is not a power of 2", w[0].0, w[1].0)));
            }
        }
        Ok(PLMap { points }.normalized())
    }

    /// Removes interior breakpoints whose two adjacent slopes agree.
    fn normalized(self) -> Self {
        let pts = self.points;
        if pts.len() <= 2 {
            return PLMap { points: pts };
        }
        let slopes: Vec<i64> = pts.windows(2).map(segment_slope).collect();
        let mut out = Vec::with_capacity(pts.len());
        let last = pts.len() - 1;
        for (i, p) in pts.into_iter().enumerate() {
            if i == 0 || i == last || slopes[i - 1] != slopes[i] {
                out.push(p);
            }
        }
        PLMap { points: out }
    }

    /// Checks every structural invariant, including normalization.
    pub fn validate(&self) -> Result<()> {
        let rebuilt = PLMap::from_breakpoints(self.points.clone())?;
        if rebuilt.points.len() != self.points.len() {
            return Err(Error::InvalidMap("collinear interior breakpoint".into()));
        }
        Ok(())
    }

    pub fn generator(which: Generator) -> Self {
        let half = Dyadic::inv_pow2(1);
        let quarter = Dyadic::inv_pow2(2);
        let three_quarters = Dyadic::one() - quarter.clone();
        match which {
            Generator::X0 => from_branches(
                &[half, three_quarters],
                &[Branch::new(-1, Dyadic::zero()), Branch::new(0, -quarter), Branch::new(1, -Dyadic::one())],
            ),
            Generator::X1 => Self::x(1),
        }
    }

    pub fn x0() -> Self {
        Self::generator(Generator::X0)
    }

    pub fn x1() -> Self {
        Self::generator(Generator::X1)
    }

    /// The element `x_n` (`n >= 1`) from its closed form: the identity on
    /// `[0, 1 - 2^-n]` followed by slopes 1/2, 1, 2.
    pub fn build_xn(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid(format!("x_n needs n >= 1, got {n}")));
        }
        Ok(Self::x(n as u64))
    }

    pub(crate) fn x(n: u64) -> Self {
        let one = Dyadic::one();
        let cuts = [
            one.clone() - Dyadic::inv_pow2(n),
            one.clone() - Dyadic::inv_pow2(n + 1),
            one.clone() - Dyadic::inv_pow2(n + 2),
        ];
        from_branches(
            &cuts,
            &[
                Branch::new(0, Dyadic::zero()),
                Branch::new(-1, Dyadic::inv_pow2(1) - Dyadic::inv_pow2(n + 1)),
                Branch::new(0, -Dyadic::inv_pow2(n + 2)),
                Branch::new(1, -one),
            ],
        )
    }

    /// The element `y_n = x_0^{-n-1} x_1 x_0^n` (`n >= 1`) from its closed
    /// form: slopes 2, 1, 1/2 on `[0, 2^-n]` and the identity afterwards.
    ///
    /// The third branch is `t/2 + 2^-(n+1)`; this is the only choice that is
    /// continuous at both `2^-(n+1)` and `2^-n` for every `n`.
    pub fn build_yn(n: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::invalid(format!("y_n needs n >= 1, got {n}")));
        }
        Ok(Self::y(n as u64))
    }

    pub(crate) fn y(n: u64) -> Self {
        let cuts = [Dyadic::inv_pow2(n + 2), Dyadic::inv_pow2(n + 1), Dyadic::inv_pow2(n)];
        from_branches(
            &cuts,
            &[
                Branch::new(1, Dyadic::zero()),
                Branch::new(0, Dyadic::inv_pow2(n + 2)),
                Branch::new(-1, Dyadic::inv_pow2(n + 1)),
                Branch::new(0, Dyadic::zero()),
            ],
        )
    }

    pub fn breakpoints(&self) -> &[(Dyadic, Dyadic)] {
        &self.points
    }

    pub fn is_identity(&self) -> bool {
        self.points.len() == 2
    }

    /// Index `i` of the segment whose `key` interval `[key(p_i), key(p_{i+1})]`
    /// contains `t`.
    fn segment<T, F>(&self, key: F, t: &T) -> usize
    where
        F: Fn(&(Dyadic, Dyadic)) -> T,
        T: Ord,
    {
        let idx = self.points.partition_point(|p| key(p) <= *t);
        idx.clamp(1, self.points.len() - 1) - 1
    }

    /// Exact value at a dyadic point of `[0, 1]`.
    pub fn eval(&self, t: &Dyadic) -> Result<Dyadic> {
        check_unit(t.is_positive() || t.is_zero(), t <= &Dyadic::one(), || t.to_string())?;
        Ok(self.eval_unchecked(t))
    }

    fn eval_unchecked(&self, t: &Dyadic) -> Dyadic {
        let i = self.segment(|p| p.0.clone(), t);
        let (t0, f0) = &self.points[i];
        let k = segment_slope(&self.points[i..i + 2]);
        f0 + &(t - t0).mul_pow2(k)
    }

    /// Exact value at an arbitrary rational point of `[0, 1]`.
    pub fn eval_rational(&self, t: &BigRational) -> Result<BigRational> {
        check_unit(*t >= BigRational::zero(), *t <= BigRational::one(), || t.to_string())?;
        let i = self.segment(|p| p.0.to_rational(), t);
        let (t0, f0) = &self.points[i];
        let k = segment_slope(&self.points[i..i + 2]);
        let scale = if k >= 0 {
            BigRational::from_integer(num_bigint::BigInt::one() << k as u64)
        } else {
            BigRational::new(num_bigint::BigInt::one(), num_bigint::BigInt::one() << k.unsigned_abs())
        };
        Ok(f0.to_rational() + (t - t0.to_rational()) * scale)
    }

    /// `f^{-1}(s)` for a dyadic `s` in `[0, 1]`.
    fn preimage(&self, s: &Dyadic) -> Dyadic {
        let i = self.segment(|p| p.1.clone(), s);
        let (t0, f0) = &self.points[i];
        let k = segment_slope(&self.points[i..i + 2]);
        t0 + &(s - f0).mul_pow2(-k)
    }

    /// The product `self * g` under the right action: `t -> g(self(t))`.
    pub fn then(&self, g: &PLMap) -> PLMap {
        let own: Vec<&Dyadic> = self.points.iter().map(|p| &p.0).collect();
        let pulled: Vec<Dyadic> = g.points.iter().map(|p| self.preimage(&p.0)).collect();
        let mut ts: Vec<Dyadic> = Vec::with_capacity(own.len() + pulled.len());
        let (mut i, mut j) = (0, 0);
        while i < own.len() || j < pulled.len() {
            let next = match (own.get(i), pulled.get(j)) {
                (Some(a), Some(b)) if *a <= b => {
                    if *a == b {
                        j += 1;
                    }
                    i += 1;
                    (*a).clone()
                }
                (_, Some(b)) => {
                    j += 1;
                    b.clone()
                }
                (Some(a), None) => {
                    i += 1;
                    (*a).clone()
                }
                (None, None) => unreachable!(),
            };
            ts.push(next);
        }
        let points = ts
            .into_iter()
            .map(|t| {
                let v = g.eval_unchecked(&self.eval_unchecked(&t));
                (t, v)
            })
            .collect();
        let h = PLMap { points }.normalized();
        debug_assert!(h.validate().is_ok());
        h
    }

    pub fn inverse(&self) -> PLMap {
        PLMap { points: self.points.iter().map(|(a, b)| (b.clone(), a.clone())).collect() }
    }

    /// `self^g = g self g^{-1}`: first `g`, then `self`, then `g^{-1}`.
    pub fn conjugate_by(&self, g: &PLMap) -> PLMap {
        g.then(self).then(&g.inverse())
    }

    /// `[f, g] = f g f^{-1} g^{-1}`
    pub fn commutator(&self, g: &PLMap) -> PLMap {
        self.then(g).then(&self.inverse()).then(&g.inverse())
    }

    pub fn pow(&self, k: i64) -> PLMap {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(PLMap::identity(), |acc, _| acc.then(&base))
    }

    /// The flip automorphism `f -> (t -> 1 - f(1 - t))`.
    pub fn phi(&self) -> PLMap {
        PLMap { points: self.points.iter().rev().map(|(a, b)| (a.complement(), b.complement())).collect() }
    }
}

fn check_unit(lower_ok: bool, upper_ok: bool, show: impl Fn() -> String) -> Result<()> {
    if lower_ok && upper_ok {
        Ok(())
    } else {
        Err(Error::Domain { value: show() })
    }
}

/// Base-2 logarithm of the slope of the segment between two breakpoints.
fn segment_slope(seg: &[(Dyadic, Dyadic)]) -> i64 {
    let dt = &seg[1].0 - &seg[0].0;
    let df = &seg[1].1 - &seg[0].1;
    df.log2_ratio(&dt).expect("slopes are powers of two")
}

impl fmt::Display for PLMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (t, v)) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "({t}, {v})")?;
        }
        Ok(())
    }
}
