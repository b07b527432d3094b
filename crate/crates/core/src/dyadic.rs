//! Exact dyadic rationals `n / 2^k`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A dyadic rational `numerator / 2^exponent` kept in lowest terms: the
/// numerator is odd, or the value is zero with exponent zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numerator: BigInt,
    exponent: u64,
}

impl Dyadic {
    /// Builds `numerator / 2^exponent`; a negative exponent is rejected.
    pub fn new(numerator: impl Into<BigInt>, exponent: i64) -> Result<Self> {
        if exponent < 0 {
            return Err(Error::invalid(format!("dyadic exponent must be non-negative, got {exponent}")));
        }
        Ok(Self::normalized(numerator.into(), exponent as u64))
    }

    fn normalized(mut numerator: BigInt, mut exponent: u64) -> Self {
        if numerator.is_zero() {
            return Dyadic { numerator, exponent: 0 };
        }
        let twos = numerator.trailing_zeros().unwrap_or(0).min(exponent);
        numerator >>= twos;
        exponent -= twos;
        Dyadic { numerator, exponent }
    }

    pub fn zero() -> Self {
        Dyadic { numerator: BigInt::zero(), exponent: 0 }
    }

    pub fn one() -> Self {
        Dyadic { numerator: BigInt::one(), exponent: 0 }
    }

    /// `2^-k`
    pub fn inv_pow2(k: u64) -> Self {
        Dyadic { numerator: BigInt::one(), exponent: k }
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.numerator.is_positive()
    }

    /// Multiplies by `2^k` for any integer `k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        if k >= 0 {
            let k = k as u64;
            if k <= self.exponent {
                Dyadic { numerator: self.numerator.clone(), exponent: self.exponent - k }
            } else {
                Dyadic { numerator: &self.numerator << (k - self.exponent), exponent: 0 }
            }
        } else {
            Dyadic { numerator: self.numerator.clone(), exponent: self.exponent + k.unsigned_abs() }
        }
    }

    /// `1 - self`
    pub fn complement(&self) -> Self {
        Dyadic::one() - self.clone()
    }

    /// If `self / other` is an integer power of two (both positive), returns its
    /// base-2 logarithm.
    pub fn log2_ratio(&self, other: &Dyadic) -> Option<i64> {
        if !self.is_positive() || !other.is_positive() {
            return None;
        }
        // Both numerators are odd, so the ratio is a power of two iff they agree.
        (self.numerator == other.numerator).then(|| other.exponent as i64 - self.exponent as i64)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(self.numerator.clone(), BigInt::one() << self.exponent)
    }

    /// Converts a rational whose reduced denominator is a power of two.
    pub fn from_rational(r: &BigRational) -> Option<Self> {
        let denom = r.denom();
        if denom.is_negative() || (denom & (denom - BigInt::one())) != BigInt::zero() {
            return None;
        }
        let exponent = denom.bits() - 1;
        Some(Self::normalized(r.numer().clone(), exponent))
    }

    fn aligned(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, u64) {
        let e = a.exponent.max(b.exponent);
        (&a.numerator << (e - a.exponent), &b.numerator << (e - b.exponent), e)
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Self {
        Dyadic::normalized(BigInt::from(n), 0)
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: Dyadic) -> Dyadic {
        let (a, b, e) = Dyadic::aligned(&self, &rhs);
        Dyadic::normalized(a + b, e)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: Dyadic) -> Dyadic {
        let (a, b, e) = Dyadic::aligned(&self, &rhs);
        Dyadic::normalized(a - b, e)
    }
}

impl<'a> Add<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = Dyadic::aligned(self, rhs);
        Dyadic::normalized(a + b, e)
    }
}

impl<'a> Sub<&'a Dyadic> for &'a Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let (a, b, e) = Dyadic::aligned(self, rhs);
        Dyadic::normalized(a - b, e)
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { numerator: -self.numerator, exponent: self.exponent }
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = Dyadic::aligned(self, other);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, BigInt::one() << self.exponent)
        }
    }
}
