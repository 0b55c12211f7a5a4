//! Real scalars with two interchangeable backends.
//!
//! Every real parameter in the crate is a [`Scalar`]: either an exact
//! rational (big-integer numerator and denominator) or a binary float.
//! Exact values keep the algebraic identities assertable with `==`;
//! floats are used wherever a transcendental function is involved.
//!
//! Arithmetic between two exact values stays exact. As soon as a float
//! enters an expression the result is a float. Float comparisons use the
//! absolute tolerance [`EPSILON`].

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Absolute tolerance for float comparisons.
pub const EPSILON: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Float,
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Exact(BigRational),
    Float(f64),
}

impl Scalar {
    pub fn int(n: i64) -> Self {
        Scalar::Exact(BigRational::from_integer(BigInt::from(n)))
    }

    /// Exact `num / den`. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        Scalar::Exact(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn float(x: f64) -> Self {
        Scalar::Float(x)
    }

    pub fn zero() -> Self {
        Scalar::int(0)
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    /// Zero in the same backend as `self`.
    pub fn zero_like(&self) -> Self {
        match self {
            Scalar::Exact(_) => Scalar::zero(),
            Scalar::Float(_) => Scalar::Float(0.0),
        }
    }

    /// One in the same backend as `self`.
    pub fn one_like(&self) -> Self {
        match self {
            Scalar::Exact(_) => Scalar::one(),
            Scalar::Float(_) => Scalar::Float(1.0),
        }
    }

    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Exact(_) => Backend::Exact,
            Scalar::Float(_) => Backend::Float,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Scalar::Exact(_))
    }

    pub fn to_f64(&self) -> f64 {
        match self {
            Scalar::Exact(q) => q.to_f64().unwrap_or(f64::NAN),
            Scalar::Float(x) => *x,
        }
    }

    pub fn to_float(&self) -> Scalar {
        Scalar::Float(self.to_f64())
    }

    /// Zero test; floats within [`EPSILON`] of zero count as zero.
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_zero(),
            Scalar::Float(x) => x.abs() <= EPSILON,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_one(),
            Scalar::Float(x) => (x - 1.0).abs() <= EPSILON,
        }
    }

    /// Strictly positive (beyond tolerance for floats).
    pub fn is_positive(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_positive(),
            Scalar::Float(x) => *x > EPSILON,
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Exact(q) => q.is_negative(),
            Scalar::Float(x) => *x < -EPSILON,
        }
    }

    pub fn abs(&self) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(q.abs()),
            Scalar::Float(x) => Scalar::Float(x.abs()),
        }
    }

    /// The value as an `i64` when it is (within tolerance) an integer.
    pub fn as_integer(&self) -> Option<i64> {
        match self {
            Scalar::Exact(q) if q.is_integer() => q.to_integer().to_i64(),
            Scalar::Exact(_) => None,
            Scalar::Float(x) => {
                let r = x.round();
                ((x - r).abs() <= EPSILON && r.abs() < 9.0e15).then_some(r as i64)
            }
        }
    }

    pub fn recip(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match self {
            Scalar::Exact(q) => Scalar::Exact(q.recip()),
            Scalar::Float(x) => Scalar::Float(1.0 / x),
        })
    }

    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar> {
        Ok(self * &rhs.recip()?)
    }

    pub fn square(&self) -> Scalar {
        self * self
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn powi(&self, e: i64) -> Result<Scalar> {
        let base = if e < 0 { self.recip()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = self.one_like();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Square root. An exact perfect square stays exact; any other exact
    /// input is promoted to the float backend.
    pub fn sqrt(&self) -> Result<Scalar> {
        if self.is_negative() {
            return Err(Error::OutOfDomain("square root of a negative number"));
        }
        match self {
            Scalar::Exact(q) => {
                if let Some(root) = exact_sqrt(q) {
                    Ok(Scalar::Exact(root))
                } else {
                    Ok(Scalar::Float(self.to_f64().sqrt()))
                }
            }
            Scalar::Float(x) => Ok(Scalar::Float(x.max(0.0).sqrt())),
        }
    }

    /// Applies a transcendental function. Exact inputs are only accepted
    /// when `f(0)` is requested and its exact value is supplied.
    pub(crate) fn transcendental(
        &self,
        f: fn(f64) -> f64,
        at_zero: Option<i64>,
        what: &'static str,
    ) -> Result<Scalar> {
        match self {
            Scalar::Float(x) => Ok(Scalar::Float(f(*x))),
            Scalar::Exact(q) if q.is_zero() => match at_zero {
                Some(v) => Ok(Scalar::int(v)),
                None => Err(Error::BackendMismatch(what)),
            },
            Scalar::Exact(_) => Err(Error::BackendMismatch(what)),
        }
    }

    /// Order with the float tolerance: values within [`EPSILON`] compare equal.
    pub fn approx_cmp(&self, other: &Scalar) -> Ordering {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a.cmp(b),
            _ => {
                let d = self.to_f64() - other.to_f64();
                if d.abs() <= EPSILON {
                    Ordering::Equal
                } else if d < 0.0 {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }
}

fn exact_sqrt(q: &BigRational) -> Option<BigRational> {
    let n = q.numer();
    let d = q.denom();
    let rn = n.sqrt();
    let rd = d.sqrt();
    (&rn * &rn == *n && &rd * &rd == *d).then(|| BigRational::new(rn, rd))
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => a == b,
            _ => (self.to_f64() - other.to_f64()).abs() <= EPSILON,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Scalar::Exact(a), Scalar::Exact(b)) => Some(a.cmp(b)),
            _ => self.to_f64().partial_cmp(&other.to_f64()),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl<'a, 'b> $trait<&'b Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Exact(a), Scalar::Exact(b)) => Scalar::Exact(a $op b),
                    _ => Scalar::Float(self.to_f64() $op rhs.to_f64()),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                &self $op &rhs
            }
        }
        impl<'b> $trait<&'b Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'b Scalar) -> Scalar {
                &self $op rhs
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self $op &rhs
            }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Exact(q) => Scalar::Exact(-q),
            Scalar::Float(x) => Scalar::Float(-x),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Self {
        Scalar::int(n.into())
    }
}

impl From<f64> for Scalar {
    fn from(x: f64) -> Self {
        Scalar::Float(x)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Exact(q)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Exact(q) => write!(f, "{q}"),
            Scalar::Float(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Integers, fractions `p/q` and plain decimals parse exactly;
    /// anything else (exponents, `inf`, `nan`) parses as a float.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Config(format!("not a number: {s:?}"));
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Scalar::Exact(BigRational::new(n, d)));
        }
        let plain = !s.is_empty()
            && s.chars()
                .enumerate()
                .all(|(i, c)| c.is_ascii_digit() || c == '.' || (i == 0 && (c == '-' || c == '+')))
            && s.matches('.').count() <= 1
            && s.chars().any(|c| c.is_ascii_digit());
        if plain {
            let (int_part, frac_part) = s.split_once('.').unwrap_or((s, ""));
            let digits = format!("{int_part}{frac_part}");
            let digits = match digits.as_str() {
                "-" | "+" | "" => return Err(bad()),
                d => d,
            };
            let num: BigInt = digits.parse().map_err(|_| bad())?;
            let den = num_traits::pow(BigInt::from(10), frac_part.len());
            return Ok(Scalar::Exact(BigRational::new(num, den)));
        }
        let x: f64 = s.parse().map_err(|_| bad())?;
        Ok(Scalar::Float(x))
    }
}

/// A real number extended by a single unsigned point at infinity.
#[derive(Clone, Debug)]
pub enum ExtScalar {
    Finite(Scalar),
    Infinity,
}

impl ExtScalar {
    pub fn finite(&self) -> Option<&Scalar> {
        match self {
            ExtScalar::Finite(x) => Some(x),
            ExtScalar::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtScalar::Infinity)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, ExtScalar::Finite(x) if x.is_zero())
    }

    /// `1/0 = ∞` and `1/∞ = 0`.
    pub fn recip(&self) -> ExtScalar {
        match self {
            ExtScalar::Infinity => ExtScalar::Finite(Scalar::zero()),
            ExtScalar::Finite(x) if x.is_zero() => ExtScalar::Infinity,
            ExtScalar::Finite(x) => ExtScalar::Finite(x.recip().expect("nonzero")),
        }
    }

    /// Negation; `-∞` is the same point as `∞`.
    pub fn neg(&self) -> ExtScalar {
        match self {
            ExtScalar::Infinity => ExtScalar::Infinity,
            ExtScalar::Finite(x) => ExtScalar::Finite(-x),
        }
    }

    pub fn add(&self, rhs: &ExtScalar) -> Result<ExtScalar> {
        match (self, rhs) {
            (ExtScalar::Finite(a), ExtScalar::Finite(b)) => Ok(ExtScalar::Finite(a + b)),
            (ExtScalar::Infinity, ExtScalar::Infinity) => {
                Err(Error::OutOfDomain("sum of two infinities"))
            }
            _ => Ok(ExtScalar::Infinity),
        }
    }

    pub fn mul(&self, rhs: &ExtScalar) -> Result<ExtScalar> {
        match (self, rhs) {
            (ExtScalar::Finite(a), ExtScalar::Finite(b)) => Ok(ExtScalar::Finite(a * b)),
            (ExtScalar::Finite(x), ExtScalar::Infinity)
            | (ExtScalar::Infinity, ExtScalar::Finite(x))
                if x.is_zero() =>
            {
                Err(Error::OutOfDomain("zero times infinity"))
            }
            _ => Ok(ExtScalar::Infinity),
        }
    }
}

impl PartialEq for ExtScalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (ExtScalar::Finite(a), ExtScalar::Finite(b)) => a == b,
            (ExtScalar::Infinity, ExtScalar::Infinity) => true,
            _ => false,
        }
    }
}

impl From<Scalar> for ExtScalar {
    fn from(x: Scalar) -> Self {
        ExtScalar::Finite(x)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtScalar::Finite(x) => write!(f, "{x}"),
            ExtScalar::Infinity => write!(f, "∞"),
        }
    }
}
