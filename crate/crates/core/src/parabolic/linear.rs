use std::ops::Add;

use super::{DualVec, SubgroupTag};
use crate::error::{Error, Result};
use crate::scalar::{ExtScalar, Scalar};

/// Coordinates in which exotic addition becomes componentwise addition.
#[derive(Clone, Debug, PartialEq)]
pub struct LinCoord {
    pub a: Scalar,
    pub b: Scalar,
}

impl LinCoord {
    pub fn new(a: impl Into<Scalar>, b: impl Into<Scalar>) -> Self {
        LinCoord {
            a: a.into(),
            b: b.into(),
        }
    }

    /// The parabolic norm, `a + b`.
    pub fn norm(&self) -> Scalar {
        &self.a + &self.b
    }

    pub fn scale(&self, k: &Scalar) -> LinCoord {
        LinCoord {
            a: &self.a * k,
            b: &self.b * k,
        }
    }
}

impl Add for &LinCoord {
    type Output = LinCoord;
    fn add(self, rhs: &LinCoord) -> LinCoord {
        LinCoord {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
}

impl Add for LinCoord {
    type Output = LinCoord;
    fn add(self, rhs: LinCoord) -> LinCoord {
        &self + &rhs
    }
}

pub(super) fn to_linear(w: &DualVec) -> LinCoord {
    let n = w.pnorm();
    if n.is_zero() {
        return LinCoord::new(n.zero_like(), n.zero_like());
    }
    let arg = w
        .parg()
        .finite()
        .cloned()
        .expect("a nonzero norm has a finite argument");
    let half = Scalar::ratio(1, 2);
    LinCoord {
        a: &n * (n.one_like() + &arg) * &half,
        b: &n * (n.one_like() - &arg) * &half,
    }
}

pub(super) fn from_linear(tag: SubgroupTag, c: &LinCoord) -> Result<DualVec> {
    let n = c.norm();
    let diff = &c.a - &c.b;
    if n.is_zero() {
        return if diff.is_zero() {
            Ok(DualVec::zero(tag))
        } else {
            Err(Error::IdealPoint)
        };
    }
    let arg = diff.checked_div(&n)?;
    DualVec::from_arg_norm(tag, &ExtScalar::Finite(arg), &n)
}
