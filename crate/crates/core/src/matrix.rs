//! Real and hypercomplex 2×2 matrices, the four one-parameter subgroups of
//! SL(2,ℝ), Cayley conjugation and the Möbius action on homogeneous pairs.

use std::fmt;

use crate::error::{Error, Result};
use crate::hyper::{HyperNumber, Zone};
use crate::scalar::Scalar;

/// The one-parameter subgroups of SL(2,ℝ).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Subgroup {
    K,
    N,
    NPrime,
    A,
}

impl Subgroup {
    pub const ALL: [Subgroup; 4] = [Subgroup::K, Subgroup::N, Subgroup::NPrime, Subgroup::A];
}

/// A general real 2×2 matrix `(a, b; c, d)`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealMat2 {
    pub a: Scalar,
    pub b: Scalar,
    pub c: Scalar,
    pub d: Scalar,
}

impl RealMat2 {
    pub fn new(
        a: impl Into<Scalar>,
        b: impl Into<Scalar>,
        c: impl Into<Scalar>,
        d: impl Into<Scalar>,
    ) -> Self {
        RealMat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        }
    }

    pub fn zero() -> Self {
        RealMat2::new(0, 0, 0, 0)
    }

    pub fn mul(&self, rhs: &RealMat2) -> RealMat2 {
        RealMat2 {
            a: &self.a * &rhs.a + &self.b * &rhs.c,
            b: &self.a * &rhs.b + &self.b * &rhs.d,
            c: &self.c * &rhs.a + &self.d * &rhs.c,
            d: &self.c * &rhs.b + &self.d * &rhs.d,
        }
    }

    pub fn det(&self) -> Scalar {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> Scalar {
        &self.a + &self.d
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }
}

/// The zero-trace generator of a subgroup in the Lie algebra sl₂.
pub fn generator(which: Subgroup) -> RealMat2 {
    match which {
        Subgroup::K => RealMat2::new(0, 1, -1, 0),
        Subgroup::N => RealMat2::new(0, 1, 0, 0),
        Subgroup::NPrime => RealMat2::new(0, 0, 1, 0),
        Subgroup::A => RealMat2::new(0, 1, 1, 0),
    }
}

/// A real matrix with determinant 1.
#[derive(Clone, Debug, PartialEq)]
pub struct SL2(RealMat2);

impl SL2 {
    /// Checks `ad − bc = 1`, exactly on rationals and within ε on floats.
    pub fn new(
        a: impl Into<Scalar>,
        b: impl Into<Scalar>,
        c: impl Into<Scalar>,
        d: impl Into<Scalar>,
    ) -> Result<Self> {
        SL2::from_real(RealMat2::new(a, b, c, d))
    }

    pub fn from_real(m: RealMat2) -> Result<Self> {
        if m.det().is_one() {
            Ok(SL2(m))
        } else {
            Err(Error::NotUnimodular)
        }
    }

    pub(crate) fn from_real_unchecked(m: RealMat2) -> Self {
        SL2(m)
    }

    pub fn identity() -> Self {
        SL2(RealMat2::new(1, 0, 0, 1))
    }

    pub fn a(&self) -> &Scalar {
        &self.0.a
    }
    pub fn b(&self) -> &Scalar {
        &self.0.b
    }
    pub fn c(&self) -> &Scalar {
        &self.0.c
    }
    pub fn d(&self) -> &Scalar {
        &self.0.d
    }

    pub fn as_real(&self) -> &RealMat2 {
        &self.0
    }

    pub fn mul(&self, rhs: &SL2) -> SL2 {
        SL2(self.0.mul(&rhs.0))
    }

    /// The adjugate, which is the inverse since the determinant is 1.
    pub fn inverse(&self) -> SL2 {
        SL2(RealMat2 {
            a: self.0.d.clone(),
            b: -&self.0.b,
            c: -&self.0.c,
            d: self.0.a.clone(),
        })
    }

    /// Entrywise embedding `x ↦ x + ι·0` into a zone.
    pub fn lift(&self, zone: Zone) -> Mat2H {
        Mat2H {
            zone,
            e11: HyperNumber::real(zone, self.0.a.clone()),
            e12: HyperNumber::real(zone, self.0.b.clone()),
            e21: HyperNumber::real(zone, self.0.c.clone()),
            e22: HyperNumber::real(zone, self.0.d.clone()),
        }
    }

    pub fn to_float(&self) -> SL2 {
        SL2(RealMat2 {
            a: self.0.a.to_float(),
            b: self.0.b.to_float(),
            c: self.0.c.to_float(),
            d: self.0.d.to_float(),
        })
    }
}

impl fmt::Display for SL2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}; {}, {})",
            self.0.a, self.0.b, self.0.c, self.0.d
        )
    }
}

/// `exp(t·X)` for the generator `X` of `which`.
///
/// N and N′ stay exact; K and A need the float backend unless `t = 0`.
pub fn subgroup_element(which: Subgroup, t: &Scalar) -> Result<SL2> {
    let one = t.one_like();
    let zero = t.zero_like();
    let m = match which {
        Subgroup::N => RealMat2::new(one.clone(), t.clone(), zero, one),
        Subgroup::NPrime => RealMat2::new(one.clone(), zero, t.clone(), one),
        Subgroup::K => {
            let c = t.transcendental(f64::cos, Some(1), "cos")?;
            let s = t.transcendental(f64::sin, Some(0), "sin")?;
            RealMat2::new(c.clone(), s.clone(), -s, c)
        }
        Subgroup::A => {
            let c = t.transcendental(f64::cosh, Some(1), "cosh")?;
            let s = t.transcendental(f64::sinh, Some(0), "sinh")?;
            RealMat2::new(c.clone(), s.clone(), s, c)
        }
    };
    Ok(SL2::from_real_unchecked(m))
}

/// Parabolic cosine `1 − t²`, the real part of the rotated point `−p`.
pub fn parabolic_cos(t: &Scalar) -> Scalar {
    t.one_like() - t.square()
}

/// Parabolic sine `t`.
pub fn parabolic_sin(t: &Scalar) -> Scalar {
    t.clone()
}

/// A 2×2 matrix with entries in one of the planar algebras.
#[derive(Clone, Debug, PartialEq)]
pub struct Mat2H {
    pub zone: Zone,
    pub e11: HyperNumber,
    pub e12: HyperNumber,
    pub e21: HyperNumber,
    pub e22: HyperNumber,
}

impl Mat2H {
    pub fn new(
        e11: HyperNumber,
        e12: HyperNumber,
        e21: HyperNumber,
        e22: HyperNumber,
    ) -> Result<Self> {
        let zone = e11.zone;
        for e in [&e12, &e21, &e22] {
            if e.zone != zone {
                return Err(Error::ZoneMismatch {
                    left: zone,
                    right: e.zone,
                });
            }
        }
        Ok(Mat2H {
            zone,
            e11,
            e12,
            e21,
            e22,
        })
    }

    pub fn identity(zone: Zone) -> Self {
        Mat2H {
            zone,
            e11: HyperNumber::one(zone),
            e12: HyperNumber::zero(zone),
            e21: HyperNumber::zero(zone),
            e22: HyperNumber::one(zone),
        }
    }

    fn check_zone(&self, zone: Zone) -> Result<()> {
        if self.zone == zone {
            Ok(())
        } else {
            Err(Error::ZoneMismatch {
                left: self.zone,
                right: zone,
            })
        }
    }

    pub fn checked_mul(&self, rhs: &Mat2H) -> Result<Mat2H> {
        self.check_zone(rhs.zone)?;
        let dot = |x: &HyperNumber, y: &HyperNumber, z: &HyperNumber, w: &HyperNumber| {
            x.checked_mul(y)?.checked_add(&z.checked_mul(w)?)
        };
        Ok(Mat2H {
            zone: self.zone,
            e11: dot(&self.e11, &rhs.e11, &self.e12, &rhs.e21)?,
            e12: dot(&self.e11, &rhs.e12, &self.e12, &rhs.e22)?,
            e21: dot(&self.e21, &rhs.e11, &self.e22, &rhs.e21)?,
            e22: dot(&self.e21, &rhs.e12, &self.e22, &rhs.e22)?,
        })
    }

    pub fn det(&self) -> HyperNumber {
        let ad = self
            .e11
            .checked_mul(&self.e22)
            .expect("entries share a zone");
        let bc = self
            .e12
            .checked_mul(&self.e21)
            .expect("entries share a zone");
        ad.checked_sub(&bc).expect("entries share a zone")
    }

    pub fn adjugate(&self) -> Mat2H {
        Mat2H {
            zone: self.zone,
            e11: self.e22.clone(),
            e12: self.e12.neg(),
            e21: self.e21.neg(),
            e22: self.e11.clone(),
        }
    }

    /// `adj(m)·det(m)⁻¹`; fails when the determinant is a zero divisor.
    pub fn inverse(&self) -> Result<Mat2H> {
        let k = self.det().invert()?;
        let adj = self.adjugate();
        let scale = |e: &HyperNumber| e.checked_mul(&k);
        Ok(Mat2H {
            zone: self.zone,
            e11: scale(&adj.e11)?,
            e12: scale(&adj.e12)?,
            e21: scale(&adj.e21)?,
            e22: scale(&adj.e22)?,
        })
    }

    /// Möbius action on a homogeneous pair: `[a·num + b·den : c·num + d·den]`.
    pub fn apply(&self, w: &MoebiusPoint) -> Result<MoebiusPoint> {
        self.check_zone(w.zone())?;
        let num = self
            .e11
            .checked_mul(&w.num)?
            .checked_add(&self.e12.checked_mul(&w.den)?)?;
        let den = self
            .e21
            .checked_mul(&w.num)?
            .checked_add(&self.e22.checked_mul(&w.den)?)?;
        MoebiusPoint::new(num, den)
    }
}

impl fmt::Display for Mat2H {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}; {}, {})",
            self.e11, self.e12, self.e21, self.e22
        )
    }
}

/// The Cayley matrix of a zone. All three have determinant 1; the parabolic
/// one is kept exact without the `1/√2` factor.
pub fn cayley_matrix(zone: Zone) -> Mat2H {
    match zone {
        Zone::Parabolic => Mat2H {
            zone,
            e11: HyperNumber::new(zone, 1, 0),
            e12: HyperNumber::new(zone, 0, -1),
            e21: HyperNumber::new(zone, 0, -1),
            e22: HyperNumber::new(zone, 1, 0),
        },
        Zone::Elliptic | Zone::Hyperbolic => {
            let k = std::f64::consts::FRAC_1_SQRT_2;
            let off = if zone == Zone::Elliptic { -k } else { k };
            Mat2H {
                zone,
                e11: HyperNumber::new(zone, k, 0.0),
                e12: HyperNumber::new(zone, 0.0, off),
                e21: HyperNumber::new(zone, 0.0, -k),
                e22: HyperNumber::new(zone, k, 0.0),
            }
        }
    }
}

/// `C·m·C⁻¹` with `C` the Cayley matrix of `zone`.
pub fn cayley_conjugate(m: &SL2, zone: Zone) -> Mat2H {
    let c = cayley_matrix(zone);
    let inv = c.adjugate();
    c.checked_mul(&m.lift(zone))
        .and_then(|x| x.checked_mul(&inv))
        .expect("all factors share a zone")
}

/// A point `[num : den]` of the projective line over a planar algebra.
#[derive(Clone, Debug)]
pub struct MoebiusPoint {
    pub num: HyperNumber,
    pub den: HyperNumber,
}

impl MoebiusPoint {
    pub fn new(num: HyperNumber, den: HyperNumber) -> Result<Self> {
        if num.zone != den.zone {
            return Err(Error::ZoneMismatch {
                left: num.zone,
                right: den.zone,
            });
        }
        if num.is_zero() && den.is_zero() {
            return Err(Error::DegenerateMap);
        }
        Ok(MoebiusPoint { num, den })
    }

    /// `[w : 1]`.
    pub fn affine(w: HyperNumber) -> Self {
        let den = HyperNumber::one(w.zone);
        MoebiusPoint { num: w, den }
    }

    pub fn zone(&self) -> Zone {
        self.num.zone
    }

    /// `num·den⁻¹`, or `IdealPoint` when the denominator is not invertible.
    pub fn to_affine(&self) -> Result<HyperNumber> {
        match self.den.invert() {
            Ok(inv) => self.num.checked_mul(&inv),
            Err(_) => Err(Error::IdealPoint),
        }
    }

    /// Homogeneous equality by cross-multiplication `num·den′ = num′·den`.
    pub fn equivalent(&self, other: &MoebiusPoint) -> bool {
        match (
            self.num.checked_mul(&other.den),
            other.num.checked_mul(&self.den),
        ) {
            (Ok(x), Ok(y)) => x == y,
            _ => false,
        }
    }
}

impl fmt::Display for MoebiusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} : {}]", self.num, self.den)
    }
}

/// Möbius action of a real unimodular matrix, lifted to the point's zone.
pub fn moebius_apply(m: &SL2, w: &MoebiusPoint) -> Result<MoebiusPoint> {
    m.lift(w.zone()).apply(w)
}
