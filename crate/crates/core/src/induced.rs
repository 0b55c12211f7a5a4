//! Induced representations of SL(2,ℝ) from the subgroups K, A and N′.
//!
//! The homogeneous space `Ω = G/H` is parametrised by `(u, v)` through the
//! section `s(u, v) = (1/√v)(v, u; 0, 1)`. Every `g` then factors as
//! `g = s(ω)·h` with `h ∈ H`, which gives the action of G on Ω and the
//! factor `r` feeding the character of H.

use std::fmt;

use crate::error::{Error, Result};
use crate::hyper::{HyperNumber, Zone};
use crate::matrix::{RealMat2, SL2};
use crate::scalar::Scalar;

/// The subgroup H that a representation is induced from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InducingSubgroup {
    K,
    A,
    NPrime,
}

impl InducingSubgroup {
    pub const ALL: [InducingSubgroup; 3] = [
        InducingSubgroup::K,
        InducingSubgroup::A,
        InducingSubgroup::NPrime,
    ];

    /// The planar algebra in which Ω is realised: complex for K, double for
    /// A, dual for N′.
    pub fn zone(self) -> Zone {
        match self {
            InducingSubgroup::K => Zone::Elliptic,
            InducingSubgroup::A => Zone::Hyperbolic,
            InducingSubgroup::NPrime => Zone::Parabolic,
        }
    }
}

/// A point of `Ω = G/H`.
#[derive(Clone, Debug, PartialEq)]
pub struct OmegaPoint {
    pub u: Scalar,
    pub v: Scalar,
}

impl OmegaPoint {
    pub fn new(u: impl Into<Scalar>, v: impl Into<Scalar>) -> Self {
        OmegaPoint {
            u: u.into(),
            v: v.into(),
        }
    }

    pub fn to_hyper(&self, zone: Zone) -> HyperNumber {
        HyperNumber::new(zone, self.u.clone(), self.v.clone())
    }
}

impl fmt::Display for OmegaPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.u, self.v)
    }
}

/// The character of H that is induced.
#[derive(Clone, Debug, PartialEq)]
pub enum ReprParams {
    /// `e^{int}` on K.
    K { n: i64 },
    /// `cosh σt + h sinh σt` on A.
    A { sigma: Scalar },
    /// The dual-number valued affine character with parameter κ, induced
    /// from N′.
    N { kappa: Scalar },
}

impl ReprParams {
    pub fn subgroup(&self) -> InducingSubgroup {
        match self {
            ReprParams::K { .. } => InducingSubgroup::K,
            ReprParams::A { .. } => InducingSubgroup::A,
            ReprParams::N { .. } => InducingSubgroup::NPrime,
        }
    }

    pub fn zone(&self) -> Zone {
        self.subgroup().zone()
    }
}

/// `s(u, v) = (1/√v)(v, u; 0, 1)`, defined for `v > 0`.
///
/// Exact when `v` is the square of a rational.
pub fn s_map(w: &OmegaPoint) -> Result<SL2> {
    if !w.v.is_positive() {
        return Err(Error::OutOfDomain("s-map needs v > 0"));
    }
    let r = w.v.sqrt()?;
    let m = RealMat2 {
        a: r.clone(),
        b: w.u.checked_div(&r)?,
        c: r.zero_like(),
        d: r.recip()?,
    };
    SL2::from_real(m)
}

/// Factors `g = s(ω)·h` with `h` in the subgroup.
///
/// K always succeeds. A needs `δ > |γ|` and N′ needs `δ > 0`, where
/// `(γ, δ)` is the bottom row of `g`.
pub fn decompose(g: &SL2, subgroup: InducingSubgroup) -> Result<(OmegaPoint, SL2)> {
    let (alpha, beta, gamma, delta) = (g.a(), g.b(), g.c(), g.d());
    match subgroup {
        InducingSubgroup::K => {
            let q = gamma.square() + delta.square();
            let r = q.sqrt()?;
            let h = RealMat2 {
                a: delta.checked_div(&r)?,
                b: (-gamma).checked_div(&r)?,
                c: gamma.checked_div(&r)?,
                d: delta.checked_div(&r)?,
            };
            let u = (alpha * gamma + beta * delta).checked_div(&q)?;
            Ok((OmegaPoint::new(u, q.recip()?), SL2::from_real(h)?))
        }
        InducingSubgroup::A => {
            if !delta.is_positive() || !(delta - gamma.abs()).is_positive() {
                return Err(Error::NoDecomposition);
            }
            let q = delta.square() - gamma.square();
            let m = q.sqrt()?;
            let h = RealMat2 {
                a: delta.checked_div(&m)?,
                b: gamma.checked_div(&m)?,
                c: gamma.checked_div(&m)?,
                d: delta.checked_div(&m)?,
            };
            let u = (beta * delta - alpha * gamma).checked_div(&q)?;
            Ok((OmegaPoint::new(u, q.recip()?), SL2::from_real(h)?))
        }
        InducingSubgroup::NPrime => {
            if !delta.is_positive() {
                return Err(Error::NoDecomposition);
            }
            let h = RealMat2 {
                a: delta.one_like(),
                b: delta.zero_like(),
                c: gamma.checked_div(delta)?,
                d: delta.one_like(),
            };
            let u = beta.checked_div(delta)?;
            Ok((
                OmegaPoint::new(u, delta.square().recip()?),
                SL2::from_real(h)?,
            ))
        }
    }
}

/// The left action of `g = (a, b; c, d)` on Ω.
///
/// K: `( ((au+b)(cu+d) + acv²)/D, v/D )` with `D = (cu+d)² + (cv)²`;
/// A: the same with `−(cv)²` and `−acv²`;
/// N′: `( (au+b)/(cu+d), v/(cu+d)² )`.
/// Each is the Möbius map of `g` on `u + ιv` in the subgroup's zone.
pub fn g_action(g: &SL2, w: &OmegaPoint, subgroup: InducingSubgroup) -> Result<OmegaPoint> {
    let (a, b, c, d) = (g.a(), g.b(), g.c(), g.d());
    let (u, v) = (&w.u, &w.v);
    let j = c * u + d;
    match subgroup {
        InducingSubgroup::K | InducingSubgroup::A => {
            let cv2 = (c * v).square();
            let acv2 = a * c * v.square();
            let (den, num) = if subgroup == InducingSubgroup::K {
                (j.square() + cv2, (a * u + b) * &j + acv2)
            } else {
                (j.square() - cv2, (a * u + b) * &j - acv2)
            };
            if den.is_zero() {
                return Err(Error::IdealPoint);
            }
            Ok(OmegaPoint::new(
                num.checked_div(&den)?,
                v.checked_div(&den)?,
            ))
        }
        InducingSubgroup::NPrime => {
            if j.is_zero() {
                return Err(Error::IdealPoint);
            }
            Ok(OmegaPoint::new(
                (a * u + b).checked_div(&j)?,
                v.checked_div(&j.square())?,
            ))
        }
    }
}

/// The subgroup factor `r(g⁻¹·s(ω))`, written with `g⁻¹ = (a, b; c, d)`:
///
/// K: `(1/√D)(cu+d, −cv; cv, cu+d)`, A: `(1/√D′)(cu+d, cv; cv, cu+d)` with
/// `D′ = (cu+d)² − (cv)² > 0`, N′: `(1, 0; vc/(cu+d), 1)`.
pub fn r_factor(g: &SL2, w: &OmegaPoint, subgroup: InducingSubgroup) -> Result<SL2> {
    let m = g.inverse();
    let (c, d) = (m.c(), m.d());
    let j = c * &w.u + d;
    let cv = c * &w.v;
    let h = match subgroup {
        InducingSubgroup::K | InducingSubgroup::A => {
            let q = if subgroup == InducingSubgroup::K {
                j.square() + cv.square()
            } else {
                j.square() - cv.square()
            };
            if q.is_zero() {
                return Err(Error::IdealPoint);
            }
            if subgroup == InducingSubgroup::A && (!q.is_positive() || !j.is_positive()) {
                return Err(Error::NoDecomposition);
            }
            let r = q.sqrt()?;
            let off = if subgroup == InducingSubgroup::K {
                -&cv
            } else {
                cv.clone()
            };
            RealMat2 {
                a: j.checked_div(&r)?,
                b: off.checked_div(&r)?,
                c: cv.checked_div(&r)?,
                d: j.checked_div(&r)?,
            }
        }
        InducingSubgroup::NPrime => {
            if j.is_zero() {
                return Err(Error::IdealPoint);
            }
            RealMat2 {
                a: j.one_like(),
                b: j.zero_like(),
                c: cv.checked_div(&j)?,
                d: j.one_like(),
            }
        }
    };
    SL2::from_real(h)
}

/// A character value: a number for K and A, an affine map of dual numbers
/// for the N-type character.
#[derive(Clone, Debug, PartialEq)]
pub enum Character {
    Scalar(HyperNumber),
    /// `w ↦ slope·w + offset`.
    Affine {
        slope: HyperNumber,
        offset: HyperNumber,
    },
}

impl Character {
    pub fn apply(&self, w: &HyperNumber) -> Result<HyperNumber> {
        match self {
            Character::Scalar(x) => x.checked_mul(w),
            Character::Affine { slope, offset } => slope.checked_mul(w)?.checked_add(offset),
        }
    }

    /// `self ∘ other`; for scalar characters this is the product.
    pub fn compose(&self, other: &Character) -> Result<Character> {
        match (self, other) {
            (Character::Scalar(x), Character::Scalar(y)) => {
                Ok(Character::Scalar(x.checked_mul(y)?))
            }
            (
                Character::Affine { slope, offset },
                Character::Affine {
                    slope: s2,
                    offset: o2,
                },
            ) => Ok(Character::Affine {
                slope: slope.checked_mul(s2)?,
                offset: slope.checked_mul(o2)?.checked_add(offset)?,
            }),
            _ => Err(Error::OutOfDomain("characters of different kinds")),
        }
    }
}

/// The character at the subgroup parameter `t`.
///
/// K: `e^{int}`; A: `cosh σt + h sinh σt`; N: `w ↦ (1 + 2pκt)w + κt + pκ²t²`.
pub fn character(params: &ReprParams, t: &Scalar) -> Result<Character> {
    match params {
        ReprParams::K { n } => Ok(Character::Scalar(HyperNumber::exp_imag(
            Zone::Elliptic,
            &(Scalar::int(*n) * t),
        )?)),
        ReprParams::A { sigma } => Ok(Character::Scalar(HyperNumber::exp_imag(
            Zone::Hyperbolic,
            &(sigma * t),
        )?)),
        ReprParams::N { kappa } => {
            let kt = kappa * t;
            Ok(affine_character(&kt))
        }
    }
}

/// `w ↦ (1 + 2p·s)w + s + p·s²`; these compose additively in `s`.
fn affine_character(s: &Scalar) -> Character {
    let z = Zone::Parabolic;
    Character::Affine {
        slope: HyperNumber::new(z, s.one_like(), Scalar::int(2) * s),
        offset: HyperNumber::new(z, s.clone(), s.square()),
    }
}

/// A function on the planar numbers, acted on by a representation.
pub trait TestFunction: Sync {
    fn eval(&self, w: &HyperNumber) -> Result<HyperNumber>;
}

impl<F> TestFunction for F
where
    F: Fn(&HyperNumber) -> Result<HyperNumber> + Sync,
{
    fn eval(&self, w: &HyperNumber) -> Result<HyperNumber> {
        self(w)
    }
}

/// The function `ρ(g)f`, so that representations can be composed.
pub struct Transformed<'a> {
    pub params: &'a ReprParams,
    pub g: &'a SL2,
    pub f: &'a dyn TestFunction,
}

impl TestFunction for Transformed<'_> {
    fn eval(&self, w: &HyperNumber) -> Result<HyperNumber> {
        rep_apply(self.params, self.g, self.f, w)
    }
}

/// Evaluates `[ρ(g)f](w)` with `g⁻¹ = (a, b; c, d)` and `z = (aw+b)/(cw+d)`:
///
/// K: `((c w̄ + d)/(cw + d))^{n/2} f(z)`,
/// A: `((c w̄ + d)/(cw + d))^{σ/2} f(z)`,
/// N: `(1 − 2pτ) f(z) − τ + pτ²` with `τ = κvc/(cu + d)`.
///
/// Integral exponents keep the backend; others take the principal branch
/// in the float backend.
pub fn rep_apply(
    params: &ReprParams,
    g: &SL2,
    f: &dyn TestFunction,
    w: &HyperNumber,
) -> Result<HyperNumber> {
    let zone = params.zone();
    if w.zone != zone {
        return Err(Error::ZoneMismatch {
            left: zone,
            right: w.zone,
        });
    }
    let m = g.inverse();
    let lift = |x: &Scalar| HyperNumber::real(zone, x.clone());
    let (a, b, c, d) = (lift(m.a()), lift(m.b()), lift(m.c()), lift(m.d()));
    let j = c.checked_mul(w)?.checked_add(&d)?;
    let z = a.checked_mul(w)?.checked_add(&b)?.checked_div(&j)?;
    let fz = f.eval(&z)?;
    match params {
        ReprParams::K { n } => {
            let ratio = c.checked_mul(&w.conj())?.checked_add(&d)?.checked_div(&j)?;
            let factor = if n % 2 == 0 {
                ratio.powi(n / 2)?
            } else {
                ratio.powf(&Scalar::ratio(*n, 2))?
            };
            factor.checked_mul(&fz)
        }
        ReprParams::A { sigma } => {
            let ratio = c.checked_mul(&w.conj())?.checked_add(&d)?.checked_div(&j)?;
            let half = sigma * Scalar::ratio(1, 2);
            let factor = match half.as_integer() {
                Some(k) => ratio.powi(k)?,
                None => ratio.powf(&half)?,
            };
            factor.checked_mul(&fz)
        }
        ReprParams::N { kappa } => {
            let ju = m.c() * &w.u + m.d();
            if ju.is_zero() {
                return Err(Error::ZeroDivisor);
            }
            let tau = (kappa * &w.v * m.c()).checked_div(&ju)?;
            affine_character(&-tau).apply(&fz)
        }
    }
}
