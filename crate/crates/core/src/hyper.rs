//! The planar number systems `u + ιv` with `ι² ∈ {−1, 0, +1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Which imaginary unit is in use: its square `σ` selects the geometry.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Zone {
    /// `i² = −1`, complex numbers.
    Elliptic,
    /// `p² = 0`, dual numbers.
    Parabolic,
    /// `h² = +1`, double (split-complex) numbers.
    Hyperbolic,
}

impl Zone {
    pub const ALL: [Zone; 3] = [Zone::Elliptic, Zone::Parabolic, Zone::Hyperbolic];

    pub fn sigma(self) -> i64 {
        match self {
            Zone::Elliptic => -1,
            Zone::Parabolic => 0,
            Zone::Hyperbolic => 1,
        }
    }

    pub fn from_sigma(sigma: i64) -> Option<Zone> {
        match sigma {
            -1 => Some(Zone::Elliptic),
            0 => Some(Zone::Parabolic),
            1 => Some(Zone::Hyperbolic),
            _ => None,
        }
    }

    fn unit_symbol(self) -> char {
        match self {
            Zone::Elliptic => 'i',
            Zone::Parabolic => 'p',
            Zone::Hyperbolic => 'h',
        }
    }
}

/// `u + ιv` in the algebra selected by `zone`. Immutable: every operation
/// returns a new value.
#[derive(Clone, Debug, PartialEq)]
pub struct HyperNumber {
    pub zone: Zone,
    pub u: Scalar,
    pub v: Scalar,
}

impl HyperNumber {
    pub fn new(zone: Zone, u: impl Into<Scalar>, v: impl Into<Scalar>) -> Self {
        HyperNumber {
            zone,
            u: u.into(),
            v: v.into(),
        }
    }

    /// The canonical embedding `x ↦ x + ι·0`.
    pub fn real(zone: Zone, x: impl Into<Scalar>) -> Self {
        let x = x.into();
        let v = x.zero_like();
        HyperNumber { zone, u: x, v }
    }

    pub fn zero(zone: Zone) -> Self {
        HyperNumber::new(zone, 0, 0)
    }

    pub fn one(zone: Zone) -> Self {
        HyperNumber::new(zone, 1, 0)
    }

    /// The imaginary unit `ι` itself.
    pub fn unit(zone: Zone) -> Self {
        HyperNumber::new(zone, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    fn check_zone(&self, rhs: &HyperNumber) -> Result<()> {
        if self.zone == rhs.zone {
            Ok(())
        } else {
            Err(Error::ZoneMismatch {
                left: self.zone,
                right: rhs.zone,
            })
        }
    }

    pub fn checked_add(&self, rhs: &HyperNumber) -> Result<HyperNumber> {
        self.check_zone(rhs)?;
        Ok(HyperNumber {
            zone: self.zone,
            u: &self.u + &rhs.u,
            v: &self.v + &rhs.v,
        })
    }

    pub fn checked_sub(&self, rhs: &HyperNumber) -> Result<HyperNumber> {
        self.check_zone(rhs)?;
        Ok(HyperNumber {
            zone: self.zone,
            u: &self.u - &rhs.u,
            v: &self.v - &rhs.v,
        })
    }

    /// `(u₁+ιv₁)(u₂+ιv₂) = (u₁u₂ + σv₁v₂) + ι(u₁v₂ + u₂v₁)`.
    pub fn checked_mul(&self, rhs: &HyperNumber) -> Result<HyperNumber> {
        self.check_zone(rhs)?;
        let vv = &self.v * &rhs.v;
        let u = match self.zone.sigma() {
            -1 => &self.u * &rhs.u - vv,
            0 => &self.u * &rhs.u + vv.zero_like(),
            _ => &self.u * &rhs.u + vv,
        };
        Ok(HyperNumber {
            zone: self.zone,
            u,
            v: &self.u * &rhs.v + &rhs.u * &self.v,
        })
    }

    pub fn checked_div(&self, rhs: &HyperNumber) -> Result<HyperNumber> {
        self.checked_mul(&rhs.invert()?)
    }

    pub fn neg(&self) -> HyperNumber {
        HyperNumber {
            zone: self.zone,
            u: -&self.u,
            v: -&self.v,
        }
    }

    pub fn scale(&self, k: &Scalar) -> HyperNumber {
        HyperNumber {
            zone: self.zone,
            u: &self.u * k,
            v: &self.v * k,
        }
    }

    /// `u − ιv`.
    pub fn conj(&self) -> HyperNumber {
        HyperNumber {
            zone: self.zone,
            u: self.u.clone(),
            v: -&self.v,
        }
    }

    /// `w·w̄ = u² − σv²`.
    pub fn modulus_sq(&self) -> Scalar {
        let uu = self.u.square();
        let vv = self.v.square();
        match self.zone.sigma() {
            -1 => uu + vv,
            0 => uu + vv.zero_like(),
            _ => uu - vv,
        }
    }

    /// `w̄ / (u² − σv²)`.
    pub fn invert(&self) -> Result<HyperNumber> {
        let m = self.modulus_sq();
        if m.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let k = m.recip()?;
        Ok(self.conj().scale(&k))
    }

    /// Integer power; negative exponents go through [`HyperNumber::invert`].
    pub fn powi(&self, e: i64) -> Result<HyperNumber> {
        let base = if e < 0 { self.invert()? } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = HyperNumber::real(self.zone, self.u.one_like());
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.checked_mul(&sq)?;
            }
            sq = sq.checked_mul(&sq)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Principal branch of `self^e` for a real exponent.
    ///
    /// Integer exponents use repeated multiplication and keep the backend.
    /// Otherwise the elliptic case goes through polar form, the hyperbolic
    /// case requires `u > |v|` (the branch containing 1), and the parabolic
    /// case requires `u > 0` and uses `(u + pv)^e = u^e + p·e·u^(e−1)·v`.
    pub fn powf(&self, e: &Scalar) -> Result<HyperNumber> {
        if let Some(n) = e.as_integer() {
            return self.powi(n);
        }
        let e = e.to_f64();
        let (u, v) = (self.u.to_f64(), self.v.to_f64());
        let (nu, nv) = match self.zone {
            Zone::Elliptic => {
                let r = u.hypot(v);
                if r == 0.0 {
                    return Err(Error::BranchUndefined);
                }
                let theta = v.atan2(u);
                let re = r.powf(e);
                (re * (e * theta).cos(), re * (e * theta).sin())
            }
            Zone::Hyperbolic => {
                if u <= v.abs() {
                    return Err(Error::BranchUndefined);
                }
                let rho = (u * u - v * v).sqrt();
                let phi = (v / u).atanh();
                let re = rho.powf(e);
                (re * (e * phi).cosh(), re * (e * phi).sinh())
            }
            Zone::Parabolic => {
                if u <= 0.0 {
                    return Err(Error::BranchUndefined);
                }
                (u.powf(e), e * u.powf(e - 1.0) * v)
            }
        };
        Ok(HyperNumber::new(self.zone, nu, nv))
    }

    /// `exp(ιt)`: `cos t + i sin t`, `1 + pt`, or `cosh t + h sinh t`.
    ///
    /// The parabolic case is exact for every `t`; the other two need the
    /// float backend unless `t = 0`.
    pub fn exp_imag(zone: Zone, t: &Scalar) -> Result<HyperNumber> {
        match zone {
            Zone::Parabolic => Ok(HyperNumber {
                zone,
                u: t.one_like(),
                v: t.clone(),
            }),
            Zone::Elliptic => Ok(HyperNumber {
                zone,
                u: t.transcendental(f64::cos, Some(1), "cos")?,
                v: t.transcendental(f64::sin, Some(0), "sin")?,
            }),
            Zone::Hyperbolic => Ok(HyperNumber {
                zone,
                u: t.transcendental(f64::cosh, Some(1), "cosh")?,
                v: t.transcendental(f64::sinh, Some(0), "sinh")?,
            }),
        }
    }

    pub fn to_float(&self) -> HyperNumber {
        HyperNumber {
            zone: self.zone,
            u: self.u.to_float(),
            v: self.v.to_float(),
        }
    }
}

impl fmt::Display for HyperNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let unit = self.zone.unit_symbol();
        if self.v.is_negative() {
            write!(f, "{} - {}{}", self.u, unit, -&self.v)
        } else {
            write!(f, "{} + {}{}", self.u, unit, self.v)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hn(zone: Zone, u: i64, v: i64) -> HyperNumber {
        HyperNumber::new(zone, u, v)
    }

    #[test]
    fn add_examples() {
        let p = Zone::Parabolic;
        assert_eq!(hn(p, 1, 2).checked_add(&hn(p, 3, 4)).unwrap(), hn(p, 4, 6));
        assert_eq!(
            hn(p, 1, 2).checked_add(&HyperNumber::zero(p)).unwrap(),
            hn(p, 1, 2)
        );
        let h = Zone::Hyperbolic;
        assert_eq!(hn(h, 1, 1).checked_add(&hn(h, 1, -1)).unwrap(), hn(h, 2, 0));
    }

    #[test]
    fn zone_mismatch_is_rejected() {
        let err = hn(Zone::Elliptic, 1, 0).checked_mul(&hn(Zone::Parabolic, 1, 0));
        assert_eq!(
            err,
            Err(Error::ZoneMismatch {
                left: Zone::Elliptic,
                right: Zone::Parabolic
            })
        );
        assert!(hn(Zone::Elliptic, 1, 0)
            .checked_add(&hn(Zone::Hyperbolic, 1, 0))
            .is_err());
    }

    #[test]
    fn unit_squares() {
        for zone in Zone::ALL {
            let iota = HyperNumber::unit(zone);
            let sq = iota.checked_mul(&iota).unwrap();
            assert_eq!(sq, HyperNumber::real(zone, zone.sigma()));
        }
        // zero divisor in the hyperbolic plane
        let h = Zone::Hyperbolic;
        assert_eq!(
            hn(h, 1, 1).checked_mul(&hn(h, 1, -1)).unwrap(),
            HyperNumber::zero(h)
        );
    }

    #[test]
    fn conjugation() {
        let p = Zone::Parabolic;
        assert_eq!(hn(p, 2, 3).conj(), hn(p, 2, -3));
        assert_eq!(hn(p, 2, 3).conj().conj(), hn(p, 2, 3));
        for zone in Zone::ALL {
            let w = hn(zone, 5, 3);
            let prod = w.checked_mul(&w.conj()).unwrap();
            assert!(prod.v.is_zero());
            assert_eq!(prod.u, w.modulus_sq());
        }
    }

    #[test]
    fn modulus_examples() {
        assert_eq!(hn(Zone::Elliptic, 3, 4).modulus_sq(), Scalar::int(25));
        assert_eq!(hn(Zone::Hyperbolic, 5, 3).modulus_sq(), Scalar::int(16));
        assert_eq!(hn(Zone::Parabolic, 3, 7).modulus_sq(), Scalar::int(9));
    }

    #[test]
    fn inverse_examples() {
        let p = Zone::Parabolic;
        let inv = hn(p, 2, 1).invert().unwrap();
        assert_eq!(
            inv,
            HyperNumber::new(p, Scalar::ratio(1, 2), Scalar::ratio(-1, 4))
        );
        assert_eq!(inv.checked_mul(&hn(p, 2, 1)).unwrap(), HyperNumber::one(p));
        assert_eq!(
            HyperNumber::unit(Zone::Elliptic).invert().unwrap(),
            hn(Zone::Elliptic, 0, -1)
        );
        assert_eq!(hn(p, 0, 1).invert(), Err(Error::ZeroDivisor));
        assert_eq!(
            hn(Zone::Hyperbolic, 2, -2).invert(),
            Err(Error::ZeroDivisor)
        );
        assert_eq!(
            HyperNumber::zero(Zone::Elliptic).invert(),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn exp_imag_examples() {
        let t = Scalar::int(5);
        assert_eq!(
            HyperNumber::exp_imag(Zone::Parabolic, &t).unwrap(),
            hn(Zone::Parabolic, 1, 5)
        );
        for zone in Zone::ALL {
            assert_eq!(
                HyperNumber::exp_imag(zone, &Scalar::zero()).unwrap(),
                HyperNumber::one(zone)
            );
        }
        let e =
            HyperNumber::exp_imag(Zone::Elliptic, &Scalar::float(std::f64::consts::PI)).unwrap();
        assert_eq!(e, HyperNumber::new(Zone::Elliptic, -1.0, 0.0));
        assert_eq!(
            HyperNumber::exp_imag(Zone::Hyperbolic, &Scalar::int(1)),
            Err(Error::BackendMismatch("cosh"))
        );
    }

    #[test]
    fn powers() {
        let e = Zone::Elliptic;
        let w = hn(e, 1, 1);
        assert_eq!(w.powi(2).unwrap(), hn(e, 0, 2));
        assert_eq!(
            w.powi(-1).unwrap().checked_mul(&w).unwrap(),
            HyperNumber::one(e)
        );
        let half = w.to_float().powf(&Scalar::float(0.5)).unwrap();
        assert_eq!(half.checked_mul(&half).unwrap(), w.to_float());
        let h = hn(Zone::Hyperbolic, 3, 1).to_float();
        let r = h.powf(&Scalar::float(0.5)).unwrap();
        assert_eq!(r.checked_mul(&r).unwrap(), h);
        assert_eq!(
            hn(Zone::Hyperbolic, 1, 3).powf(&Scalar::float(0.5)),
            Err(Error::BranchUndefined)
        );
        let d = hn(Zone::Parabolic, 4, 2).to_float();
        let r = d.powf(&Scalar::float(0.5)).unwrap();
        assert_eq!(r.checked_mul(&r).unwrap(), d);
    }
}
