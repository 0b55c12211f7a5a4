//! Parabolic vectors: points `(u, v)` of the plane carrying the rotation
//! algebra of the subgroups N and N′.
//!
//! Every operation is governed by the pair (argument, norm). For N these
//! are `(u, u² − v)`, for N′ they are `(1/u, u²/(v + 1))`. Points of N′
//! with zero argument sit at `u = ∞` and are stored by their norm alone;
//! the zero vector `(∞, −1)` is the one with norm 0.

mod linear;
mod tropical;

pub use linear::LinCoord;
pub use tropical::TropicalMode;

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{ExtScalar, Scalar};

/// The parabolic subgroup whose rotations act on a vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SubgroupTag {
    /// Upper-triangular matrices.
    N,
    /// Lower-triangular matrices.
    NPrime,
}

impl SubgroupTag {
    pub const ALL: [SubgroupTag; 2] = [SubgroupTag::N, SubgroupTag::NPrime];
}

#[derive(Clone, Debug)]
enum Repr {
    Finite {
        u: Scalar,
        v: Scalar,
    },
    /// N′ only: zero argument, given norm.
    AtInfinity {
        norm: Scalar,
    },
}

#[derive(Clone, Debug)]
pub struct DualVec {
    tag: SubgroupTag,
    repr: Repr,
}

impl DualVec {
    /// A finite point. For N′ the line `v = −1` has no norm and is rejected.
    pub fn new(tag: SubgroupTag, u: impl Into<Scalar>, v: impl Into<Scalar>) -> Result<Self> {
        let (u, v) = (u.into(), v.into());
        if tag == SubgroupTag::NPrime && (&v + Scalar::one()).is_zero() {
            return Err(Error::NormUndefined);
        }
        Ok(DualVec {
            tag,
            repr: Repr::Finite { u, v },
        })
    }

    /// The N′ point with argument 0 and the given norm.
    pub fn at_infinity(norm: impl Into<Scalar>) -> Self {
        DualVec {
            tag: SubgroupTag::NPrime,
            repr: Repr::AtInfinity { norm: norm.into() },
        }
    }

    /// `(0, 0)` for N, `(∞, −1)` for N′.
    pub fn zero(tag: SubgroupTag) -> Self {
        match tag {
            SubgroupTag::N => DualVec {
                tag,
                repr: Repr::Finite {
                    u: Scalar::zero(),
                    v: Scalar::zero(),
                },
            },
            SubgroupTag::NPrime => DualVec::at_infinity(0),
        }
    }

    pub fn tag(&self) -> SubgroupTag {
        self.tag
    }

    pub fn u(&self) -> ExtScalar {
        match &self.repr {
            Repr::Finite { u, .. } => ExtScalar::Finite(u.clone()),
            Repr::AtInfinity { .. } => ExtScalar::Infinity,
        }
    }

    /// The second coordinate; ideal points other than the zero vector have
    /// `v = ∞`.
    pub fn v(&self) -> ExtScalar {
        match &self.repr {
            Repr::Finite { v, .. } => ExtScalar::Finite(v.clone()),
            Repr::AtInfinity { norm } if norm.is_zero() => ExtScalar::Finite(-norm.one_like()),
            Repr::AtInfinity { .. } => ExtScalar::Infinity,
        }
    }

    /// `(u, v)` when both are finite.
    pub fn coords(&self) -> Option<(&Scalar, &Scalar)> {
        match &self.repr {
            Repr::Finite { u, v } => Some((u, v)),
            Repr::AtInfinity { .. } => None,
        }
    }

    pub fn is_ideal(&self) -> bool {
        matches!(self.repr, Repr::AtInfinity { .. })
    }

    pub fn is_zero(&self) -> bool {
        *self == DualVec::zero(self.tag)
    }

    fn check_tag(&self, other: &DualVec) -> Result<()> {
        if self.tag == other.tag {
            Ok(())
        } else {
            Err(Error::TagMismatch {
                left: self.tag,
                right: other.tag,
            })
        }
    }

    /// N: `u² − v`; N′: `u²/(v + 1)`.
    pub fn pnorm(&self) -> Scalar {
        match (&self.repr, self.tag) {
            (Repr::Finite { u, v }, SubgroupTag::N) => u.square() - v,
            (Repr::Finite { u, v }, SubgroupTag::NPrime) => u
                .square()
                .checked_div(&(v + v.one_like()))
                .expect("v = -1 is rejected on construction"),
            (Repr::AtInfinity { norm }, _) => norm.clone(),
        }
    }

    /// N: `u`; N′: `1/u`, with `1/0 = ∞` and `1/∞ = 0`.
    pub fn parg(&self) -> ExtScalar {
        match (&self.repr, self.tag) {
            (Repr::Finite { u, .. }, SubgroupTag::N) => ExtScalar::Finite(u.clone()),
            (Repr::Finite { u, .. }, SubgroupTag::NPrime) => ExtScalar::Finite(u.clone()).recip(),
            (Repr::AtInfinity { norm }, _) => ExtScalar::Finite(norm.zero_like()),
        }
    }

    /// The unique vector with the given argument and norm.
    ///
    /// For N′ the argument 0 gives an ideal point, the argument ∞ is only
    /// allowed with norm 0 and gives `(0, 0)`, and any other argument needs
    /// a nonzero norm.
    pub fn from_arg_norm(tag: SubgroupTag, arg: &ExtScalar, norm: &Scalar) -> Result<DualVec> {
        match tag {
            SubgroupTag::N => {
                let a = arg.finite().ok_or(Error::InconsistentIdeal)?;
                DualVec::new(tag, a.clone(), a.square() - norm)
            }
            SubgroupTag::NPrime => match arg {
                ExtScalar::Infinity if norm.is_zero() => DualVec::new(tag, 0, 0),
                ExtScalar::Infinity => Err(Error::InconsistentIdeal),
                ExtScalar::Finite(a) if a.is_zero() => Ok(DualVec::at_infinity(norm.clone())),
                ExtScalar::Finite(_) if norm.is_zero() => Err(Error::IdealPoint),
                ExtScalar::Finite(a) => {
                    let u = a.recip()?;
                    let v = u.square().checked_div(norm)? - Scalar::one();
                    DualVec::new(tag, u, v)
                }
            },
        }
    }

    /// A real number as the vector with zero argument and norm `x`.
    pub fn embed_real(tag: SubgroupTag, x: impl Into<Scalar>) -> DualVec {
        let x = x.into();
        let zero = ExtScalar::Finite(x.zero_like());
        DualVec::from_arg_norm(tag, &zero, &x).expect("zero argument is always admissible")
    }

    /// The unit element: argument 0, norm 1.
    pub fn one(tag: SubgroupTag) -> DualVec {
        DualVec::embed_real(tag, 1)
    }

    /// `(−u, v)`: negates the argument, keeps the norm.
    pub fn pconj(&self) -> DualVec {
        let repr = match &self.repr {
            Repr::Finite { u, v } => Repr::Finite {
                u: -u,
                v: v.clone(),
            },
            ideal => ideal.clone(),
        };
        DualVec {
            tag: self.tag,
            repr,
        }
    }

    /// Rotation by the angle `s`: the norm is kept and `s` is added to the
    /// argument.
    pub fn rotate(&self, s: &Scalar) -> Result<DualVec> {
        match (&self.repr, self.tag) {
            (Repr::Finite { u, v }, SubgroupTag::N) => {
                DualVec::new(self.tag, u + s, v + Scalar::int(2) * s * u + s.square())
            }
            (Repr::Finite { u, v }, SubgroupTag::NPrime) => {
                let k = s * u + s.one_like();
                if k.is_zero() {
                    return Ok(DualVec::at_infinity(self.pnorm()));
                }
                let u2 = u.checked_div(&k)?;
                let v2 = (v + v.one_like()).checked_div(&k.square())? - Scalar::one();
                DualVec::new(self.tag, u2, v2)
            }
            (Repr::AtInfinity { .. }, _) => self.rotate_semantic(s),
        }
    }

    /// Rotation through the argument/norm description.
    pub fn rotate_semantic(&self, s: &Scalar) -> Result<DualVec> {
        let arg = self.parg().add(&ExtScalar::Finite(s.clone()))?;
        DualVec::from_arg_norm(self.tag, &arg, &self.pnorm())
    }

    /// The product: arguments add and norms multiply.
    ///
    /// Finite operands use the closed forms
    /// N: `(u+u′, (u+u′)² − (v−u²)(v′−u′²))`,
    /// N′: `(uu′/(u+u′), (v+1)(v′+1)/(u+u′)² − 1)`.
    pub fn pmul(&self, other: &DualVec) -> Result<DualVec> {
        self.check_tag(other)?;
        match (&self.repr, &other.repr, self.tag) {
            (Repr::Finite { u, v }, Repr::Finite { u: u2, v: v2 }, SubgroupTag::N) => {
                let s = u + u2;
                let w = s.square() - (v - u.square()) * (v2 - u2.square());
                DualVec::new(self.tag, s, w)
            }
            (Repr::Finite { u, v }, Repr::Finite { u: u2, v: v2 }, SubgroupTag::NPrime) => {
                let s = u + u2;
                if s.is_zero() {
                    return Ok(DualVec::at_infinity(self.pnorm() * other.pnorm()));
                }
                let nu = (u * u2).checked_div(&s)?;
                let one = Scalar::one();
                let nv = ((v + &one) * (v2 + &one)).checked_div(&s.square())? - one;
                DualVec::new(self.tag, nu, nv)
            }
            _ => self.pmul_semantic(other),
        }
    }

    /// The product computed from arguments and norms.
    pub fn pmul_semantic(&self, other: &DualVec) -> Result<DualVec> {
        self.check_tag(other)?;
        let arg = self.parg().add(&other.parg())?;
        DualVec::from_arg_norm(self.tag, &arg, &(self.pnorm() * other.pnorm()))
    }

    /// Scaling by a real: the argument is kept and the norm multiplied by `a`.
    ///
    /// N: `(u, av + u²(1−a))`; N′: `(u, (v+1)/a − 1)`, undefined for `a = 0`.
    pub fn scalar_mul(&self, a: &Scalar) -> Result<DualVec> {
        match (&self.repr, self.tag) {
            (Repr::Finite { u, v }, SubgroupTag::N) => {
                DualVec::new(self.tag, u.clone(), a * v + u.square() * (a.one_like() - a))
            }
            (_, SubgroupTag::NPrime) if a.is_zero() => Err(Error::ZeroScale),
            (Repr::Finite { u, v }, SubgroupTag::NPrime) => {
                let nv = (v + v.one_like()).checked_div(a)? - Scalar::one();
                DualVec::new(self.tag, u.clone(), nv)
            }
            (Repr::AtInfinity { norm }, _) => Ok(DualVec::at_infinity(norm * a)),
        }
    }

    /// The additive inverse: N `(u, 2u² − v)`, N′ `(u, −v − 2)`.
    pub fn neg(&self) -> DualVec {
        self.scalar_mul(&Scalar::int(-1))
            .expect("scaling by -1 is always defined")
    }

    /// Norms add and the argument is the norm-weighted mean of the arguments.
    /// A zero norm sum gives the zero vector.
    pub fn add_exotic(&self, other: &DualVec) -> Result<DualVec> {
        self.check_tag(other)?;
        let (n1, n2) = (self.pnorm(), other.pnorm());
        let n = &n1 + &n2;
        if n.is_zero() {
            return Ok(DualVec::zero(self.tag));
        }
        let weighted = |w: &DualVec, nw: &Scalar| -> Result<Scalar> {
            if nw.is_zero() {
                return Ok(nw.zero_like());
            }
            let a = w.parg();
            let a = a.finite().ok_or(Error::InconsistentIdeal)?;
            Ok(a * nw)
        };
        let arg = (weighted(self, &n1)? + weighted(other, &n2)?).checked_div(&n)?;
        DualVec::from_arg_norm(self.tag, &ExtScalar::Finite(arg), &n)
    }

    /// The subtraction `self + (−other)`.
    pub fn sub_exotic(&self, other: &DualVec) -> Result<DualVec> {
        self.add_exotic(&other.neg())
    }

    /// Real part: argument 0 and norm `(1 − arg)·|w|`.
    pub fn real_part(&self) -> Result<DualVec> {
        let (a, n) = self.part_data()?;
        self.part(&a.zero_like(), &((a.one_like() - &a) * &n))
    }

    /// Imaginary part: argument 1 and norm `arg·|w|`.
    pub fn imag_part(&self) -> Result<DualVec> {
        let (a, n) = self.part_data()?;
        self.part(&a.one_like(), &(&a * &n))
    }

    fn part_data(&self) -> Result<(Scalar, Scalar)> {
        let n = self.pnorm();
        if self.tag == SubgroupTag::NPrime && n.is_zero() {
            return Ok((n.zero_like(), n));
        }
        let a = self
            .parg()
            .finite()
            .cloned()
            .ok_or(Error::InconsistentIdeal)?;
        Ok((a, n))
    }

    fn part(&self, arg: &Scalar, norm: &Scalar) -> Result<DualVec> {
        if self.tag == SubgroupTag::NPrime && norm.is_zero() {
            return Ok(DualVec::zero(self.tag));
        }
        DualVec::from_arg_norm(self.tag, &ExtScalar::Finite(arg.clone()), norm)
    }

    /// De Moivre: argument times `e`, norm to the power `e`.
    ///
    /// Integer exponents stay exact. Other exponents use the float backend
    /// and need a positive norm.
    pub fn power(&self, e: &Scalar) -> Result<DualVec> {
        let n = self.pnorm();
        let norm = match e.as_integer() {
            Some(k) => n.powi(k)?,
            None => {
                if !n.is_positive() {
                    return Err(Error::NegativeNormPower);
                }
                Scalar::float(n.to_f64().powf(e.to_f64()))
            }
        };
        let arg = self.parg().mul(&ExtScalar::Finite(e.clone()))?;
        DualVec::from_arg_norm(self.tag, &arg, &norm)
    }

    /// Linearising coordinates `a = n(1 + arg)/2`, `b = n(1 − arg)/2`.
    pub fn to_linear(&self) -> LinCoord {
        linear::to_linear(self)
    }

    /// Inverse of [`DualVec::to_linear`].
    pub fn from_linear(tag: SubgroupTag, c: &LinCoord) -> Result<DualVec> {
        linear::from_linear(tag, c)
    }

    /// Lexicographic min or max of two finite points.
    pub fn add_tropical(&self, other: &DualVec, mode: TropicalMode) -> Result<DualVec> {
        tropical::add_tropical(self, other, mode)
    }
}

impl PartialEq for DualVec {
    fn eq(&self, other: &Self) -> bool {
        if self.tag != other.tag {
            return false;
        }
        match (&self.repr, &other.repr) {
            (Repr::Finite { u, v }, Repr::Finite { u: u2, v: v2 }) => u == u2 && v == v2,
            (Repr::AtInfinity { norm }, Repr::AtInfinity { norm: n2 }) => norm == n2,
            _ => false,
        }
    }
}

impl fmt::Display for DualVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Finite { u, v } => write!(f, "({u}, {v})"),
            Repr::AtInfinity { norm } if norm.is_zero() => write!(f, "(∞, -1)"),
            Repr::AtInfinity { norm } => write!(f, "(∞; norm {norm})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const N: SubgroupTag = SubgroupTag::N;
    const NP: SubgroupTag = SubgroupTag::NPrime;

    fn r(n: i64, d: i64) -> Scalar {
        Scalar::ratio(n, d)
    }

    fn dv(tag: SubgroupTag, u: Scalar, v: Scalar) -> DualVec {
        DualVec::new(tag, u, v).unwrap()
    }

    fn di(tag: SubgroupTag, u: i64, v: i64) -> DualVec {
        DualVec::new(tag, u, v).unwrap()
    }

    fn fin(x: Scalar) -> ExtScalar {
        ExtScalar::Finite(x)
    }

    #[test]
    fn norms_and_arguments() {
        assert_eq!(di(N, 2, 1).pnorm(), Scalar::int(3));
        assert_eq!(di(N, 0, 0).pnorm(), Scalar::zero());
        assert_eq!(di(NP, 2, 0).pnorm(), Scalar::int(4));
        assert_eq!(DualVec::zero(NP).pnorm(), Scalar::zero());
        assert_eq!(DualVec::new(NP, 3, -1), Err(Error::NormUndefined));

        assert_eq!(di(N, 3, 5).parg(), fin(Scalar::int(3)));
        assert_eq!(di(NP, 2, 0).parg(), fin(r(1, 2)));
        assert_eq!(DualVec::zero(NP).parg(), fin(Scalar::zero()));
        assert_eq!(di(NP, 0, 4).parg(), ExtScalar::Infinity);
    }

    #[test]
    fn zero_vector_display() {
        assert_eq!(DualVec::zero(NP).to_string(), "(∞, -1)");
        assert_eq!(DualVec::zero(NP).u(), ExtScalar::Infinity);
        assert_eq!(DualVec::zero(NP).v(), fin(Scalar::int(-1)));
        assert_eq!(DualVec::zero(N).to_string(), "(0, 0)");
    }

    #[test]
    fn conjugation() {
        assert_eq!(di(N, 2, 1).pconj(), di(N, -2, 1));
        let w = dv(NP, r(3, 2), r(-1, 4));
        assert_eq!(w.pconj().pconj(), w);
        assert_eq!(w.pconj().pnorm(), w.pnorm());
        assert_eq!(DualVec::zero(NP).pconj(), DualVec::zero(NP));
    }

    #[test]
    fn rotations() {
        assert_eq!(di(N, 0, -1).rotate(&Scalar::one()).unwrap(), di(N, 1, 0));
        assert_eq!(di(N, 1, 0).rotate(&Scalar::int(2)).unwrap(), di(N, 3, 8));
        assert_eq!(di(N, 3, 8).pnorm(), Scalar::one());
        for tag in SubgroupTag::ALL {
            let w = di(tag, 2, 5);
            assert_eq!(w.rotate(&Scalar::zero()).unwrap(), w);
        }
        let w = di(NP, 2, 3);
        let s = r(1, 3);
        let rw = w.rotate(&s).unwrap();
        assert_eq!(rw.pnorm(), w.pnorm());
        assert_eq!(rw.parg(), fin(r(1, 2) + s.clone()));
        assert_eq!(rw, w.rotate_semantic(&s).unwrap());
    }

    #[test]
    fn n_prime_rotation_through_infinity() {
        // arg(2, 3) = 1/2, so rotating by −1/2 lands on argument 0.
        let w = di(NP, 2, 3);
        let rw = w.rotate(&r(-1, 2)).unwrap();
        assert!(rw.is_ideal());
        assert_eq!(rw.pnorm(), w.pnorm());
        assert_eq!(rw.rotate(&r(1, 2)).unwrap(), w);
    }

    #[test]
    fn products() {
        assert_eq!(di(N, 1, 0).pmul(&di(N, 1, 0)).unwrap(), di(N, 2, 3));
        let w = di(N, 4, -7);
        assert_eq!(w.pmul(&di(N, 0, -1)).unwrap(), w);
        assert_eq!(
            di(NP, 1, 0).pmul(&di(NP, 1, 0)).unwrap(),
            dv(NP, r(1, 2), r(-3, 4))
        );
        let w = dv(NP, r(2, 3), r(5, 7));
        assert_eq!(w.pmul(&DualVec::one(NP)).unwrap(), w);
        assert_eq!(
            di(N, 1, 0).pmul(&di(NP, 1, 0)),
            Err(Error::TagMismatch { left: N, right: NP })
        );
    }

    #[test]
    fn closed_form_matches_semantic_product() {
        let pts = [(1, 2, 3, 4), (-2, 5, 7, -3), (3, 0, -1, 6)];
        for tag in SubgroupTag::ALL {
            for (a, b, c, d) in pts {
                let w1 = dv(tag, r(a, 2), Scalar::int(b));
                let w2 = dv(tag, r(c, 3), Scalar::int(d));
                assert_eq!(w1.pmul(&w2).unwrap(), w1.pmul_semantic(&w2).unwrap());
            }
        }
    }

    #[test]
    fn n_prime_product_with_opposite_arguments() {
        let w = di(NP, 2, 1);
        let p = w.pmul(&w.pconj()).unwrap();
        assert!(p.is_ideal());
        assert_eq!(p.pnorm(), w.pnorm().square());
    }

    #[test]
    fn scalar_multiplication() {
        let two = Scalar::int(2);
        assert_eq!(di(N, 1, 0).scalar_mul(&two).unwrap(), di(N, 1, -1));
        assert_eq!(di(N, 1, -1).pnorm(), two);
        let w = di(NP, 5, 2);
        assert_eq!(w.scalar_mul(&Scalar::one()).unwrap(), w);
        assert_eq!(
            di(NP, 2, 0).scalar_mul(&two).unwrap(),
            dv(NP, two.clone(), r(-1, 2))
        );
        assert_eq!(dv(NP, two.clone(), r(-1, 2)).pnorm(), Scalar::int(8));
        assert_eq!(w.scalar_mul(&Scalar::zero()), Err(Error::ZeroScale));
    }

    #[test]
    fn negation_and_zero() {
        assert_eq!(di(N, 1, 0).neg(), di(N, 1, 2));
        assert_eq!(DualVec::zero(N).neg(), DualVec::zero(N));
        assert_eq!(di(NP, 2, 0).neg(), di(NP, 2, -2));
        assert_eq!(DualVec::zero(NP).neg(), DualVec::zero(NP));
        for tag in SubgroupTag::ALL {
            let w = di(tag, 3, 2);
            assert_eq!(w.add_exotic(&w.neg()).unwrap(), DualVec::zero(tag));
        }
    }

    #[test]
    fn exotic_addition() {
        assert_eq!(di(N, 1, 0).add_exotic(&di(N, -1, 0)).unwrap(), di(N, 0, -2));
        assert_eq!(di(N, 1, 0).add_exotic(&di(N, 1, 2)).unwrap(), di(N, 0, 0));
        for tag in SubgroupTag::ALL {
            let w = di(tag, 3, 4);
            assert_eq!(w.add_exotic(&DualVec::zero(tag)).unwrap(), w);
            assert_eq!(DualVec::zero(tag).add_exotic(&w).unwrap(), w);
        }
    }

    #[test]
    fn real_and_imaginary_parts() {
        let w = di(N, 2, 1);
        assert_eq!(w.real_part().unwrap(), di(N, 0, 3));
        assert_eq!(w.imag_part().unwrap(), di(N, 1, -5));
        let sum = w
            .real_part()
            .unwrap()
            .add_exotic(&w.imag_part().unwrap())
            .unwrap();
        assert_eq!(sum, w);

        let w = di(N, 0, -1);
        assert_eq!(w.real_part().unwrap(), w);
        assert_eq!(w.imag_part().unwrap(), di(N, 1, 1));

        let w = dv(NP, r(2, 3), r(1, 5));
        let re = w.real_part().unwrap();
        assert_eq!(re.real_part().unwrap(), re);
        assert_eq!(re.add_exotic(&w.imag_part().unwrap()).unwrap(), w);

        let z = DualVec::zero(NP);
        assert_eq!(z.real_part().unwrap(), z);
        assert_eq!(z.imag_part().unwrap(), z);
    }

    #[test]
    fn construction_from_argument_and_norm() {
        let a2 = fin(Scalar::int(2));
        assert_eq!(
            DualVec::from_arg_norm(N, &a2, &Scalar::int(3)).unwrap(),
            di(N, 2, 1)
        );
        assert_eq!(
            DualVec::from_arg_norm(N, &fin(Scalar::zero()), &Scalar::zero()).unwrap(),
            DualVec::zero(N)
        );
        assert_eq!(
            DualVec::from_arg_norm(NP, &fin(r(1, 2)), &Scalar::int(4)).unwrap(),
            di(NP, 2, 0)
        );
        assert_eq!(
            DualVec::from_arg_norm(NP, &ExtScalar::Infinity, &Scalar::zero()).unwrap(),
            di(NP, 0, 0)
        );
        assert_eq!(
            DualVec::from_arg_norm(NP, &ExtScalar::Infinity, &Scalar::one()),
            Err(Error::InconsistentIdeal)
        );
        assert_eq!(
            DualVec::from_arg_norm(N, &ExtScalar::Infinity, &Scalar::one()),
            Err(Error::InconsistentIdeal)
        );
    }

    #[test]
    fn powers() {
        assert_eq!(di(N, 1, 0).power(&Scalar::int(2)).unwrap(), di(N, 2, 3));
        let w = dv(NP, r(3, 4), r(2, 9));
        assert_eq!(w.power(&Scalar::one()).unwrap(), w);
        let inv = di(N, 2, 3).power(&Scalar::int(-1)).unwrap();
        assert_eq!(inv, di(N, -2, 3));
        assert_eq!(inv.pmul(&di(N, 2, 3)).unwrap(), di(N, 0, -1));
        assert_eq!(
            di(N, 1, 3).power(&Scalar::float(0.5)),
            Err(Error::NegativeNormPower)
        );
        let root = di(N, 1, -3).power(&Scalar::float(0.5)).unwrap();
        assert_eq!(root.pmul(&root).unwrap(), di(N, 1, -3));
    }

    #[test]
    fn real_embedding() {
        assert_eq!(DualVec::embed_real(N, 1), di(N, 0, -1));
        assert_eq!(DualVec::embed_real(N, 0), DualVec::zero(N));
        assert_eq!(DualVec::embed_real(NP, 0), DualVec::zero(NP));
        for tag in SubgroupTag::ALL {
            let w = di(tag, 3, 2);
            let x = r(5, 2);
            assert_eq!(
                DualVec::embed_real(tag, x.clone()).pmul(&w).unwrap(),
                w.scalar_mul(&x).unwrap()
            );
        }
    }
}
