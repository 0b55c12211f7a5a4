#![allow(dead_code)]

use parawheel::{DualVec, HyperNumber, Scalar, SubgroupTag, Zone, SL2};
use proptest::prelude::*;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// p/q with p in −20..=20 and q in 1..=10.
pub fn rational(rng: &mut impl Rng) -> Scalar {
    Scalar::ratio(rng.gen_range(-20..=20), rng.gen_range(1..=10))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Scalar {
    loop {
        let x = rational(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn positive_rational(rng: &mut impl Rng) -> Scalar {
    Scalar::ratio(rng.gen_range(1..=20), rng.gen_range(1..=10))
}

/// A finite vector with nonzero norm; for N′ also `u ≠ 0` and `v ≠ −1`.
pub fn dual_vec(rng: &mut impl Rng, tag: SubgroupTag) -> DualVec {
    loop {
        let u = rational(rng);
        let v = rational(rng);
        if tag == SubgroupTag::NPrime && u.is_zero() {
            continue;
        }
        if let Ok(w) = DualVec::new(tag, u, v) {
            if !w.pnorm().is_zero() {
                return w;
            }
        }
    }
}

pub fn hyper(rng: &mut impl Rng, zone: Zone) -> HyperNumber {
    HyperNumber::new(zone, rational(rng), rational(rng))
}

/// `(a, b; c, (1 + bc)/a)` with `a ≠ 0`.
pub fn sl2(rng: &mut impl Rng) -> SL2 {
    let a = nonzero_rational(rng);
    let b = rational(rng);
    let c = rational(rng);
    let d = (Scalar::one() + &b * &c).checked_div(&a).unwrap();
    SL2::new(a, b, c, d).unwrap()
}

pub fn arb_rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=10).prop_map(|(p, q)| Scalar::ratio(p, q))
}

pub fn arb_nonzero_rational() -> impl Strategy<Value = Scalar> {
    arb_rational().prop_filter("nonzero", |x| !x.is_zero())
}

pub fn arb_positive_rational() -> impl Strategy<Value = Scalar> {
    (1i64..=20, 1i64..=10).prop_map(|(p, q)| Scalar::ratio(p, q))
}

pub fn arb_zone() -> impl Strategy<Value = Zone> {
    prop_oneof![
        Just(Zone::Elliptic),
        Just(Zone::Parabolic),
        Just(Zone::Hyperbolic)
    ]
}

pub fn arb_tag() -> impl Strategy<Value = SubgroupTag> {
    prop_oneof![Just(SubgroupTag::N), Just(SubgroupTag::NPrime)]
}

pub fn arb_hyper(zone: Zone) -> impl Strategy<Value = HyperNumber> {
    (arb_rational(), arb_rational()).prop_map(move |(u, v)| HyperNumber::new(zone, u, v))
}

pub fn arb_dual_vec(tag: SubgroupTag) -> impl Strategy<Value = DualVec> {
    (arb_rational(), arb_rational()).prop_filter_map(
        "admissible with nonzero norm",
        move |(u, v)| {
            if tag == SubgroupTag::NPrime && u.is_zero() {
                return None;
            }
            DualVec::new(tag, u, v)
                .ok()
                .filter(|w| !w.pnorm().is_zero())
        },
    )
}

pub fn arb_sl2() -> impl Strategy<Value = SL2> {
    (arb_nonzero_rational(), arb_rational(), arb_rational()).prop_map(|(a, b, c)| {
        let d = (Scalar::one() + &b * &c).checked_div(&a).unwrap();
        SL2::new(a, b, c, d).unwrap()
    })
}

/// Absolute difference of two planar numbers, componentwise maximum.
pub fn hyper_distance(x: &HyperNumber, y: &HyperNumber) -> f64 {
    (x.u.to_f64() - y.u.to_f64())
        .abs()
        .max((x.v.to_f64() - y.v.to_f64()).abs())
}
