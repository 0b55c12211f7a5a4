//! Möbius maps of SL2(R) and the Cayley transform in the three zones.

use parawheel::{
    cayley_conjugate, cayley_matrix, moebius_apply, subgroup_element, HyperNumber, MoebiusPoint,
    Scalar, Subgroup, Zone, SL2,
};

fn main() -> parawheel::Result<()> {
    let g = SL2::new(2, 1, 3, 2)?;
    for zone in Zone::ALL {
        let w = MoebiusPoint::affine(HyperNumber::new(zone, Scalar::ratio(1, 2), 1));
        let img = moebius_apply(&g, &w)?;
        println!("{zone:?}: g.w = {}", img.to_affine()?);
        println!("  Cayley matrix {}", cayley_matrix(zone));
    }

    // in parabolic coordinates N acts by (1 + pt, t; 0, 1 − pt)
    let p = Zone::Parabolic;
    let minus_p = MoebiusPoint::affine(HyperNumber::new(p, 0, -1));
    for t in [-2, -1, 1, 2].map(Scalar::int) {
        let m = cayley_conjugate(&subgroup_element(Subgroup::N, &t)?, p);
        println!(
            "N({t}) -> {m}; image of -p: {}",
            m.apply(&minus_p)?.to_affine()?
        );
    }

    // an ideal point: the denominator is a zero divisor
    let w = MoebiusPoint::new(HyperNumber::one(p), HyperNumber::new(p, 0, 1))?;
    println!("[1 : p] affine? {:?}", w.to_affine().err());
    Ok(())
}
