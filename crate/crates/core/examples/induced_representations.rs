//! Representations of SL2(R) induced from K, N′ and A.

use parawheel::induced::{
    character, decompose, g_action, r_factor, rep_apply, s_map, InducingSubgroup, OmegaPoint,
    ReprParams, Transformed,
};
use parawheel::{HyperNumber, Scalar, SL2};

fn main() -> parawheel::Result<()> {
    let g = SL2::new(1, 2, 1, 3)?;
    let w = OmegaPoint::new(Scalar::ratio(1, 2), Scalar::ratio(1, 4));
    for sub in InducingSubgroup::ALL {
        println!("{sub:?}");
        if let Ok((omega, h)) = decompose(&g, sub) {
            println!("  g = s({}, {}) . {h}", omega.u, omega.v);
            println!("  check: {}", s_map(&omega)?.mul(&h));
        }
        let gw = g_action(&g, &w, sub)?;
        println!("  g.w = ({}, {})", gw.u, gw.v);
        println!("  r   = {}", r_factor(&g, &w, sub)?);
    }

    let params = [
        ReprParams::K { n: 2 },
        ReprParams::A {
            sigma: Scalar::int(2),
        },
        ReprParams::N {
            kappa: Scalar::int(1),
        },
    ];
    let f = |w: &HyperNumber| w.checked_mul(w);
    let h = SL2::new(2, 0, 1, Scalar::ratio(1, 2))?;
    let labels = ["K, n = 2", "A, sigma = 2", "N, kappa = 1"];
    for (p, label) in params.iter().zip(labels) {
        let chi = character(p, &Scalar::float(0.5))?;
        let one = HyperNumber::one(p.zone());
        println!("{label}: chi(1/2) maps 1 to {}", chi.apply(&one)?);
        let w = HyperNumber::new(p.zone(), Scalar::ratio(1, 3), 2);
        let once = rep_apply(p, &g.mul(&h), &f, &w)?;
        let twice = rep_apply(
            p,
            &g,
            &Transformed {
                params: p,
                g: &h,
                f: &f,
            },
            &w,
        )?;
        println!("  [rho(gh) f](w) = {once}");
        println!("  [rho(g) rho(h) f](w) = {twice}");
    }
    Ok(())
}
