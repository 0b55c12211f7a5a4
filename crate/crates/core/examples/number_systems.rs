//! Complex, dual and double numbers side by side.

use parawheel::{HyperNumber, Scalar, Zone};

fn main() -> parawheel::Result<()> {
    for zone in Zone::ALL {
        let x = HyperNumber::new(zone, 2, 1);
        let y = HyperNumber::new(zone, Scalar::ratio(1, 2), -3);
        let i = HyperNumber::unit(zone);
        println!("{zone:?} (sigma = {})", zone.sigma());
        println!("  unit squared   {}", i.checked_mul(&i)?);
        println!("  x * y          {}", x.checked_mul(&y)?);
        println!("  x / y          {}", x.checked_div(&y)?);
        println!("  |x|^2          {}", x.modulus_sq());
        println!("  x^5            {}", x.powi(5)?);
        println!(
            "  exp(i/3)       {}",
            HyperNumber::exp_imag(zone, &Scalar::float(1.0 / 3.0))?
        );
    }

    // divisors of zero
    let d = HyperNumber::new(Zone::Hyperbolic, 1, 1);
    println!("(1 + h)^-1: {:?}", d.invert().err());
    let p = HyperNumber::new(Zone::Parabolic, 0, 1);
    println!("p^2 = {}", p.powi(2)?);
    Ok(())
}
