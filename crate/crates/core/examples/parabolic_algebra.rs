//! Norms, arguments, products and exotic sums of parabolic vectors.

use parawheel::{DualVec, ExtScalar, Scalar, SubgroupTag};

fn main() -> parawheel::Result<()> {
    for tag in SubgroupTag::ALL {
        let w = DualVec::new(tag, 1, Scalar::ratio(-1, 2))?;
        let w1 = DualVec::new(tag, 2, 1)?;
        println!("{tag:?}: w = {w}, w1 = {w1}");
        println!("  norm {}  arg {}", w.pnorm(), w.parg());
        println!("  rotate by 3     {}", w.rotate(&Scalar::int(3))?);
        println!("  w * w1          {}", w.pmul(&w1)?);
        println!("  w * conj(w)     {}", w.pmul(&w.pconj())?);
        println!("  2w              {}", w.scalar_mul(&Scalar::int(2))?);
        println!("  w + w1          {}", w.add_exotic(&w1)?);
        println!("  Re w, Im w      {}, {}", w.real_part()?, w.imag_part()?);
        println!("  w^3             {}", w.power(&Scalar::int(3))?);
    }

    // N′ keeps the points with argument 0 at infinity
    let a = DualVec::new(SubgroupTag::NPrime, 1, 0)?;
    let b = DualVec::new(SubgroupTag::NPrime, -1, 0)?;
    let prod = a.pmul(&b)?;
    println!("(1, 0)(-1, 0) = {prod}, arg {}", prod.parg());
    let zero_arg = ExtScalar::Finite(Scalar::zero());
    println!(
        "zero of N': {}",
        DualVec::from_arg_norm(SubgroupTag::NPrime, &zero_arg, &Scalar::zero())?
    );
    Ok(())
}
