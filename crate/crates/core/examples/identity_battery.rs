//! The identity checks for parabolic vectors on symbolic-style sample points.

use parawheel::{DualVec, ExtScalar, Scalar, SubgroupTag};

fn report(name: &str, ok: bool) {
    println!("  {:<36} {}", name, if ok { "ok" } else { "FAILED" });
}

fn main() -> parawheel::Result<()> {
    for tag in SubgroupTag::ALL {
        let w = DualVec::new(tag, Scalar::ratio(3, 2), Scalar::ratio(1, 4))?;
        let w1 = DualVec::new(tag, -2, Scalar::ratio(5, 3))?;
        let w2 = DualVec::new(tag, Scalar::ratio(1, 3), -3)?;
        let (a, b, s) = (Scalar::int(3), Scalar::ratio(-1, 2), Scalar::ratio(7, 5));
        let real = DualVec::embed_real(tag, a.clone());
        let add = |x: &DualVec, y: &DualVec| x.add_exotic(y);
        let mul = |x: &DualVec, y: &DualVec| x.pmul(y);

        println!("{tag:?}");
        report(
            "P = Re P + Im P",
            add(&w.real_part()?, &w.imag_part()?)? == w,
        );
        report("|Re a| = a", real.real_part()?.pnorm() == a);
        report("|rot P| = |P|", w.rotate(&s)?.pnorm() == w.pnorm());
        report(
            "rot P1 conj(rot P2) = P1 conj(P2)",
            mul(&w.rotate(&s)?, &w1.rotate(&s)?.pconj())? == mul(&w, &w1.pconj())?,
        );
        let zero_arg = ExtScalar::Finite(Scalar::zero());
        report(
            "P conj(P) = (0, |P|^2)",
            mul(&w, &w.pconj())? == DualVec::from_arg_norm(tag, &zero_arg, &w.pnorm().square())?,
        );
        report("P P0 = P", mul(&w, &DualVec::one(tag))? == w);
        report("P + P1 = P1 + P", add(&w, &w1)? == add(&w1, &w)?);
        report(
            "(P + P1) + P2 = P + (P1 + P2)",
            add(&add(&w, &w1)?, &w2)? == add(&w, &add(&w1, &w2)?)?,
        );
        report("a P = P a", w.scalar_mul(&a)? == mul(&w, &real)?);
        report(
            "a (b P) = (a b) P",
            w.scalar_mul(&b)?.scalar_mul(&a)? == w.scalar_mul(&(&a * &b))?,
        );
        report(
            "a (P + P1) = a P + a P1",
            add(&w, &w1)?.scalar_mul(&a)? == add(&w.scalar_mul(&a)?, &w1.scalar_mul(&a)?)?,
        );
        report(
            "(a + b) P = a P + b P",
            w.scalar_mul(&(&a + &b))? == add(&w.scalar_mul(&a)?, &w.scalar_mul(&b)?)?,
        );
        report("P P1 = P1 P", mul(&w, &w1)? == mul(&w1, &w)?);
        report(
            "(P P1) P2 = P (P1 P2)",
            mul(&mul(&w, &w1)?, &w2)? == mul(&w, &mul(&w1, &w2)?)?,
        );
        report(
            "(P + P1) P2 = P P2 + P1 P2",
            mul(&add(&w, &w1)?, &w2)? == add(&mul(&w, &w2)?, &mul(&w1, &w2)?)?,
        );
    }
    Ok(())
}
