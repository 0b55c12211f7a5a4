//! Coordinates in which exotic addition is componentwise, and tropical sums.

use parawheel::{DualVec, LinCoord, SubgroupTag, TropicalMode};

fn main() -> parawheel::Result<()> {
    let tag = SubgroupTag::N;
    let w = DualVec::new(tag, 1, -2)?;
    let w1 = DualVec::new(tag, -3, 4)?;
    let (l, l1) = (w.to_linear(), w1.to_linear());
    let show = |c: &LinCoord| format!("[{}, {}]", c.a, c.b);
    println!("{w} -> {}", show(&l));
    println!("{w1} -> {}", show(&l1));
    let sum = w.add_exotic(&w1)?;
    println!("exotic sum {sum} -> {}", show(&sum.to_linear()));
    println!("componentwise  {}", show(&(&l + &l1)));
    println!("back: {}", DualVec::from_linear(tag, &LinCoord::new(5, 2))?);

    for mode in [TropicalMode::Min, TropicalMode::Max] {
        println!("{mode:?}: {}", w.add_tropical(&w1, mode)?);
    }
    Ok(())
}
