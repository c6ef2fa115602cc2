//! A rigid orbit of so8 whose closure contains non-rigid orbits.

use stratalab::orbits::{self, Algebra, Partition};

fn main() -> stratalab::Result<()> {
    let top = Partition::parse("3,2^2,1")?;
    let below = Partition::parse("3,1^5")?;
    println!("[3,1^5] <= [3,2^2,1]: {}", orbits::dominance_leq(&below, &top)?);
    for (rigid, non_rigid) in orbits::counterexample_scan(Algebra::So(8), 14)? {
        println!("{rigid} contains {non_rigid}");
    }
    for a in [Algebra::Sp(8), Algebra::So(11)] {
        println!("{a}: {} pairs", orbits::counterexample_scan(a, 14)?.len());
    }
    Ok(())
}
