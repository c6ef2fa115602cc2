//! Nilpotent orbits of so8: dimensions, rigidity, and induction from a Levi.

use stratalab::orbits::{self, Algebra, ClassicalLevi, LeviOrbit, Partition};

fn main() -> stratalab::Result<()> {
    let so8 = Algebra::So(8);
    for o in orbits::orbits(so8) {
        println!(
            "{o:<16} dim {:>2}  rigid {}",
            orbits::orbit_dimension(&o),
            orbits::is_rigid(&o, 14)?
        );
    }

    let levi = ClassicalLevi::new(so8, vec![1], 6)?;
    let mut orbit = LeviOrbit::zero(&levi);
    orbit.mu = Partition::parse("2,2,1,1")?;
    println!("induced from gl1 x so6 [2^2,1^2]: {}", orbits::induce(&levi, &orbit)?);

    println!(
        "collapse of 4,2,1,1 in so8: {}",
        orbits::collapse(so8, &Partition::parse("4,2,1,1")?)?.partition()
    );
    Ok(())
}
