//! Extending a non-Levi pseudo-Levi basis of C5 to a basis of full rank.

use stratalab::{Config, PseudoLevis, RootSystem};

fn main() -> stratalab::Result<()> {
    let p = PseudoLevis::new(&RootSystem::build("C5".parse()?), Config::from_env().scan_budget)?;
    let start = [0, 3, 5];
    println!("{:?} has type {}", start, p.class_of(&start)?.type_label());
    println!("default: {:?}", p.isolated_extension(&start)?.basis().indices());
    for b in p.isolated_extensions(&start)? {
        println!("  {:?} {}", b.indices(), p.class_of(b.indices())?.type_label());
    }
    Ok(())
}
