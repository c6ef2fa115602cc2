//! Sheets of so8 as pairs of a pseudo-Levi class and a rigid orbit on it.

use stratalab::{Config, PseudoLevis, RootSystem};

fn main() -> stratalab::Result<()> {
    let config = Config::from_env();
    let p = PseudoLevis::new(&RootSystem::build("D4".parse()?), config.scan_budget)?;
    let pairs = p.sheet_pairs(config.rigidity_dim_bound)?;
    println!("{} pairs", pairs.len());
    for s in &pairs {
        let orbits: Vec<String> = s
            .orbits
            .iter()
            .map(|o| format!("[{}]", o.partition().compact()))
            .collect();
        println!("{:<14} {}", s.levi.type_label(), orbits.join(" "));
    }
    Ok(())
}
