//! Absolute length by breadth-first search over reflections, compared with rk(1 - w).

use stratalab::{Config, RootSystem, WeylGroup};

fn main() -> stratalab::Result<()> {
    let budget = Config::from_env().scan_budget;
    for label in ["A4", "B4", "D5", "F4"] {
        let group = WeylGroup::new(&RootSystem::build(label.parse()?));
        let abs = group.absolute_lengths(budget)?;
        let mismatches = abs.iter().filter(|(w, &a)| a != group.reflection_rank(w)).count();
        let max = abs.values().max().copied().unwrap_or(0);
        println!(
            "{label}: {} elements, max absolute length {max}, {mismatches} mismatches",
            abs.len()
        );
    }
    Ok(())
}
