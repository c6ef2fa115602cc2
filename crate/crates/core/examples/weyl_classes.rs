//! Conjugacy classes of involutions, with their minimal and maximal lengths and the
//! Bruhat maximum when there is one.

use stratalab::{Config, RootSystem, WeylGroup};

fn main() -> stratalab::Result<()> {
    let budget = Config::from_env().scan_budget;
    for label in ["A3", "B3", "D4"] {
        let group = WeylGroup::new(&RootSystem::build(label.parse()?));
        println!("{label}, |W| = {}", group.order());
        for class in group.involution_classes(budget)? {
            let max = class.maximum().map(|m| format!("{:?}", group.reduced_word(m)));
            println!(
                "  size {:>3}  lengths {}..{}  maximum {}",
                class.len(),
                class.min_length(),
                class.max_length(),
                max.unwrap_or_else(|| "none".into())
            );
        }
    }
    Ok(())
}
