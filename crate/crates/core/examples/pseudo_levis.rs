//! Pseudo-Levi subsystems up to Weyl conjugacy, with the order of the component group
//! of the centre.

use stratalab::{Config, PseudoLevis, RootSystem};

fn main() -> stratalab::Result<()> {
    let budget = Config::from_env().scan_budget;
    for label in ["G2", "C3", "D4"] {
        let p = PseudoLevis::new(&RootSystem::build(label.parse()?), budget)?;
        println!("{label}: {} classes", p.classes().len());
        for c in p.classes() {
            println!(
                "  {:<14} {:<14} levi {:<5} z {}",
                c.type_label(),
                format!("{:?}", c.representative().indices()),
                c.is_levi(),
                c.center_component_order()
            );
        }
    }
    Ok(())
}
