//! The subsets T and M of simple roots and the spherical strata they index.

use stratalab::{Config, RootSystem, StrataAnalysis};

fn main() -> stratalab::Result<()> {
    let budget = Config::from_env().scan_budget;
    for label in ["B2", "A3", "D4", "F4"] {
        let analysis = StrataAnalysis::new(&RootSystem::build(label.parse()?), budget)?;
        println!("{label}: |T| = {}, |M| = {}", analysis.t().len(), analysis.m().len());
        for s in analysis.spherical_strata() {
            let e = analysis.export_stratum(&s);
            println!("  pi {:?}  dim {:>3}  classes {}", e.pi, e.dim, e.classes.len());
        }
    }
    Ok(())
}
