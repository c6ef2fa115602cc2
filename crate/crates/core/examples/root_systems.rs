//! Prints the Cartan matrix, highest root and positive roots of a few root systems.

use stratalab::{CartanType, RootSystem};

fn main() -> stratalab::Result<()> {
    for label in ["A3", "B3", "G2", "F4"] {
        let sys = RootSystem::build(label.parse::<CartanType>()?);
        println!(
            "{label}: {} roots, highest root {}",
            sys.roots().len(),
            sys.highest_root()
        );
        for row in sys.cartan() {
            println!("  {row:?}");
        }
    }
    if let Err(e) = "E8".parse::<CartanType>() {
        println!("E8: {e}");
    }
    Ok(())
}
