//! Runs every check over its default type matrix and prints the report.
//!
//! `STRATALAB_BUDGET` caps the size of the Weyl groups that may be enumerated.

use stratalab::{verify, Config};

fn main() {
    let report = verify::run_all(&Config::from_env());
    print!("{}", report.render());
    if !report.passed() {
        std::process::exit(1);
    }
}
