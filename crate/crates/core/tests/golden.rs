//! Outputs pinned to files under `tests/golden`. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::fmt::Write as _;
use std::path::PathBuf;

use stratalab::orbits::{self, Algebra};
use stratalab::{sheets, Config, PseudoLevis, RootSystem, StrataAnalysis};

fn check(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, actual).unwrap();
        return;
    }
    let expected = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "{name} differs from golden file");
}

#[test]
fn so8_orbits() {
    let mut out = String::new();
    for o in orbits::orbits(Algebra::So(8)) {
        writeln!(
            out,
            "{o} dim={} rigid={}",
            orbits::orbit_dimension(&o),
            orbits::is_rigid(&o, 14).unwrap()
        )
        .unwrap();
    }
    check("so8_orbits.txt", &out);
}

#[test]
fn counterexample_scans() {
    let mut out = String::new();
    for a in [
        Algebra::So(7),
        Algebra::Sp(6),
        Algebra::So(8),
        Algebra::Sp(8),
        Algebra::So(9),
        Algebra::Sp(10),
        Algebra::So(11),
    ] {
        let pairs = orbits::counterexample_scan(a, 14).unwrap();
        writeln!(out, "{a}: {} pairs", pairs.len()).unwrap();
        for (x, y) in pairs {
            writeln!(out, "  {x} > {y}").unwrap();
        }
    }
    check("counterexample_scans.txt", &out);
}

#[test]
fn sl4_hasse() {
    let poset = sheets::sl_sheet_poset(4, 12).unwrap();
    check("sl4_sheets.dot", &poset.to_dot("sl4", |p| format!("[{}]", p.compact())));
}

#[test]
fn d4_strata() {
    let a = StrataAnalysis::new(&RootSystem::build("D4".parse().unwrap()), Config::default().scan_budget).unwrap();
    let exports: Vec<_> = a.spherical_strata().iter().map(|s| a.export_stratum(s)).collect();
    check(
        "d4_strata.json",
        &(serde_json::to_string_pretty(&exports).unwrap() + "\n"),
    );
}

#[test]
fn c5_pseudo_levis() {
    let p = PseudoLevis::new(&RootSystem::build("C5".parse().unwrap()), Config::default().scan_budget).unwrap();
    let exports: Vec<_> = p.classes().iter().map(|c| c.export()).collect();
    check(
        "c5_pseudo_levis.json",
        &(serde_json::to_string_pretty(&exports).unwrap() + "\n"),
    );
}
