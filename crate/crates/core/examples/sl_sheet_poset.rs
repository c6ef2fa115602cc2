//! Sheets of sl(n) ordered by closure, printed as a DOT graph, with the pairs where
//! orbit closure and sheet closure disagree.

use stratalab::sheets;

fn main() -> stratalab::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(4);
    let poset = sheets::sl_sheet_poset(n, 12)?;
    print!("{}", poset.to_dot(&format!("sl{n}"), |p| format!("[{}]", p.compact())));
    for (a, b) in sheets::sl_counterexample_pairs(&poset) {
        eprintln!("[{}] <= [{}] in dominance but not as sheets", a.compact(), b.compact());
    }
    Ok(())
}
