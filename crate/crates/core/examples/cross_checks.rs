//! Runs the verification suites on reduced grids and prints the report.
//!
//! `cargo run --release --example cross_checks -- full` uses the full grids.
use planetrees::verify::{run_suite, Grids, Suite};

fn main() -> Result<(), planetrees::Error> {
    let full = std::env::args().nth(1).as_deref() == Some("full");
    let grids = if full {
        Grids::default()
    } else {
        Grids { oracle_edges: 5, oracle_edges_one_degree: 7, recursion_edges: 7, permutation_edges: 3, order: 8, ..Grids::default() }
    };
    for suite in [Suite::Recursions, Suite::Oracle, Suite::Series] {
        print!("{}", run_suite(suite, &grids)?.to_text());
    }
    if full {
        print!("{}", run_suite(Suite::Identities, &grids)?.to_text());
    }
    Ok(())
}
