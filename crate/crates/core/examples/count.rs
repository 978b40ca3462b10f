//! Counts the trees of one spec by every method.
//!
//! ```bash
//! cargo run --example count -- "N=3 e=6 d=3,1,4"
//! ```
use planetrees::{count, count_by_contraction, count_by_deletion, oracle_count, DegreeSpec};

fn main() -> Result<(), planetrees::Error> {
    let text = std::env::args().nth(1).unwrap_or_else(|| "N=2 e=5 d=2,3".to_string());
    let spec: DegreeSpec = text.parse()?;

    let report = spec.validate();
    if !report.valid {
        let rules: Vec<_> = report.violated_rules.iter().map(|r| r.id()).collect();
        println!("{spec} is inadmissible ({}), so every count is zero", rules.join(", "));
    }

    println!("{spec}");
    println!("  closed form  {}", count(&spec));
    println!("  contraction  {}", count_by_contraction(&spec));
    println!("  deletion     {}", count_by_deletion(&spec));
    match oracle_count(&spec) {
        Ok(n) => println!("  enumeration  {n}"),
        Err(err) => println!("  enumeration  skipped: {err}"),
    }
    Ok(())
}
