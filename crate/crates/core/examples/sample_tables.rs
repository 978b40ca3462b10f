//! Prints the four sample tables of counts.
//!
//! `cargo run --example sample_tables -- csv` for comma-separated output.
use planetrees::{Table, TableKind};

fn main() {
    let csv = std::env::args().nth(1).as_deref() == Some("csv");
    for kind in TableKind::ALL {
        let table = Table::generate(kind);
        println!("# {kind}");
        print!("{}", if csv { table.to_csv() } else { table.to_text() });
        println!();
    }
}
