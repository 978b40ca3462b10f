//! Integer sequences in OEIS b-file form.
//!
//! ```bash
//! cargo run --example oeis_bfiles -- A001763 12
//! ```
use planetrees::tables::{all_leaf_roots_normalized, Sequence};

fn main() -> Result<(), planetrees::Error> {
    let mut args = std::env::args().skip(1);
    if let Some(id) = args.next() {
        let seq: Sequence = id.parse()?;
        let terms = args.next().and_then(|t| t.parse().ok()).unwrap_or(10);
        print!("{}", seq.bfile(terms)?);
        return Ok(());
    }
    for seq in Sequence::ALL {
        match seq.bfile(8) {
            Ok(text) => println!("{}: {}", seq.oeis_id(), text.trim_end().replace('\n', ", ")),
            Err(err) => println!("{}: {err}", seq.oeis_id()),
        }
    }
    // all-leaf counts over (N-1)!, read along a fixed edge count
    let row: Vec<String> = (1..=6).map(|n| all_leaf_roots_normalized(n, 6).unwrap().to_string()).collect();
    println!("T_N(6; 1..1) / (N-1)!, N = 1..6: {}", row.join(" "));
    Ok(())
}
