//! One root at a time: the Catalan triangle by root degree and the bound
//! on each further root's degree.
use planetrees::{count, count_total, max_degree, DegreeSpec};

fn main() -> Result<(), planetrees::Error> {
    let e = 6;
    // T_1(e; d) splits the Catalan number C_e by the degree of the root
    let row: Vec<String> = (1..=e).map(|d| count(&DegreeSpec::full(1, e, vec![d]).unwrap()).to_string()).collect();
    println!("T_1({e}; d), d = 1..{e}: {}", row.join(" "));
    println!("sum = {} = C_{e}", count_total(1, e));

    // fixing degrees one by one; the next degree is bounded by the ones fixed so far
    let mut spec = DegreeSpec::total(4, e)?;
    for d in [3, 2, 1] {
        println!("{spec}: next degree at most {}, count {}", max_degree(&spec)?, count(&spec));
        spec = spec.with_degree(d)?;
    }
    println!("{spec}: next degree at most {}, count {}", max_degree(&spec)?, count(&spec));

    let full = spec.with_degree(2)?;
    println!("{full}: count {}", count(&full));
    Ok(())
}
