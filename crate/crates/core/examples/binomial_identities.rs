//! Binomial sums from the three-root recursion and the identities
//! between them, checked exactly over small grids.
use planetrees::identities::{
    closed_form_s, partial_row_sweep, eval_pfq, four_term_check_degrees, sigma_decomposition_check, sum_s,
    row_hypergeom_check, HypergeomSpec,
};
use planetrees::exact::ExactRat;

fn main() -> Result<(), planetrees::Error> {
    for (which, args) in [(1u8, vec![3, 2, 1]), (3, vec![4, 2]), (4, vec![4, 2]), (6, vec![3, 2, 1, 2])] {
        println!("S{which}{args:?} = {} (closed form {})", sum_s(which, &args)?, closed_form_s(which, &args)?);
    }

    let rep = sigma_decomposition_check(5, 2, 2, 2)?;
    let raw: Vec<&str> = rep.terms.iter().map(|t| t.raw.as_str()).collect();
    println!("T_3(5; 2,2,2) = {} = {}", rep.total, raw.join(" + "));
    println!("four-term relation at e=12 d=4,3,3: {}", four_term_check_degrees(12, 4, 3, 3)?);

    let sweep = partial_row_sweep(20, -5..=10, -5..=10);
    println!("S5 partial-row identity: {} cells, {} counterexamples", sweep.checked, sweep.failures.len());

    let rec = row_hypergeom_check(2, 0, 0)?;
    println!("n=2: row sum {} vs hypergeometric form {}", rec.row_sum, rec.hypergeometric);

    let half = |n: i64| ExactRat::new(n.into(), 2.into());
    let int = |n: i64| ExactRat::from_integer(n.into());
    let f = HypergeomSpec::new(vec![int(1), half(-1), int(-1)], vec![half(5), int(3)], int(1));
    println!("3F2(1, -1/2, -1; 5/2, 3; 1) = {}", eval_pfq(&f)?);
    Ok(())
}
