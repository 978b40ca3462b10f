//! Truncated power series with exact rational coefficients: the Catalan
//! series from the square root of `1 - 4t`, checked against its quadratic
//! equation, and a quotient in two variables.
use planetrees::exact::ExactRat;
use planetrees::genfun::{catalan_gf, sqrt_one_minus_4t};
use planetrees::series::TruncSeries;

fn main() -> Result<(), planetrees::Error> {
    let order = 10;
    let y = sqrt_one_minus_4t(order, 0);
    println!("sqrt(1-4t) = {y}");
    let c = catalan_gf(order, 0)?;
    println!("C(t)       = {c}");

    let t = TruncSeries::t(order, 0);
    let one = TruncSeries::one(order, 0);
    assert_eq!(c, one.add(&t.mul(&c).mul(&c)));
    println!("C = 1 + t C^2 holds to order {order}");

    // 1 / (1 - t x): the geometric series, truncated in t and in x
    let two_vars = TruncSeries::one(4, 1).sub(&TruncSeries::monomial(4, 1, 1, &[1], ExactRat::from_integer(1.into())));
    let geometric = two_vars.inverse()?;
    for line in geometric.dump_lines() {
        println!("  {line}");
    }
    Ok(())
}
