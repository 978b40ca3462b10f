//! Generating functions of two- and three-rooted trees: closed forms
//! against the recursive construction, and coefficient extraction.
use planetrees::genfun::{all_ones_gf, closed_form_gf, three_root_shape_check, is_symmetric, recursion_gf};

fn main() -> Result<(), planetrees::Error> {
    let order = 8;
    let g2 = closed_form_gf(2, order)?;
    assert_eq!(g2, recursion_gf(2, order)?);
    println!("G_2 to order {order}: closed form equals the recursion; symmetric: {}", is_symmetric(&g2));
    println!("[x1^2 x2^3 t^5] G_2 = {}", g2.coeff(5, &[2, 3]));

    // setting every x to 1 leaves the totals T_2(e)
    let totals = g2.set_var_one(0).set_var_one(1);
    let row: Vec<String> = (0..=order).map(|e| totals.coeff(e, &[0, 0]).to_string()).collect();
    println!("T_2(e): {}", row.join(" "));

    let leaves = all_ones_gf(3, order)?;
    let row: Vec<String> = (0..=order).map(|e| leaves.coeff(e, &[]).to_string()).collect();
    println!("T_3(e; 1, 1, 1): {}", row.join(" "));

    let g3 = recursion_gf(3, 6)?;
    println!("G_3 has the conjectured shape to order 6: {}", three_root_shape_check(&g3)?);
    Ok(())
}
