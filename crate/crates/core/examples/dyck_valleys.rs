//! Valleys in Dyck paths count two-rooted trees.
use planetrees::oracle::DEFAULT_BUDGET;
use planetrees::{count_total, dyck_valley_total};

fn main() -> Result<(), planetrees::Error> {
    println!("{:>2}  {:>8}  {:>8}", "e", "valleys", "T_2(e)");
    for e in 1..=10 {
        let valleys = dyck_valley_total(e, DEFAULT_BUDGET)?;
        let trees = count_total(2, e);
        assert_eq!(valleys, trees);
        println!("{e:>2}  {valleys:>8}  {trees:>8}");
    }
    Ok(())
}
