//! The two recursions share a memo table; this shows how much each one
//! stores while sweeping a grid, and that they agree with the closed form.
use planetrees::recursion::split_terms;
use planetrees::{count, DegreeSpec, Engine, Recursions};

fn main() {
    let engines = Recursions::new();
    let mut checked = 0;
    for e in 1..=9 {
        for d1 in 1..=e {
            for d2 in 1..=e {
                for d3 in 1..=e {
                    let spec = DegreeSpec::full(3, e, vec![d1, d2, d3]).unwrap();
                    let want = count(&spec);
                    assert_eq!(engines.contraction(&spec), want);
                    assert_eq!(engines.deletion(&spec), want);
                    checked += 1;
                }
            }
        }
    }
    println!("{checked} three-root specs agree");
    let memo = engines.memo();
    println!(
        "memo: {} entries ({} contraction, {} deletion)",
        memo.len(),
        memo.entries_for(Engine::Contraction),
        memo.entries_for(Engine::Deletion)
    );

    for n in 1..=5 {
        println!("N={n}: deletion visits {} splits of the other roots", split_terms(n).len());
    }
}
