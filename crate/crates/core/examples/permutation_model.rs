//! Trees as permutation pairs on half-edges, counted up to relabeling.
use planetrees::oracle::{PermutationTree, PERMUTATION_MODEL_MAX_EDGES};
use planetrees::{count_total, permutation_model_count};

fn main() -> Result<(), planetrees::Error> {
    // a path with two edges: half-edges 0-1 and 2-3, the middle vertex holds 1 and 2
    let path = PermutationTree { alpha: vec![1, 0, 3, 2], sigma: vec![0, 2, 1, 3], roots: vec![0] };
    // the same tree with labels 0,1,2,3 sent to 2,3,0,1
    let relabeled = PermutationTree { alpha: vec![1, 0, 3, 2], sigma: vec![3, 1, 2, 0], roots: vec![2] };
    println!("same tree: {}", path.canonical() == relabeled.canonical());

    for e in 1..=PERMUTATION_MODEL_MAX_EDGES {
        for n in 1..=3.min(e + 1) {
            let model = permutation_model_count(n, e)?;
            println!("N={n} e={e}: {model} classes, closed form {}", count_total(n, e));
        }
    }
    Ok(())
}
