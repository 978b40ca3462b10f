//! Plane trees as Dyck words: walk the one-rooted trees with four edges,
//! then tally all trees with seven edges by root degree.
use std::collections::BTreeMap;

use planetrees::oracle::{catalan, Census, OneRootedTree, DEFAULT_BUDGET};
use planetrees::enumerate_one_rooted;

fn main() -> Result<(), planetrees::Error> {
    for tree in enumerate_one_rooted(4) {
        println!("{}  degrees {:?}", tree.dyck, tree.vertex_degrees);
    }
    let tree = OneRootedTree::from_dyck("(()(()))")?;
    println!("root degree of {} is {}", tree.dyck, tree.root_degree());

    let census = Census::build(7, DEFAULT_BUDGET)?;
    let mut by_root: BTreeMap<usize, u64> = BTreeMap::new();
    for (profile, trees) in census.profiles() {
        *by_root.entry(profile.root_degree).or_default() += trees;
    }
    println!("{} trees with 7 edges (C_7 = {})", census.trees(), catalan(7));
    for (d, n) in by_root {
        println!("  root degree {d}: {n}");
    }
    Ok(())
}
