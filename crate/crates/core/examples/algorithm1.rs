//! Eternal distance-2 domination number of a tree with the stack procedure.
//!
//! `cargo run --example algorithm1 -- 12` runs it on the path with 12 vertices;
//! without an argument a small caterpillar is used.

use eternal_domination::eternal::eternal2_algorithm1;
use eternal_domination::Tree;

fn main() {
    let tree = match std::env::args().nth(1) {
        Some(n) => Tree::path(n.parse().expect("vertex count")),
        None => Tree::from_edges(
            9,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (1, 6), (3, 7), (5, 8)],
        )
        .unwrap(),
    };
    let out = eternal2_algorithm1(&tree, 0).unwrap();
    println!("n = {}, diameter = {}", tree.n(), tree.diameter());
    for r in &out.removals {
        println!("  remove {:?} around {}", r.removed, r.center);
    }
    if out.residual_nonempty {
        println!("  one guard for what is left");
    }
    println!("eternal distance-2 domination number: {}", out.value);

    // the value does not depend on the root
    let roots: Vec<usize> = (0..tree.n())
        .map(|r| eternal2_algorithm1(&tree, r).unwrap().value)
        .collect();
    assert!(roots.iter().all(|&v| v == out.value));
}
