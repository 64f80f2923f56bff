//! Lists the non-isomorphic trees on n vertices with their canonical forms.

use eternal_domination::eternal::eternal2_value;
use eternal_domination::families::{canonical_form, enumerate_trees};

fn main() {
    let n: usize = std::env::args().nth(1).map_or(6, |s| s.parse().expect("vertex count"));
    let trees = enumerate_trees(n).unwrap();
    println!("{} trees on {n} vertices", trees.len());
    for t in &trees {
        println!("{}  value {}", canonical_form(t), eternal2_value(t));
    }
}
