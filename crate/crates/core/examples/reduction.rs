//! Peels 2-leaves one at a time and prints the trace.

use eternal_domination::eternal::{eternal2_algorithm1, eternal2_by_reduction};
use eternal_domination::families::gen_t_mk;
use eternal_domination::Tree;

fn main() {
    // a path of two vertices hung from every vertex of P4
    let tree = gen_t_mk(&Tree::path(4), 2);
    let trace = eternal2_by_reduction(&tree);
    for s in &trace.steps {
        println!("peel {} ({:?}): remove {:?}", s.center, s.part, s.removed);
    }
    println!(
        "residual {:?} has diameter {}, worth {}",
        trace.residual, trace.residual_diameter, trace.base_value
    );
    println!("total {}", trace.total);
    assert_eq!(trace.total, eternal2_algorithm1(&tree, 0).unwrap().value);
}
