//! Recognizes the tree families behind the characterization theorems and
//! replays the construction traces.

use eternal_domination::eternal::{eternal2_value, is_critical};
use eternal_domination::families::{recognize_bbt, recognize_c, recognize_script_t, tree_from_canonical};
use eternal_domination::Tree;

fn main() {
    let trees = [
        ("P7", Tree::path(7)),
        ("K1,4", Tree::star(4)),
        ("spider", tree_from_canonical("(((()))((()))((())))").unwrap()),
    ];
    for (name, t) in &trees {
        let (in_t, trace) = recognize_script_t(t);
        let (in_c, _) = recognize_c(t);
        println!(
            "{name}: value {}, script T {in_t}, gamma = gamma_2 family {}, C {in_c}, critical {}",
            eternal2_value(t),
            recognize_bbt(t),
            is_critical(t).critical
        );
        if let Some(trace) = trace {
            for step in &trace.steps {
                println!("  {step:?}");
            }
            assert_eq!(trace.replay().n(), t.n());
        }
    }
}
