//! Reads and writes graphs as edge lists and graph6.

use eternal_domination::graph::io::{emit_edge_list, emit_graph6, parse_any, parse_graph6};

fn main() {
    let g = parse_any("# a path\n0 1\n1 2\n2 3\n").unwrap();
    let code = emit_graph6(&g);
    println!("graph6: {code}");
    let back = parse_graph6(&code).unwrap();
    print!("edge list:\n{}", emit_edge_list(&back));
    assert_eq!(back, g);
}
