//! Solves the guard game exactly and replays a sequence of attacks.

use eternal_domination::graph::Graph;
use eternal_domination::oracle::{defend_interactively, eternal_number_oracle, OracleLimits};

fn main() {
    let limits = OracleLimits::default();
    let g = Graph::path(8);
    for k in 1..=3 {
        let r = eternal_number_oracle(&g, k, limits).unwrap();
        println!("P8, k = {k}: {} guards, {} winning positions", r.m_min, r.winning_configs.len());
    }

    let r = eternal_number_oracle(&g, 2, limits).unwrap();
    let start = r.winning_configs[0].clone();
    let attacks = [7, 0, 4, 3, 6];
    let replies = defend_interactively(&g, 2, &start, &attacks, limits).unwrap();
    println!("start {:?}", replies[0].guards());
    for (a, c) in attacks.iter().zip(&replies[1..]) {
        println!("attack {a} -> guards {:?}", c.guards());
    }

    // non-trees work too
    let c7 = Graph::cycle(7);
    println!("C7, k = 2: {}", eternal_number_oracle(&c7, 2, limits).unwrap().m_min);
}
