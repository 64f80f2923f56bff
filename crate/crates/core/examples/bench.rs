//! Times the linear algorithm on seeded random trees.

use eternal_domination::harness::cmd_bench;

fn main() {
    let table = cmd_bench(&[10_000, 100_000, 1_000_000], 3, 1).unwrap();
    print!("{}", table.to_csv());
}
