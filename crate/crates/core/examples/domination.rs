//! Distance-k domination numbers of a tree with witnesses.

use eternal_domination::domination::{gamma_k_brute, gamma_k_tree, in_some_min_dominating_set};
use eternal_domination::families::gen_spider_tn;

fn main() {
    let t = gen_spider_tn(3);
    for k in 1..=4 {
        let r = gamma_k_tree(&t, k);
        assert_eq!(r.value, gamma_k_brute(t.graph(), k).unwrap().value);
        println!("gamma_{k} = {} via {:?}", r.value, r.witness);
    }
    let usable: Vec<usize> = (0..t.n()).filter(|&v| in_some_min_dominating_set(&t, v)).collect();
    println!("vertices in some minimum dominating set: {usable:?}");
}
