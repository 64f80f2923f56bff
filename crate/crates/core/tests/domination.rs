mod common;

use eternal_domination::domination::{
    gamma_forced, gamma_k_brute, gamma_k_tree, gamma_tree, in_some_min_dominating_set,
    is_distance_dominating, leaf_drop_decrement,
};
use eternal_domination::families::enumerate_trees_upto;
use eternal_domination::graph::Graph;
use proptest::prelude::*;

/// Smallest dominating set containing `v`, by subset search.
fn brute_forced(g: &Graph, v: usize) -> usize {
    let n = g.n();
    (0u32..1 << n)
        .filter(|s| s & (1 << v) != 0)
        .filter(|s| {
            let set: Vec<usize> = (0..n).filter(|i| s & (1 << i) != 0).collect();
            is_distance_dominating(g, 1, &set)
        })
        .map(u32::count_ones)
        .min()
        .unwrap() as usize
}

#[test]
fn tree_dp_matches_subset_search() {
    for t in enumerate_trees_upto(10).unwrap() {
        for k in 1..=3 {
            let dp = gamma_k_tree(&t, k);
            assert_eq!(dp.value, gamma_k_brute(t.graph(), k).unwrap().value);
            assert!(is_distance_dominating(t.graph(), k, &dp.witness));
        }
    }
}

#[test]
fn forced_dp_matches_subset_search() {
    for t in enumerate_trees_upto(8).unwrap() {
        let gamma = gamma_tree(&t);
        for v in 0..t.n() {
            let forced = brute_forced(t.graph(), v);
            let r = gamma_forced(&t, &[v]);
            assert_eq!(r.value, forced);
            assert!(r.witness.contains(&v));
            assert_eq!(in_some_min_dominating_set(&t, v), forced == gamma);
        }
    }
}

#[test]
fn leaf_deletion_moves_gamma_by_at_most_one() {
    for t in enumerate_trees_upto(10).unwrap() {
        let gamma = gamma_tree(&t);
        for leaf in t.leaves() {
            if t.n() == 1 {
                continue;
            }
            let (smaller, _) = t.remove_vertices(&[leaf]).unwrap();
            let g = gamma_tree(&smaller);
            assert!(g + 1 >= gamma && g <= gamma);
            assert_eq!(leaf_drop_decrement(&t, leaf).unwrap(), g + 1 == gamma);
        }
    }
}

proptest! {
    #[test]
    fn antitone_in_k(t in common::tree(1, 60)) {
        let values: Vec<usize> = (1..=6).map(|k| gamma_k_tree(&t, k).value).collect();
        prop_assert!(values.windows(2).all(|w| w[1] <= w[0]));
    }

    #[test]
    fn witnesses_validate(t in common::tree(1, 80), k in 1usize..5) {
        let r = gamma_k_tree(&t, k);
        prop_assert_eq!(r.witness.len(), r.value);
        prop_assert!(is_distance_dominating(t.graph(), k, &r.witness));
    }

    #[test]
    fn dp_matches_brute_on_random_trees(t in common::tree(1, 18), k in 1usize..4) {
        prop_assert_eq!(gamma_k_tree(&t, k).value, gamma_k_brute(t.graph(), k).unwrap().value);
    }
}
