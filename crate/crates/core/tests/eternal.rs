mod common;

use eternal_domination::domination::{gamma_k_tree, gamma_tree};
use eternal_domination::eternal::{
    eternal2_algorithm1, eternal2_by_reduction, eternal2_value, is_critical, RemovedPart,
};
use eternal_domination::families::{enumerate_trees_upto, gen_spider_tn, gen_t_mk};
use eternal_domination::oracle::{eternal_number_oracle, OracleLimits};
use eternal_domination::Tree;
use proptest::prelude::*;

#[test]
fn every_root_gives_the_same_value() {
    for t in enumerate_trees_upto(10).unwrap() {
        let value = eternal2_value(&t);
        for r in 0..t.n() {
            assert_eq!(eternal2_algorithm1(&t, r).unwrap().value, value);
        }
    }
}

#[test]
fn three_methods_agree_up_to_ten_vertices() {
    for t in enumerate_trees_upto(10).unwrap() {
        let a = eternal2_value(&t);
        assert_eq!(eternal2_by_reduction(&t).total, a);
        let o = eternal_number_oracle(t.graph(), 2, OracleLimits::default()).unwrap();
        assert_eq!(o.m_min, a);
    }
}

#[test]
fn paths() {
    for n in 1..=30 {
        assert_eq!(eternal2_value(&Tree::path(n)), n.div_ceil(3));
    }
}

#[test]
fn stems_with_two_leaves_are_redundant() {
    for t in enumerate_trees_upto(10).unwrap() {
        let value = eternal2_value(&t);
        for s in 0..t.n() {
            let leaves: Vec<usize> =
                t.neighbors(s).iter().copied().filter(|&l| t.is_leaf(l)).collect();
            if leaves.len() >= 2 && t.n() > 2 {
                let (smaller, _) = t.remove_vertices(&leaves[..1]).unwrap();
                assert_eq!(eternal2_value(&smaller), value);
            }
        }
    }
}

#[test]
fn bounds_on_small_trees() {
    for t in enumerate_trees_upto(10).unwrap() {
        let e = eternal2_value(&t);
        assert!(gamma_k_tree(&t, 2).value <= e);
        assert!(e <= gamma_tree(&t));
        assert!(e <= t.n().div_ceil(3));
    }
}

#[test]
fn reduction_steps_remove_closures() {
    for t in enumerate_trees_upto(10).unwrap() {
        let trace = eternal2_by_reduction(&t);
        let mut removed: Vec<usize> = trace.steps.iter().flat_map(|s| s.removed.clone()).collect();
        removed.extend(&trace.residual);
        removed.sort_unstable();
        assert_eq!(removed, (0..t.n()).collect::<Vec<_>>());
        for s in &trace.steps {
            assert_eq!(s.removed.contains(&s.center), s.part == RemovedPart::Closed);
        }
        assert!(trace.residual_diameter <= 4);
    }
}

#[test]
fn spiders_and_pendant_paths() {
    for legs in 2..=6 {
        let s = gen_spider_tn(legs);
        assert_eq!(gamma_tree(&s), legs);
        assert_eq!(eternal2_value(&s), 2);
    }
    for base in enumerate_trees_upto(6).unwrap() {
        assert_eq!(eternal2_value(&gen_t_mk(&base, 2)), base.n());
    }
}

#[test]
fn criticality_witnesses_are_leaves() {
    for t in enumerate_trees_upto(9).unwrap() {
        let c = is_critical(&t);
        assert_eq!(c.critical, c.witness.is_none());
        if let Some(w) = c.witness {
            assert!(t.is_leaf(w));
        }
    }
}

proptest! {
    #[test]
    fn reduction_matches_algorithm1(t in common::tree(1, 300)) {
        prop_assert_eq!(eternal2_by_reduction(&t).total, eternal2_value(&t));
    }

    #[test]
    fn root_independent_on_random_trees(t in common::tree(1, 200), r in any::<usize>()) {
        prop_assert_eq!(eternal2_algorithm1(&t, r % t.n()).unwrap().value, eternal2_value(&t));
    }

    #[test]
    fn label_independent(t in common::tree(1, 200), seed in any::<u64>()) {
        prop_assert_eq!(eternal2_value(&common::shuffled(&t, seed)), eternal2_value(&t));
    }

    #[test]
    fn sandwiched(t in common::tree(1, 200)) {
        let e = eternal2_value(&t);
        prop_assert!(gamma_k_tree(&t, 2).value <= e && e <= gamma_tree(&t));
        prop_assert!(e <= t.n().div_ceil(3));
    }
}
