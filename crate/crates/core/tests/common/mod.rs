#![allow(dead_code)]

use eternal_domination::Tree;
use proptest::prelude::*;

/// Random trees on `min..=max` vertices as parent arrays.
pub fn tree(min: usize, max: usize) -> impl Strategy<Value = Tree> {
    (min..=max)
        .prop_flat_map(|n| proptest::collection::vec(any::<u32>(), n))
        .prop_map(|raw| {
            let parent: Vec<usize> = raw
                .iter()
                .enumerate()
                .map(|(i, &r)| if i == 0 { 0 } else { r as usize % i })
                .collect();
            Tree::from_parents(&parent)
        })
}

/// A random relabelling of `t` together with the permutation.
pub fn shuffled(t: &Tree, seed: u64) -> Tree {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut perm: Vec<usize> = (0..t.n()).collect();
    perm.shuffle(&mut rand_chacha::ChaCha8Rng::seed_from_u64(seed));
    t.relabel(&perm)
}
