use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{HarnessError, SCHEMA_VERSION};
use crate::eternal::eternal2_algorithm1;
use crate::graph::Tree;

/// Largest tree the benchmark will build.
pub const BENCH_SIZE_LIMIT: usize = 10_000_000;

/// Uniform random attachment: vertex `i > 0` picks its parent uniformly
/// from `0..i`.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Tree {
    assert!(n >= 1, "trees have at least one vertex");
    let parent: Vec<usize> = (0..n)
        .map(|i| if i == 0 { 0 } else { rng.gen_range(0..i) })
        .collect();
    Tree::from_parents(&parent)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub n: usize,
    pub trials: usize,
    pub mean_ns_per_vertex: f64,
    pub min_ns_per_vertex: f64,
    pub mean_value: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchTable {
    pub schema_version: u32,
    pub seed: u64,
    /// Trees come from ChaCha8 seeded with `seed`, sizes in the order given.
    pub rng: String,
    pub rows: Vec<BenchRow>,
}

impl BenchTable {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["n", "trials", "mean_ns_per_vertex", "min_ns_per_vertex", "mean_value"])
            .expect("in-memory write");
        for r in &self.rows {
            w.serialize((r.n, r.trials, r.mean_ns_per_vertex, r.min_ns_per_vertex, r.mean_value))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// Mean ns/vertex of the row for `n`.
    pub fn ns_per_vertex(&self, n: usize) -> Option<f64> {
        self.rows.iter().find(|r| r.n == n).map(|r| r.mean_ns_per_vertex)
    }
}

/// Times Algorithm 1 on `trials` random trees of every size.  Tree
/// generation is not timed.
pub fn cmd_bench(sizes: &[usize], trials: usize, seed: u64) -> Result<BenchTable, HarnessError> {
    if let Some(&n) = sizes.iter().find(|&&n| n > BENCH_SIZE_LIMIT) {
        return Err(HarnessError::Guard(format!(
            "size {n} exceeds the benchmark limit {BENCH_SIZE_LIMIT}"
        )));
    }
    if sizes.contains(&0) {
        return Err(HarnessError::Input("sizes must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::new();
    if trials > 0 {
        for &n in sizes {
            let mut per_vertex = Vec::with_capacity(trials);
            let mut value_sum = 0;
            for _ in 0..trials {
                let t = random_tree(n, &mut rng);
                let start = Instant::now();
                let out = eternal2_algorithm1(&t, 0)?;
                per_vertex.push(start.elapsed().as_nanos() as f64 / n as f64);
                value_sum += out.value;
            }
            rows.push(BenchRow {
                n,
                trials,
                mean_ns_per_vertex: per_vertex.iter().sum::<f64>() / trials as f64,
                min_ns_per_vertex: per_vertex.iter().copied().fold(f64::INFINITY, f64::min),
                mean_value: value_sum as f64 / trials as f64,
            });
        }
    }
    Ok(BenchTable {
        schema_version: SCHEMA_VERSION,
        seed,
        rng: "ChaCha8".into(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::canonical_form;

    #[test]
    fn seeded_trees_repeat() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for n in [1, 5, 40] {
            let (x, y) = (random_tree(n, &mut a), random_tree(n, &mut b));
            assert_eq!(canonical_form(&x), canonical_form(&y));
            assert_eq!(x, y);
        }
    }

    #[test]
    fn zero_trials_is_empty() {
        let t = cmd_bench(&[1000], 0, 1).unwrap();
        assert!(t.rows.is_empty());
        assert_eq!(t.to_csv().lines().count(), 1);
    }

    #[test]
    fn rows_and_guard() {
        let t = cmd_bench(&[100, 1000], 2, 3).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert!(t.ns_per_vertex(1000).unwrap() > 0.0);
        assert_eq!(
            cmd_bench(&[BENCH_SIZE_LIMIT + 1], 1, 0).unwrap_err().exit_code(),
            super::super::EXIT_GUARD
        );
        // identical seeds give identical values
        let again = cmd_bench(&[100, 1000], 2, 3).unwrap();
        let values = |t: &BenchTable| t.rows.iter().map(|r| r.mean_value).collect::<Vec<_>>();
        assert_eq!(values(&t), values(&again));
    }
}
