//! Domination and distance-k domination numbers.
//!
//! Trees use a linear dynamic program; small general graphs fall back to an
//! exhaustive subset search that doubles as the oracle for the tree DP.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, Tree};
use crate::error::GraphError;

/// Largest graph the subset search accepts.
pub const BRUTE_FORCE_LIMIT: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DominationError {
    #[error("brute-force domination refused: {n} vertices exceeds the limit of {limit}")]
    TooLarge { n: usize, limit: usize },
}

/// A minimum distance-`k` dominating set and its size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationResult {
    pub value: usize,
    /// Sorted vertex set of size `value`.
    pub witness: Vec<usize>,
    pub k: usize,
}

/// Whether every vertex lies within distance `k` of `set`.
pub fn is_distance_dominating(g: &Graph, k: usize, set: &[usize]) -> bool {
    let n = g.n();
    let mut dist = vec![usize::MAX; n];
    let mut frontier: Vec<usize> = Vec::new();
    for &s in set {
        if dist[s] != 0 {
            dist[s] = 0;
            frontier.push(s);
        }
    }
    let mut reached = frontier.len();
    for step in 1..=k {
        let mut next = Vec::new();
        for &u in &frontier {
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = step;
                    next.push(w);
                }
            }
        }
        reached += next.len();
        frontier = next;
    }
    reached == n
}

/// DP state of a processed subtree hanging from `v`.
///
/// `Cover(d)`: everything in the subtree is dominated and the nearest chosen
/// vertex is at distance `d` from `v`.  `Need(u)`: the farthest undominated
/// vertex is at distance `u < k` from `v`, so a chosen vertex outside must
/// come within `k - u` of `v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Cover(usize),
    Need(usize),
}

struct StateSpace {
    k: usize,
}

impl StateSpace {
    fn len(&self) -> usize {
        2 * self.k + 1
    }

    fn index(&self, s: State) -> usize {
        match s {
            State::Cover(d) => d,
            State::Need(u) => self.k + 1 + u,
        }
    }

    fn state(&self, i: usize) -> State {
        if i <= self.k {
            State::Cover(i)
        } else {
            State::Need(i - self.k - 1)
        }
    }

    /// Merges the running state of `v` with a child state seen across the
    /// edge to `v`.  `None` means an undominated vertex is out of reach.
    fn combine(&self, running: State, child: State) -> Option<State> {
        let k = self.k;
        let child = match child {
            // fully dominated but too far away to help v
            State::Cover(d) if d + 1 > k => return Some(running),
            State::Cover(d) => State::Cover(d + 1),
            State::Need(u) => State::Need(u + 1),
        };
        let merged = match (running, child) {
            (State::Cover(a), State::Cover(b)) => State::Cover(a.min(b)),
            (State::Cover(d), State::Need(u)) | (State::Need(u), State::Cover(d)) => {
                if d + u <= k {
                    State::Cover(d)
                } else {
                    State::Need(u)
                }
            }
            (State::Need(a), State::Need(b)) => State::Need(a.max(b)),
        };
        match merged {
            State::Need(u) if u >= k => None,
            s => Some(s),
        }
    }
}

const INF: usize = usize::MAX;

/// Minimum distance-`k` dominating set of a tree containing every vertex of
/// `forced`.
pub fn gamma_k_tree_forced(t: &Tree, k: usize, forced: &[usize]) -> DominationResult {
    assert!(k >= 1, "distance parameter must be positive");
    let n = t.n();
    let space = StateSpace { k };
    let s_len = space.len();
    let rooting = t.rooted(0);
    let mut is_forced = vec![false; n];
    for &f in forced {
        is_forced[f] = true;
    }

    let mut cost = vec![vec![INF; s_len]; n];
    // back[v][i][s] = (running state before child i, state of child i)
    let mut back: Vec<Vec<Vec<(u16, u16)>>> = vec![Vec::new(); n];
    for &v in rooting.order.iter().rev() {
        let mut run = vec![INF; s_len];
        run[space.index(State::Cover(0))] = 1;
        if !is_forced[v] {
            run[space.index(State::Need(0))] = 0;
        }
        let mut steps = Vec::with_capacity(rooting.children[v].len());
        for &c in &rooting.children[v] {
            let mut next = vec![INF; s_len];
            let mut from = vec![(u16::MAX, u16::MAX); s_len];
            // child states are scanned cover-first so ties favour choosing below
            for cs in 0..s_len {
                let child_cost = cost[c][cs];
                if child_cost == INF {
                    continue;
                }
                for rs in 0..s_len {
                    if run[rs] == INF {
                        continue;
                    }
                    let Some(merged) = space.combine(space.state(rs), space.state(cs)) else {
                        continue;
                    };
                    let mi = space.index(merged);
                    let total = run[rs] + child_cost;
                    if total < next[mi] {
                        next[mi] = total;
                        from[mi] = (rs as u16, cs as u16);
                    }
                }
            }
            run = next;
            steps.push(from);
        }
        cost[v] = run;
        back[v] = steps;
    }

    let root = rooting.root;
    let (best_state, value) = (0..=k)
        .map(|d| (d, cost[root][d]))
        .min_by_key(|&(_, c)| c)
        .expect("k >= 1 gives at least one cover state");
    assert_ne!(value, INF, "selecting every vertex is always feasible");

    let mut witness = Vec::with_capacity(value);
    let mut stack = vec![(root, best_state)];
    while let Some((v, mut s)) = stack.pop() {
        for (i, &c) in rooting.children[v].iter().enumerate().rev() {
            let (prev, cs) = back[v][i][s];
            stack.push((c, usize::from(cs)));
            s = usize::from(prev);
        }
        if s == space.index(State::Cover(0)) {
            witness.push(v);
        }
    }
    witness.sort_unstable();
    debug_assert_eq!(witness.len(), value);
    DominationResult { value, witness, k }
}

/// `γ_k(T)` with a witness, by tree dynamic programming.
pub fn gamma_k_tree(t: &Tree, k: usize) -> DominationResult {
    gamma_k_tree_forced(t, k, &[])
}

/// `γ(T)`.
pub fn gamma_tree(t: &Tree) -> usize {
    gamma_k_tree(t, 1).value
}

/// Minimum dominating set (k = 1) containing all of `forced`.
pub fn gamma_forced(t: &Tree, forced: &[usize]) -> DominationResult {
    gamma_k_tree_forced(t, 1, forced)
}

pub fn in_some_min_dominating_set(t: &Tree, v: usize) -> bool {
    gamma_forced(t, &[v]).value == gamma_tree(t)
}

/// Whether deleting the leaf `v` lowers the domination number by one.
/// The empty graph left by deleting `K_1` has domination number 0.
pub fn leaf_drop_decrement(t: &Tree, v: usize) -> Result<bool, GraphError> {
    if v >= t.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: t.n() });
    }
    if !t.is_leaf(v) {
        return Err(GraphError::NotALeaf(v));
    }
    let before = gamma_tree(t);
    let after = if t.n() == 1 {
        0
    } else {
        gamma_tree(&t.remove_vertices(&[v])?.0)
    };
    Ok(after + 1 == before)
}

/// `γ_k(G)` by increasing-cardinality subset search in lexicographic order.
pub fn gamma_k_brute(g: &Graph, k: usize) -> Result<DominationResult, DominationError> {
    let n = g.n();
    if n > BRUTE_FORCE_LIMIT {
        return Err(DominationError::TooLarge {
            n,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    if n == 0 {
        return Ok(DominationResult {
            value: 0,
            witness: Vec::new(),
            k,
        });
    }
    let balls: Vec<u32> = (0..n)
        .map(|s| {
            crate::graph::bfs_distances(g, s)
                .expect("source in range")
                .iter()
                .enumerate()
                .filter(|(_, d)| d.is_some_and(|d| d <= k))
                .fold(0u32, |acc, (v, _)| acc | (1 << v))
        })
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    for size in 1..=n {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let covered = combo.iter().fold(0u32, |acc, &v| acc | balls[v]);
            if covered == full {
                return Ok(DominationResult {
                    value: size,
                    witness: combo,
                    k,
                });
            }
            if !next_combination(&mut combo, n) {
                break;
            }
        }
    }
    unreachable!("the full vertex set dominates")
}

/// Advances `combo` to the next `combo.len()`-subset of `0..n` in
/// lexicographic order; returns `false` after the last one.
pub(crate) fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let r = combo.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if combo[i] < n - r + i {
            combo[i] += 1;
            for j in i + 1..r {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
