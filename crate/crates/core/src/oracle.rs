//! Exact solver for the eternal distance-k domination game on small graphs.
//!
//! Positions are guard multisets of a fixed size `m`.  The winning positions
//! form the greatest set `W` such that every `D` in `W` answers every attack
//! `r` with some `D'` in `W` that contains `r` and is reachable from `D`
//! (a perfect matching pairs old and new guard positions within distance
//! `k`).  `W` is found by deleting violators from the set of all multisets
//! until nothing changes.

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::domination::{gamma_k_brute, DominationError};
use crate::graph::{distance_matrix, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle refused: {what} = {value} exceeds the limit {limit}")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("the game is only defined on connected graphs")]
    Disconnected,
    #[error("guard configurations have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("guard vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("start configuration is not winning (first undefended attack: {failed_at:?})")]
    NotWinning { failed_at: Option<usize> },
    #[error("no winning guard count up to {0}")]
    NoWinningSize(usize),
    #[error(transparent)]
    Domination(#[from] DominationError),
}

/// Guard rails on instance size.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleLimits {
    pub max_n: usize,
    pub max_m: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_n: 12, max_m: 5 }
    }
}

impl OracleLimits {
    fn check(&self, n: usize, m: usize) -> Result<(), OracleError> {
        if n > self.max_n {
            return Err(OracleError::LimitExceeded {
                what: "n",
                value: n,
                limit: self.max_n,
            });
        }
        if m > self.max_m {
            return Err(OracleError::LimitExceeded {
                what: "m",
                value: m,
                limit: self.max_m,
            });
        }
        Ok(())
    }
}

/// Guard positions as a sorted multiset; several guards may share a vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GuardConfig(Vec<usize>);

impl GuardConfig {
    pub fn new(mut guards: Vec<usize>) -> Self {
        guards.sort_unstable();
        GuardConfig(guards)
    }

    pub fn guards(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }
}

impl From<Vec<usize>> for GuardConfig {
    fn from(v: Vec<usize>) -> Self {
        GuardConfig::new(v)
    }
}

/// `within[u][v]` iff `dist(u, v) <= k`.
fn reach_table(g: &Graph, k: usize) -> Vec<Vec<bool>> {
    distance_matrix(g)
        .into_iter()
        .map(|row| row.into_iter().map(|d| d.is_some_and(|d| d <= k)).collect())
        .collect()
}

/// Perfect matching between the guard slots of `a` and `b` by augmenting
/// paths; repeated vertices are separate slots.
fn slots_match(within: &[Vec<bool>], a: &[usize], b: &[usize]) -> bool {
    fn augment(
        i: usize,
        within: &[Vec<bool>],
        a: &[usize],
        b: &[usize],
        owner: &mut [usize],
        seen: &mut [bool],
    ) -> bool {
        for j in 0..b.len() {
            if seen[j] || !within[a[i]][b[j]] {
                continue;
            }
            seen[j] = true;
            if owner[j] == usize::MAX || augment(owner[j], within, a, b, owner, seen) {
                owner[j] = i;
                return true;
            }
        }
        false
    }
    let mut owner = vec![usize::MAX; b.len()];
    let mut seen = vec![false; b.len()];
    for i in 0..a.len() {
        seen.fill(false);
        if !augment(i, within, a, b, &mut owner, &mut seen) {
            return false;
        }
    }
    true
}

/// Whether guards at `a` can move to `b` in one round, each travelling at
/// most `k` (staying put is allowed).
pub fn configs_compatible(
    g: &Graph,
    k: usize,
    a: &GuardConfig,
    b: &GuardConfig,
) -> Result<bool, OracleError> {
    if a.len() != b.len() {
        return Err(OracleError::SizeMismatch(a.len(), b.len()));
    }
    for &v in a.guards().iter().chain(b.guards()) {
        if v >= g.n() {
            return Err(OracleError::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    Ok(slots_match(&reach_table(g, k), a.guards(), b.guards()))
}

/// All size-`m` multisets over `0..n` in lexicographic order.
fn all_multisets(n: usize, m: usize) -> Vec<GuardConfig> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut cur = vec![0usize; m];
    loop {
        out.push(GuardConfig(cur.clone()));
        let Some(i) = (0..m).rev().find(|&i| cur[i] + 1 < n) else {
            return out;
        };
        let next = cur[i] + 1;
        cur[i..].fill(next);
    }
}

/// One game instance `(G, k, m)` with every position and move precomputed.
pub struct GuardGame {
    n: usize,
    k: usize,
    m: usize,
    configs: Vec<GuardConfig>,
    /// `moves[i]`: positions reachable from position `i` in one round.
    moves: Vec<FixedBitSet>,
    /// `holding[r]`: positions with a guard on `r`.
    holding: Vec<FixedBitSet>,
}

/// The winning positions of a solved instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedPoint {
    pub winning: Vec<GuardConfig>,
    /// Number of deletion sweeps, the final (stable) sweep included.
    pub sweeps: usize,
}

impl GuardGame {
    pub fn new(g: &Graph, k: usize, m: usize, limits: OracleLimits) -> Result<Self, OracleError> {
        assert!(k >= 1 && m >= 1, "k and m must be positive");
        limits.check(g.n(), m)?;
        if !g.is_connected() {
            return Err(OracleError::Disconnected);
        }
        let n = g.n();
        let within = reach_table(g, k);
        let configs = all_multisets(n, m);
        let count = configs.len();
        let moves: Vec<FixedBitSet> = (0..count)
            .into_par_iter()
            .map(|i| {
                let mut row = FixedBitSet::with_capacity(count);
                for (j, other) in configs.iter().enumerate() {
                    if slots_match(&within, configs[i].guards(), other.guards()) {
                        row.insert(j);
                    }
                }
                row
            })
            .collect();
        let mut holding = vec![FixedBitSet::with_capacity(count); n];
        for (i, c) in configs.iter().enumerate() {
            for &v in c.guards() {
                holding[v].insert(i);
            }
        }
        Ok(GuardGame {
            n,
            k,
            m,
            configs,
            moves,
            holding,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn positions(&self) -> &[GuardConfig] {
        &self.configs
    }

    fn index_of(&self, c: &GuardConfig) -> Option<usize> {
        self.configs.binary_search(c).ok()
    }

    fn answers(&self, from: usize, attack: usize, alive: &FixedBitSet) -> bool {
        self.moves[from]
            .as_slice()
            .iter()
            .zip(alive.as_slice())
            .zip(self.holding[attack].as_slice())
            .any(|((a, b), c)| a & b & c != 0)
    }

    fn fixed_point_mask(&self) -> (FixedBitSet, usize) {
        let count = self.configs.len();
        let mut alive = FixedBitSet::with_capacity(count);
        alive.insert_range(..);
        let mut sweeps = 0;
        loop {
            sweeps += 1;
            let violators: Vec<usize> = alive
                .ones()
                .filter(|&i| (0..self.n).any(|r| !self.answers(i, r, &alive)))
                .collect();
            if violators.is_empty() {
                return (alive, sweeps);
            }
            for i in violators {
                alive.set(i, false);
            }
        }
    }

    /// Greatest fixed point of the "can answer every attack" operator.
    pub fn solve(&self) -> FixedPoint {
        let (alive, sweeps) = self.fixed_point_mask();
        FixedPoint {
            winning: alive.ones().map(|i| self.configs[i].clone()).collect(),
            sweeps,
        }
    }

    /// Replays `attacks` from `start`, always answering with the
    /// lexicographically smallest winning position that holds the attacked
    /// vertex and is reachable in one round.
    pub fn defend(
        &self,
        start: &GuardConfig,
        attacks: &[usize],
    ) -> Result<Vec<GuardConfig>, OracleError> {
        if start.len() != self.m {
            return Err(OracleError::SizeMismatch(start.len(), self.m));
        }
        for &v in start.guards().iter().chain(attacks) {
            if v >= self.n {
                return Err(OracleError::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        let (alive, _) = self.fixed_point_mask();
        let start_idx = self.index_of(start).expect("every sized multiset is a position");
        let mut current = start_idx;
        let mut transcript = vec![start.clone()];
        for (step, &r) in attacks.iter().enumerate() {
            let mut options = self.moves[current].clone();
            options.intersect_with(&alive);
            options.intersect_with(&self.holding[r]);
            match options.minimum() {
                Some(next) => {
                    current = next;
                    transcript.push(self.configs[next].clone());
                }
                None => {
                    return Err(OracleError::NotWinning {
                        failed_at: Some(step),
                    })
                }
            }
        }
        if !alive.contains(start_idx) {
            return Err(OracleError::NotWinning { failed_at: None });
        }
        Ok(transcript)
    }
}

pub fn solve_fixed_point(
    g: &Graph,
    k: usize,
    m: usize,
    limits: OracleLimits,
) -> Result<FixedPoint, OracleError> {
    Ok(GuardGame::new(g, k, m, limits)?.solve())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub k: usize,
    pub m_min: usize,
    pub winning_configs: Vec<GuardConfig>,
    /// `(m, sweeps)` for every guard count tried.
    pub iterations: Vec<(usize, usize)>,
}

/// Smallest guard count with a non-empty winning set.  The search starts at
/// `γ_k(G)` and stops at `γ_{⌊k/2⌋}(G)` for `k >= 2` (at `n` for `k = 1`).
pub fn eternal_number_oracle(
    g: &Graph,
    k: usize,
    limits: OracleLimits,
) -> Result<OracleResult, OracleError> {
    assert!(k >= 1, "distance parameter must be positive");
    if g.n() > limits.max_n {
        return Err(OracleError::LimitExceeded {
            what: "n",
            value: g.n(),
            limit: limits.max_n,
        });
    }
    if !g.is_connected() || g.n() == 0 {
        return Err(OracleError::Disconnected);
    }
    let lower = gamma_k_brute(g, k)?.value;
    let upper = if k >= 2 {
        gamma_k_brute(g, k / 2)?.value
    } else {
        g.n()
    };
    let mut iterations = Vec::new();
    for m in lower..=upper {
        let fp = solve_fixed_point(g, k, m, limits)?;
        iterations.push((m, fp.sweeps));
        if !fp.winning.is_empty() {
            return Ok(OracleResult {
                k,
                m_min: m,
                winning_configs: fp.winning,
                iterations,
            });
        }
    }
    Err(OracleError::NoWinningSize(upper))
}

pub fn defend_interactively(
    g: &Graph,
    k: usize,
    start: &GuardConfig,
    attacks: &[usize],
    limits: OracleLimits,
) -> Result<Vec<GuardConfig>, OracleError> {
    GuardGame::new(g, k, start.len(), limits)?.defend(start, attacks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::is_distance_dominating;

    fn cfg(v: &[usize]) -> GuardConfig {
        GuardConfig::new(v.to_vec())
    }

    #[test]
    fn multiset_enumeration() {
        let all = all_multisets(3, 2);
        let raw: Vec<&[usize]> = all.iter().map(GuardConfig::guards).collect();
        assert_eq!(
            raw,
            vec![&[0, 0][..], &[0, 1], &[0, 2], &[1, 1], &[1, 2], &[2, 2]]
        );
        // C(n + m - 1, m)
        assert_eq!(all_multisets(12, 5).len(), 4368);
    }

    #[test]
    fn compatibility() {
        let p5 = Graph::path(5);
        let a = cfg(&[0, 4]);
        assert!(configs_compatible(&p5, 2, &a, &a).unwrap());
        assert!(configs_compatible(&p5, 2, &a, &cfg(&[2, 2])).unwrap());
        assert!(!configs_compatible(&p5, 1, &cfg(&[0, 0]), &cfg(&[4, 4])).unwrap());
        assert!(!configs_compatible(&p5, 3, &cfg(&[0, 0]), &cfg(&[3, 4])).unwrap());
        assert_eq!(
            configs_compatible(&p5, 1, &cfg(&[0]), &cfg(&[0, 1])),
            Err(OracleError::SizeMismatch(1, 2))
        );
    }

    #[test]
    fn fixed_points_on_short_paths() {
        let lim = OracleLimits::default();
        let p3 = solve_fixed_point(&Graph::path(3), 2, 1, lim).unwrap();
        assert_eq!(p3.winning, vec![cfg(&[0]), cfg(&[1]), cfg(&[2])]);
        assert!(solve_fixed_point(&Graph::path(4), 2, 1, lim).unwrap().winning.is_empty());
        assert!(!solve_fixed_point(&Graph::path(4), 2, 2, lim).unwrap().winning.is_empty());
    }

    #[test]
    fn oracle_values() {
        let lim = OracleLimits::default();
        assert_eq!(eternal_number_oracle(&Graph::path(7), 2, lim).unwrap().m_min, 3);
        assert_eq!(eternal_number_oracle(&Graph::path(6), 2, lim).unwrap().m_min, 2);
        // spider with three legs of length 2
        let spider = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        assert_eq!(eternal_number_oracle(&spider, 2, lim).unwrap().m_min, 2);
        assert_eq!(eternal_number_oracle(&Graph::path(4), 1, lim).unwrap().m_min, 2);
    }

    #[test]
    fn winning_configs_dominate() {
        let g = Graph::path(8);
        let res = eternal_number_oracle(&g, 2, OracleLimits::default()).unwrap();
        for c in &res.winning_configs {
            assert!(is_distance_dominating(&g, 2, c.guards()));
        }
    }

    #[test]
    fn guard_rails() {
        let big = Graph::path(13);
        assert!(matches!(
            solve_fixed_point(&big, 2, 1, OracleLimits::default()),
            Err(OracleError::LimitExceeded { what: "n", .. })
        ));
        assert!(matches!(
            solve_fixed_point(&Graph::path(4), 1, 6, OracleLimits::default()),
            Err(OracleError::LimitExceeded { what: "m", .. })
        ));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            solve_fixed_point(&two, 1, 2, OracleLimits::default()),
            Err(OracleError::Disconnected)
        );
    }

    #[test]
    fn transcripts() {
        let lim = OracleLimits::default();
        let p4 = Graph::path(4);
        let start = cfg(&[1, 2]);
        assert_eq!(defend_interactively(&p4, 2, &start, &[], lim).unwrap(), vec![start.clone()]);
        let t = defend_interactively(&p4, 2, &start, &[0], lim).unwrap();
        assert!(t[1].contains(0));
        let bad = defend_interactively(&Graph::path(7), 2, &cfg(&[0, 1]), &[6], lim);
        assert!(matches!(bad, Err(OracleError::NotWinning { failed_at: Some(0) })));
        // a losing start that happens to survive the given attacks
        let quiet = defend_interactively(&Graph::path(7), 2, &cfg(&[0, 1]), &[], lim);
        assert_eq!(quiet, Err(OracleError::NotWinning { failed_at: None }));
    }
}
