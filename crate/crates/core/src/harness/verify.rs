use std::collections::BTreeMap;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::report::{Corpus, TheoremVerdict, Timing, TreeRecord, VerificationReport};
use super::{CacheKey, HarnessError, ResultsCache, SCHEMA_VERSION};
use crate::domination::gamma_k_tree;
use crate::eternal::{eternal2_algorithm1, eternal2_by_reduction, is_critical};
use crate::families::{
    canonical_form, enumerate_trees_upto, recognize_bbt, recognize_c, recognize_script_t,
    FamilyTrace, ENUMERATION_LIMIT,
};
use crate::graph::{power_graph, Graph, Tree};
use crate::oracle::{eternal_number_oracle, OracleLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    TripleAgreement,
    ScriptT,
    GammaTwo,
    Critical,
    Sandwich,
    PowerGraph,
    TraceReplay,
}

impl Theorem {
    pub const ALL: [Theorem; 7] = [
        Theorem::TripleAgreement,
        Theorem::ScriptT,
        Theorem::GammaTwo,
        Theorem::Critical,
        Theorem::Sandwich,
        Theorem::PowerGraph,
        Theorem::TraceReplay,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Theorem::TripleAgreement => "triple-agreement",
            Theorem::ScriptT => "script-t",
            Theorem::GammaTwo => "gamma-two",
            Theorem::Critical => "critical",
            Theorem::Sandwich => "sandwich",
            Theorem::PowerGraph => "power-graph",
            Theorem::TraceReplay => "trace-replay",
        }
    }

    pub fn statement(&self) -> &'static str {
        match self {
            Theorem::TripleAgreement => {
                "Algorithm 1 (every root) = 2-leaf reduction = game solver at k = 2"
            }
            Theorem::ScriptT => "T is in the family 𝒯 iff γ∞_{all,2}(T) = γ(T)",
            Theorem::GammaTwo => "γ∞_{all,2}(T) = γ₂(T) iff γ(T) = γ₂(T)",
            Theorem::Critical => "T is in 𝒞 iff deleting any leaf lowers γ∞_{all,2}",
            Theorem::Sandwich => {
                "γ₂ ≤ γ∞_{all,2} ≤ γ ≤ n, γ∞_{all,2} ≤ ⌈n/3⌉ and γ_k ≤ γ∞_{all,k} ≤ γ_{⌊k/2⌋}"
            }
            Theorem::PowerGraph => "γ∞_{all,k}(T) = γ∞_{all,1}(T^k)",
            Theorem::TraceReplay => "accepted family traces rebuild the tree",
        }
    }

    /// `None` when the record lacks the values the statement needs.
    pub fn holds(&self, r: &TreeRecord) -> Option<bool> {
        let e = r.eternal2_algorithm1;
        match self {
            Theorem::TripleAgreement => Some(
                e == r.eternal2_reduction
                    && r.root_independent
                    && r.oracle.get(&2).is_none_or(|&o| o == e),
            ),
            Theorem::ScriptT => Some(r.in_script_t == (e == r.gamma)),
            Theorem::GammaTwo => Some((e == r.gamma_2) == (r.gamma == r.gamma_2)),
            Theorem::Critical => Some(r.in_c == r.critical),
            Theorem::Sandwich => {
                let chain = r.gamma_2 <= e && e <= r.gamma && r.gamma <= r.n;
                let path_bound = e <= r.n.div_ceil(3);
                let oracle_bounds = r.oracle.iter().all(|(&k, &o)| {
                    let lower = r.gamma_k.get(&k).is_none_or(|&g| g <= o);
                    let upper = k < 2 || r.gamma_k.get(&(k / 2)).is_none_or(|&g| o <= g);
                    lower && upper
                });
                Some(chain && path_bound && oracle_bounds)
            }
            Theorem::PowerGraph => {
                if r.power_oracle.is_empty() {
                    return None;
                }
                Some(
                    r.power_oracle
                        .iter()
                        .all(|(k, p)| r.oracle.get(k).is_none_or(|o| o == p)),
                )
            }
            Theorem::TraceReplay => Some(r.traces_replay),
        }
    }
}

impl FromStr for Theorem {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| HarnessError::Input(format!("unknown theorem {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyOptions {
    pub n_max: usize,
    pub k_set: Vec<usize>,
    pub theorems: Vec<Theorem>,
    /// The game solver runs for `k = 2` up to this order.
    pub oracle_n_max_k2: usize,
    /// The game solver runs for other `k` up to this order.
    pub oracle_n_max: usize,
    /// Order limit for the power-graph comparison.
    pub power_n_max: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            n_max: 10,
            k_set: vec![2],
            theorems: Theorem::ALL.to_vec(),
            oracle_n_max_k2: 10,
            oracle_n_max: 9,
            power_n_max: 8,
        }
    }
}

impl VerifyOptions {
    fn oracle_applies(&self, n: usize, k: usize) -> bool {
        n <= if k == 2 {
            self.oracle_n_max_k2
        } else {
            self.oracle_n_max
        }
    }
}

fn oracle_value(
    g: &Graph,
    form: &str,
    parameter: String,
    k: usize,
    cache: Option<&ResultsCache>,
) -> Result<usize, HarnessError> {
    let solve = || -> Result<usize, HarnessError> {
        Ok(eternal_number_oracle(g, k, OracleLimits::default())?.m_min)
    };
    match cache {
        Some(c) => c.get_or_compute(
            CacheKey {
                form: form.to_string(),
                parameter,
                method: "oracle".into(),
            },
            solve,
        ),
        None => solve(),
    }
}

fn replays(trace: Option<FamilyTrace>, form: &str) -> bool {
    trace.is_none_or(|t| canonical_form(&t.replay()) == form)
}

/// Computes the full record of one tree.
pub fn record_for(
    t: &Tree,
    opts: &VerifyOptions,
    cache: Option<&ResultsCache>,
) -> Result<TreeRecord, HarnessError> {
    let n = t.n();
    let canonical = canonical_form(t);
    let k_max = opts.k_set.iter().copied().max().unwrap_or(2).max(2);
    let gamma_k: BTreeMap<usize, usize> =
        (1..=k_max).map(|k| (k, gamma_k_tree(t, k).value)).collect();
    let e = eternal2_algorithm1(t, 0)?.value;
    let mut root_independent = true;
    for r in 1..n {
        root_independent &= eternal2_algorithm1(t, r)?.value == e;
    }

    let mut oracle = BTreeMap::new();
    for &k in &opts.k_set {
        if opts.oracle_applies(n, k) {
            let v = oracle_value(t.graph(), &canonical, format!("gamma_inf_{k}"), k, cache)?;
            oracle.insert(k, v);
        }
    }
    let mut power_oracle = BTreeMap::new();
    if opts.theorems.contains(&Theorem::PowerGraph) && n <= opts.power_n_max {
        for &k in opts.k_set.iter().filter(|&&k| k >= 2) {
            let p = power_graph(t.graph(), k);
            let v = oracle_value(&p, &canonical, format!("gamma_inf_1_power_{k}"), 1, cache)?;
            power_oracle.insert(k, v);
        }
    }

    let (in_script_t, script_trace) = recognize_script_t(t);
    let (in_c, c_trace) = recognize_c(t);
    Ok(TreeRecord {
        n,
        gamma: gamma_k[&1],
        gamma_2: gamma_k[&2],
        gamma_k,
        eternal2_algorithm1: e,
        eternal2_reduction: eternal2_by_reduction(t).total,
        root_independent,
        oracle,
        power_oracle,
        in_script_t,
        in_bbt: recognize_bbt(t),
        in_c,
        critical: is_critical(t).critical,
        traces_replay: replays(script_trace, &canonical) && replays(c_trace, &canonical),
        canonical,
    })
}

pub(crate) fn compute_verdicts(records: &[TreeRecord], theorems: &[Theorem]) -> Vec<TheoremVerdict> {
    theorems
        .iter()
        .map(|&theorem| {
            let mut checked = 0;
            let mut failing = None;
            for r in records {
                match theorem.holds(r) {
                    Some(true) => checked += 1,
                    Some(false) => {
                        checked += 1;
                        failing.get_or_insert(r);
                    }
                    None => {}
                }
            }
            TheoremVerdict {
                theorem,
                statement: theorem.statement().to_string(),
                holds: failing.is_none(),
                checked,
                counterexample: failing.map(|r| r.canonical.clone()),
                counterexample_record: failing.cloned(),
            }
        })
        .collect()
}

const UNIT_FORMULA_NOTE: &str = "T_{m,k,Δ} trees are checked against value = number of units. \
The closed form n / (1 + Σ_{i=1}^{k} Δ(Δ-1)^{i-1}) does not match the unit order \
1 + Σ_{i=1}^{⌊k/2⌋} Δ(Δ-1)^{i-1} and is not asserted.";

/// Runs the selected statements over every tree with `1 <= n <= n_max`.
pub fn cmd_verify(
    opts: &VerifyOptions,
    cache: Option<&ResultsCache>,
) -> Result<VerificationReport, HarnessError> {
    if opts.n_max == 0 {
        return Err(HarnessError::Input("n_max must be at least 1".into()));
    }
    if opts.n_max > ENUMERATION_LIMIT {
        return Err(HarnessError::Guard(format!(
            "verification enumerates trees only up to n = {ENUMERATION_LIMIT}"
        )));
    }
    if opts.k_set.is_empty() || opts.k_set.contains(&0) {
        return Err(HarnessError::Input("k values must be positive".into()));
    }
    let started = Instant::now();
    let trees = enumerate_trees_upto(opts.n_max)?;
    let mut records = trees
        .par_iter()
        .map(|t| record_for(t, opts, cache))
        .collect::<Result<Vec<_>, _>>()?;
    records.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    let verdicts = compute_verdicts(&records, &opts.theorems);
    Ok(VerificationReport {
        schema_version: SCHEMA_VERSION,
        corpus: Corpus {
            n_min: 1,
            n_max: opts.n_max,
            k_set: opts.k_set.clone(),
            trees: records.len(),
        },
        options: opts.clone(),
        records,
        verdicts,
        timing: Timing {
            elapsed_ms: started.elapsed().as_millis() as u64,
            threads: rayon::current_num_threads(),
        },
        notes: vec![UNIT_FORMULA_NOTE.to_string()],
    })
}
