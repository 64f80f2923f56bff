use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{CacheKey, HarnessError, ResultsCache, SCHEMA_VERSION};
use crate::domination::{gamma_k_brute, gamma_k_tree};
use crate::eternal::{eternal2_algorithm1, eternal2_by_reduction};
use crate::families::canonical_form;
use crate::graph::{io, Graph, Tree};
use crate::oracle::{eternal_number_oracle, OracleLimits};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    /// Algorithm 1 for trees at `k = 2`, the game solver otherwise.
    Auto,
    Algorithm1,
    Reduction,
    Oracle,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Algorithm1 => "algorithm1",
            Method::Reduction => "reduction",
            Method::Oracle => "oracle",
        }
    }
}

impl FromStr for Method {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [Method::Auto, Method::Algorithm1, Method::Reduction, Method::Oracle]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| HarnessError::Input(format!("unknown method {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComputeReport {
    pub schema_version: u32,
    pub n: usize,
    pub m: usize,
    pub is_tree: bool,
    pub k: usize,
    /// The method actually used (`auto` resolved).
    pub method: Method,
    /// `γ∞_{all,k}`.
    pub eternal: usize,
    pub gamma: usize,
    pub gamma_2: usize,
    pub gamma_k: usize,
    pub canonical_form: Option<String>,
}

fn gamma_k_of(g: &Graph, tree: Option<&Tree>, k: usize) -> Result<usize, HarnessError> {
    Ok(match tree {
        Some(t) => gamma_k_tree(t, k).value,
        None => gamma_k_brute(g, k)?.value,
    })
}

/// Eternal distance-`k` domination number of `g` plus the classic
/// parameters.
pub fn cmd_compute(
    g: &Graph,
    k: usize,
    method: Method,
    cache: Option<&ResultsCache>,
) -> Result<ComputeReport, HarnessError> {
    if k == 0 {
        return Err(HarnessError::Input("k must be positive".into()));
    }
    if g.n() == 0 || !g.is_connected() {
        return Err(HarnessError::Input("the input graph must be connected and non-empty".into()));
    }
    let tree = Tree::new(g.clone()).ok();
    let method = match method {
        Method::Auto if tree.is_some() && k == 2 => Method::Algorithm1,
        Method::Auto => Method::Oracle,
        m => m,
    };
    if matches!(method, Method::Algorithm1 | Method::Reduction) && (tree.is_none() || k != 2) {
        return Err(HarnessError::Input(format!(
            "method {} needs a tree and k = 2",
            method.name()
        )));
    }
    let form = match &tree {
        Some(t) => canonical_form(t),
        None => io::emit_graph6(g),
    };
    let solve = || -> Result<usize, HarnessError> {
        let t = tree.as_ref();
        Ok(match method {
            Method::Algorithm1 => eternal2_algorithm1(t.expect("checked"), 0)?.value,
            Method::Reduction => eternal2_by_reduction(t.expect("checked")).total,
            _ => eternal_number_oracle(g, k, OracleLimits::default())?.m_min,
        })
    };
    let eternal = match cache {
        Some(c) => c.get_or_compute(
            CacheKey {
                form: form.clone(),
                parameter: format!("gamma_inf_{k}"),
                method: method.name().into(),
            },
            solve,
        )?,
        None => solve()?,
    };
    Ok(ComputeReport {
        schema_version: SCHEMA_VERSION,
        n: g.n(),
        m: g.m(),
        is_tree: tree.is_some(),
        k,
        method,
        eternal,
        gamma: gamma_k_of(g, tree.as_ref(), 1)?,
        gamma_2: gamma_k_of(g, tree.as_ref(), 2)?,
        gamma_k: gamma_k_of(g, tree.as_ref(), k)?,
        canonical_form: tree.map(|_| form),
    })
}
