use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::verify::{compute_verdicts, record_for, Theorem, VerifyOptions};
use super::{HarnessError, EXIT_COUNTEREXAMPLE, EXIT_OK, SCHEMA_VERSION};
use crate::families::tree_from_canonical;

/// Everything computed for one tree of the corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeRecord {
    pub canonical: String,
    pub n: usize,
    pub gamma: usize,
    pub gamma_2: usize,
    /// `γ_k` for `k = 1..=max(k_set, 2)`.
    pub gamma_k: BTreeMap<usize, usize>,
    pub eternal2_algorithm1: usize,
    pub eternal2_reduction: usize,
    /// Algorithm 1 returns the same value from every root.
    pub root_independent: bool,
    /// `γ∞_{all,k}` from the game solver, for the `k` within its size limit.
    pub oracle: BTreeMap<usize, usize>,
    /// `γ∞_{all,1}(T^k)` from the game solver.
    pub power_oracle: BTreeMap<usize, usize>,
    pub in_script_t: bool,
    pub in_bbt: bool,
    pub in_c: bool,
    pub critical: bool,
    /// Accepted construction traces rebuild the tree.
    pub traces_replay: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub theorem: Theorem,
    pub statement: String,
    pub holds: bool,
    /// Trees the statement applied to.
    pub checked: usize,
    /// Canonical form of the first failing tree.
    pub counterexample: Option<String>,
    pub counterexample_record: Option<TreeRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Corpus {
    pub n_min: usize,
    pub n_max: usize,
    pub k_set: Vec<usize>,
    pub trees: usize,
}

/// Wall-clock metadata; the only part of a report that varies between runs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Timing {
    pub elapsed_ms: u64,
    pub threads: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub corpus: Corpus,
    pub options: VerifyOptions,
    /// Sorted by canonical form.
    pub records: Vec<TreeRecord>,
    pub verdicts: Vec<TheoremVerdict>,
    pub timing: Timing,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.iter().all(|v| v.holds)
    }

    pub fn exit_code(&self) -> i32 {
        if self.all_hold() {
            EXIT_OK
        } else {
            EXIT_COUNTEREXAMPLE
        }
    }

    pub fn verdict(&self, theorem: Theorem) -> Option<&TheoremVerdict> {
        self.verdicts.iter().find(|v| v.theorem == theorem)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, HarnessError> {
        let report: VerificationReport = serde_json::from_str(text)?;
        if report.schema_version != SCHEMA_VERSION {
            return Err(HarnessError::Input(format!(
                "unsupported schema_version {}",
                report.schema_version
            )));
        }
        Ok(report)
    }

    /// Re-derives every verdict from the stored records.
    pub fn recompute_verdicts(&self) -> Vec<TheoremVerdict> {
        compute_verdicts(&self.records, &self.options.theorems)
    }

    /// Checks that the stored verdicts follow from the stored records and
    /// that every counterexample still fails when recomputed from scratch
    /// out of its canonical form.
    pub fn revalidate(&self) -> Result<(), String> {
        if self.recompute_verdicts() != self.verdicts {
            return Err("verdicts do not follow from the records".into());
        }
        for v in self.verdicts.iter().filter(|v| !v.holds) {
            let form = v
                .counterexample
                .as_ref()
                .ok_or_else(|| format!("{} fails without a counterexample", v.theorem.name()))?;
            let tree = tree_from_canonical(form).map_err(|e| e.to_string())?;
            let fresh = record_for(&tree, &self.options, None).map_err(|e| e.to_string())?;
            if v.theorem.holds(&fresh) != Some(false) {
                return Err(format!(
                    "counterexample {form} to {} does not reproduce",
                    v.theorem.name()
                ));
            }
        }
        Ok(())
    }

    /// One row per theorem.
    pub fn summary_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["theorem", "holds", "checked", "counterexample"])
            .expect("in-memory write");
        for v in &self.verdicts {
            w.write_record([
                v.theorem.name().to_string(),
                v.holds.to_string(),
                v.checked.to_string(),
                v.counterexample.clone().unwrap_or_default(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    /// One row per tree; map-valued columns are written as `k=value` lists.
    pub fn records_csv(&self) -> String {
        let joined = |m: &BTreeMap<usize, usize>| {
            m.iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(";")
        };
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "canonical",
            "n",
            "gamma",
            "gamma_2",
            "gamma_k",
            "eternal2_algorithm1",
            "eternal2_reduction",
            "oracle",
            "power_oracle",
            "in_script_t",
            "in_bbt",
            "in_c",
            "critical",
        ])
        .expect("in-memory write");
        for r in &self.records {
            w.write_record([
                r.canonical.clone(),
                r.n.to_string(),
                r.gamma.to_string(),
                r.gamma_2.to_string(),
                joined(&r.gamma_k),
                r.eternal2_algorithm1.to_string(),
                r.eternal2_reduction.to_string(),
                joined(&r.oracle),
                joined(&r.power_oracle),
                r.in_script_t.to_string(),
                r.in_bbt.to_string(),
                r.in_c.to_string(),
                r.critical.to_string(),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }
}
