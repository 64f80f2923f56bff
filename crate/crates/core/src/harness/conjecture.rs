use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{HarnessError, EXIT_COUNTEREXAMPLE, EXIT_OK, SCHEMA_VERSION};
use crate::domination::gamma_k_tree;
use crate::families::{canonical_form, enumerate_trees_upto};
use crate::oracle::{eternal_number_oracle, OracleError, OracleLimits};

/// Largest order scanned; the game solver gets slow beyond it.
pub const SCAN_LIMIT: usize = 10;

/// Result of scanning one `k` for trees with `γ_k = γ∞_{all,k}` but
/// `γ∞_{all,k} ≠ γ_{⌊k/2⌋}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureScan {
    pub k: usize,
    pub trees_scanned: usize,
    /// Trees the solver refused (too many guards needed).
    pub trees_skipped: usize,
    /// Trees with `γ_k = γ∞_{all,k}`.
    pub equal_cases: usize,
    pub counterexamples: Vec<String>,
    pub verdict: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub schema_version: u32,
    pub n_max: usize,
    pub scans: Vec<ConjectureScan>,
}

impl ConjectureReport {
    pub fn exit_code(&self) -> i32 {
        if self.scans.iter().all(|s| s.counterexamples.is_empty()) {
            EXIT_OK
        } else {
            EXIT_COUNTEREXAMPLE
        }
    }
}

enum Outcome {
    Skipped,
    Checked { equal: bool, counterexample: Option<String> },
}

/// Scans all trees up to `n_max` for every `k > 2` in `k_set`.
pub fn cmd_scan_conjectures(n_max: usize, k_set: &[usize]) -> Result<ConjectureReport, HarnessError> {
    if k_set.is_empty() {
        return Err(HarnessError::Input("no k given".into()));
    }
    if let Some(k) = k_set.iter().find(|&&k| k <= 2) {
        return Err(HarnessError::Input(format!(
            "the conjecture concerns k > 2, got k = {k}"
        )));
    }
    if n_max == 0 {
        return Err(HarnessError::Input("n_max must be at least 1".into()));
    }
    if n_max > SCAN_LIMIT {
        return Err(HarnessError::Guard(format!(
            "conjecture scans are limited to n <= {SCAN_LIMIT}"
        )));
    }
    let trees = enumerate_trees_upto(n_max)?;
    let mut scans = Vec::new();
    for &k in k_set {
        let outcomes = trees
            .par_iter()
            .map(|t| {
                let value = match eternal_number_oracle(t.graph(), k, OracleLimits::default()) {
                    Ok(r) => r.m_min,
                    Err(OracleError::LimitExceeded { .. }) => return Ok(Outcome::Skipped),
                    Err(e) => return Err(HarnessError::from(e)),
                };
                let equal = gamma_k_tree(t, k).value == value;
                let holds = !equal || value == gamma_k_tree(t, k / 2).value;
                Ok(Outcome::Checked {
                    equal,
                    counterexample: (!holds).then(|| canonical_form(t)),
                })
            })
            .collect::<Result<Vec<_>, HarnessError>>()?;
        let mut scan = ConjectureScan {
            k,
            trees_scanned: 0,
            trees_skipped: 0,
            equal_cases: 0,
            counterexamples: Vec::new(),
            verdict: String::new(),
        };
        for o in outcomes {
            match o {
                Outcome::Skipped => scan.trees_skipped += 1,
                Outcome::Checked {
                    equal,
                    counterexample,
                } => {
                    scan.trees_scanned += 1;
                    scan.equal_cases += usize::from(equal);
                    scan.counterexamples.extend(counterexample);
                }
            }
        }
        scan.counterexamples.sort();
        scan.verdict = if scan.counterexamples.is_empty() {
            format!("no counterexample up to n = {n_max}")
        } else {
            format!("{} counterexamples", scan.counterexamples.len())
        };
        scans.push(scan);
    }
    Ok(ConjectureReport {
        schema_version: SCHEMA_VERSION,
        n_max,
        scans,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preconditions() {
        assert!(matches!(cmd_scan_conjectures(5, &[2]), Err(HarnessError::Input(_))));
        assert!(matches!(
            cmd_scan_conjectures(SCAN_LIMIT + 1, &[3]),
            Err(HarnessError::Guard(_))
        ));
    }

    #[test]
    fn single_vertex_is_vacuous() {
        let r = cmd_scan_conjectures(1, &[3]).unwrap();
        assert_eq!(r.scans[0].trees_scanned, 1);
        assert!(r.scans[0].counterexamples.is_empty());
        assert_eq!(r.exit_code(), EXIT_OK);
    }

    #[test]
    fn small_scan_is_definite() {
        let r = cmd_scan_conjectures(7, &[3, 4]).unwrap();
        for s in &r.scans {
            assert_eq!(s.trees_scanned + s.trees_skipped, 25);
        }
    }
}
