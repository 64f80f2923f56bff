use super::HarnessError;
use crate::families::{chain_joins, gen_spider_tn, gen_t_mk, gen_t_mkd, FamilyError};
use crate::graph::{io, Tree};

/// A generator and its parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// Star with two leaves added to each of its `legs` leaves.
    Spider { legs: usize },
    /// A path of `k` vertices hung from every vertex of `base`.
    TMk { base: Tree, k: usize },
    /// `units` copies of the degree-`delta` unit for odd `k`, chained
    /// leaf to leaf.
    TmkD { k: usize, delta: usize, units: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generated {
    pub tree: Tree,
    /// Provenance lines: family and parameters.
    pub header: Vec<String>,
}

pub fn cmd_generate(spec: &FamilySpec) -> Result<Generated, HarnessError> {
    let invalid = |msg: String| HarnessError::Family(FamilyError::InvalidParameter(msg));
    let (tree, params) = match spec {
        FamilySpec::Spider { legs } => {
            if *legs == 0 {
                return Err(invalid("a spider needs at least one leg".into()));
            }
            (gen_spider_tn(*legs), format!("family=spider n={legs}"))
        }
        FamilySpec::TMk { base, k } => {
            if *k == 0 {
                return Err(invalid("pendant paths need k >= 1".into()));
            }
            (
                gen_t_mk(base, *k),
                format!("family=TMk k={k} base={}", io::emit_graph6(base.graph())),
            )
        }
        FamilySpec::TmkD { k, delta, units } => {
            if *k % 2 == 0 || *delta < 2 || *units == 0 {
                return Err(invalid(format!(
                    "need odd k, delta >= 2 and units >= 1 (got k={k}, delta={delta}, units={units})"
                )));
            }
            (
                gen_t_mkd(*k, *delta, *units, &chain_joins(*k, *delta, *units))?,
                format!("family=TmkD k={k} delta={delta} units={units} joins=chain"),
            )
        }
    };
    let header = vec![params, format!("vertices={}", tree.n())];
    Ok(Generated { tree, header })
}
