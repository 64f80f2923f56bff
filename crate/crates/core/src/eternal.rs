//! Eternal distance-2 domination number of trees in linear time.
//!
//! Two independent routes are provided: the rooted stack procedure
//! ([`eternal2_algorithm1`]) and an explicit peeling of 2-leaves
//! ([`eternal2_by_reduction`]).  Both bottom out in the closed form for
//! trees of small diameter.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{classify_t_leaves, diameter, Tree};

/// Eternal distance-`k` domination number of a tree of diameter `d` when
/// `d < 2k`: one guard if `d <= k`, two if `k < d < 2k`, `None` otherwise.
pub fn small_diameter_value(d: usize, k: usize) -> Option<usize> {
    assert!(k >= 1, "distance parameter must be positive");
    if d <= k {
        Some(1)
    } else if d < 2 * k {
        Some(2)
    } else {
        None
    }
}

/// Value for `k = 2` and diameter at most 4.  Diameter 4 is outside the
/// range of [`small_diameter_value`] but still needs two guards: the centre
/// is universal in the square of the tree, which is not complete.
fn base_value_k2(d: usize) -> usize {
    debug_assert!(d <= 4);
    small_diameter_value(d, 2).unwrap_or(2)
}

/// One removal made by the stack procedure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Removal {
    /// The vertex whose subtree had depth 2.
    pub center: usize,
    /// Removed vertices, sorted; includes `center` iff it had one child.
    pub removed: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Algorithm1Outcome {
    pub value: usize,
    pub removals: Vec<Removal>,
    /// Whether vertices survived all removals (worth the final guard).
    pub residual_nonempty: bool,
}

/// Runs the stack procedure on `t` rooted at `root`.
///
/// Subtree depth counts edges, so a lone vertex has depth 0.  Heights are
/// refreshed from the surviving children whenever a vertex reaches the top
/// of the stack; a vertex is on top at most twice, so the whole run is
/// linear.
pub fn eternal2_algorithm1(t: &Tree, root: usize) -> Result<Algorithm1Outcome, GraphError> {
    run_algorithm1(t, root, true)
}

/// Value only, skipping the removal log.
pub fn eternal2_value(t: &Tree) -> usize {
    run_algorithm1(t, 0, false)
        .expect("vertex 0 exists in every tree")
        .value
}

fn run_algorithm1(t: &Tree, root: usize, log: bool) -> Result<Algorithm1Outcome, GraphError> {
    let n = t.n();
    if root >= n {
        return Err(GraphError::VertexOutOfRange { vertex: root, n });
    }
    let rooting = t.rooted(root);
    let children = &rooting.children;
    let mut height = vec![0usize; n];
    for &v in rooting.order.iter().rev() {
        height[v] = children[v]
            .iter()
            .map(|&c| height[c] + 1)
            .max()
            .unwrap_or(0);
    }

    let mut removed = vec![false; n];
    let mut removals = Vec::new();
    let mut gamma = 0;
    let mut stack = vec![root];
    while let Some(&x) = stack.last() {
        let h = children[x]
            .iter()
            .filter(|&&c| !removed[c])
            .map(|&c| height[c] + 1)
            .max()
            .unwrap_or(0);
        height[x] = h;
        if h >= 3 {
            stack.extend(
                children[x]
                    .iter()
                    .filter(|&&c| !removed[c] && height[c] >= 2),
            );
        } else if h == 2 {
            stack.pop();
            gamma += 1;
            let alive: Vec<usize> = children[x].iter().copied().filter(|&c| !removed[c]).collect();
            let mut gone = Vec::new();
            if alive.len() == 1 {
                removed[x] = true;
                gone.push(x);
            }
            for c in alive {
                removed[c] = true;
                gone.push(c);
                for &g in &children[c] {
                    if !removed[g] {
                        removed[g] = true;
                        gone.push(g);
                    }
                }
            }
            height[x] = 0;
            if log {
                gone.sort_unstable();
                removals.push(Removal {
                    center: x,
                    removed: gone,
                });
            }
        } else {
            stack.pop();
        }
    }
    let residual_nonempty = !removed[root];
    if residual_nonempty {
        gamma += 1;
    }
    Ok(Algorithm1Outcome {
        value: gamma,
        removals,
        residual_nonempty,
    })
}

/// Which part of a 2-leaf's closure a reduction step deleted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RemovedPart {
    /// `L[v]`, when the closed closure induces a diameter-2 subtree.
    Closed,
    /// `L(v)` otherwise; `v` survives as a leaf.
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    /// The 2-leaf peeled, as a vertex of the input tree.
    pub center: usize,
    pub part: RemovedPart,
    /// Sorted input-tree vertices deleted by this step.
    pub removed: Vec<usize>,
    pub increment: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    /// Input-tree vertices left once the diameter dropped to 4 or less.
    pub residual: Vec<usize>,
    pub residual_diameter: usize,
    pub base_value: usize,
    pub total: usize,
}

/// Peels 2-leaves until the diameter is at most 4, then applies the
/// small-diameter value.  Each peel removes `L[v]` when `T[L[v]]` has
/// diameter 2 and `L(v)` otherwise, and accounts for exactly one guard.
/// The lowest-indexed 2-leaf is peeled first.
pub fn eternal2_by_reduction(t: &Tree) -> ReductionTrace {
    let mut current = t.clone();
    let mut labels: Vec<usize> = (0..t.n()).collect();
    let mut steps = Vec::new();
    loop {
        let d = current.diameter();
        if d <= 4 {
            let base_value = base_value_k2(d);
            let total = steps.len() + base_value;
            return ReductionTrace {
                steps,
                residual: labels,
                residual_diameter: d,
                base_value,
                total,
            };
        }
        let ranks = classify_t_leaves(&current);
        let v = ranks
            .with_rank(2)
            .next()
            .expect("trees of diameter at least 4 have a 2-leaf");
        let closure = ranks.closure(&current, v).expect("2-leaves are ranked");
        let closed_diameter = diameter(&current.graph().induced(&closure.closed_set).0);
        let (part, local) = if closed_diameter == 2usize {
            (RemovedPart::Closed, closure.closed_set)
        } else {
            (RemovedPart::Open, closure.open_set)
        };
        let (next, mapping) = current
            .remove_vertices(&local)
            .expect("peeling a 2-leaf leaves a tree");
        steps.push(ReductionStep {
            center: labels[v],
            part,
            removed: local.iter().map(|&u| labels[u]).collect(),
            increment: 1,
        });
        labels = mapping.iter().map(|&u| labels[u]).collect();
        current = next;
    }
}

/// Outcome of the leaf-deletion test.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Criticality {
    pub critical: bool,
    /// A leaf whose deletion does not lower the value, when not critical.
    pub witness: Option<usize>,
}

/// Whether deleting any leaf strictly lowers the eternal distance-2
/// domination number.  `K_1` has no deletable leaf and counts as critical.
pub fn is_critical(t: &Tree) -> Criticality {
    if t.n() == 1 {
        return Criticality {
            critical: true,
            witness: None,
        };
    }
    let value = eternal2_value(t);
    let witness = t.leaves().into_iter().find(|&leaf| {
        let (smaller, _) = t.remove_vertices(&[leaf]).expect("deleting a leaf keeps a tree");
        eternal2_value(&smaller) >= value
    });
    Criticality {
        critical: witness.is_none(),
        witness,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_spider_tn;

    #[test]
    fn small_diameter_rule() {
        assert_eq!(small_diameter_value(4, 2), None);
        assert_eq!(small_diameter_value(2, 2), Some(1));
        assert_eq!(small_diameter_value(3, 2), Some(2));
        assert_eq!(small_diameter_value(0, 1), Some(1));
        assert_eq!(small_diameter_value(5, 3), Some(2));
        assert_eq!(small_diameter_value(6, 3), None);
    }

    #[test]
    fn algorithm1_examples() {
        assert_eq!(eternal2_algorithm1(&Tree::path(7), 0).unwrap().value, 3);
        assert_eq!(eternal2_algorithm1(&Tree::single(), 0).unwrap().value, 1);
        assert_eq!(eternal2_algorithm1(&gen_spider_tn(3), 0).unwrap().value, 2);
        assert!(eternal2_algorithm1(&Tree::path(3), 3).is_err());
    }

    #[test]
    fn algorithm1_base_cases() {
        // universal root: depth 1, one guard, no removals
        let star = eternal2_algorithm1(&Tree::star(4), 0).unwrap();
        assert_eq!(star.value, 1);
        assert!(star.removals.is_empty());
        // leaf root of a star: depth 2 with one child, everything removed
        let leaf_root = eternal2_algorithm1(&Tree::star(4), 1).unwrap();
        assert_eq!(leaf_root.value, 1);
        assert!(!leaf_root.residual_nonempty);
        assert_eq!(leaf_root.removals[0].removed, vec![0, 1, 2, 3, 4]);
        // diameter 4 rooted at the centre: D(r) removed, r remains
        let p5 = eternal2_algorithm1(&Tree::path(5), 2).unwrap();
        assert_eq!(p5.value, 2);
        assert_eq!(p5.removals[0].removed, vec![0, 1, 3, 4]);
        assert!(p5.residual_nonempty);
    }

    #[test]
    fn reduction_examples() {
        let p7 = eternal2_by_reduction(&Tree::path(7));
        assert_eq!(p7.total, 3);
        assert_eq!(p7.steps.len(), 1);
        assert_eq!(p7.steps[0].center, 2);
        assert_eq!(p7.steps[0].part, RemovedPart::Closed);
        assert_eq!(p7.steps[0].removed, vec![0, 1, 2]);
        assert_eq!(p7.residual, vec![3, 4, 5, 6]);
        assert_eq!(p7.base_value, 2);

        let p5 = eternal2_by_reduction(&Tree::path(5));
        assert!(p5.steps.is_empty());
        assert_eq!(p5.total, 2);
        let star = eternal2_by_reduction(&Tree::star(4));
        assert!(star.steps.is_empty());
        assert_eq!(star.total, 1);

        // P6 would come out as 3 if L(v) were removed for the pendant P3
        assert_eq!(eternal2_by_reduction(&Tree::path(6)).total, 2);
    }

    #[test]
    fn reduction_open_branch() {
        // 2-leaf 2 carries a leaf (7) and a pendant 1-2 edge chain 1-0:
        // T[L[2]] = {0,1,2,7} has diameter 3, so only L(2) goes
        let t = Tree::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (2, 7)],
        )
        .unwrap();
        let trace = eternal2_by_reduction(&t);
        assert_eq!(trace.steps[0].center, 2);
        assert_eq!(trace.steps[0].part, RemovedPart::Open);
        assert_eq!(trace.steps[0].removed, vec![0, 1, 7]);
        assert_eq!(trace.total, eternal2_value(&t));
    }

    #[test]
    fn criticality_examples() {
        assert!(is_critical(&Tree::path(4)).critical);
        let p3 = is_critical(&Tree::path(3));
        assert!(!p3.critical);
        assert_eq!(p3.witness, Some(0));
        assert!(is_critical(&Tree::path(7)).critical);
        assert!(is_critical(&Tree::single()).critical);
    }

    #[test]
    fn deep_paths_do_not_recurse() {
        let n = 200_000;
        assert_eq!(eternal2_value(&Tree::path(n)), n.div_ceil(3));
    }
}
