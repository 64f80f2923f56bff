use super::{FamilyStep, FamilyTag, FamilyTrace, Residual};
use crate::domination::{in_some_min_dominating_set, leaf_drop_decrement};
use crate::graph::{classify_t_leaves, diameter, Tree};

/// Structural membership in `𝒯`, decided by undoing the construction rules
/// without computing any eternal domination number.
///
/// 2-leaves whose closed closure is a star are peeled first (lowest index
/// wins); otherwise the lowest 2-leaf `v` is peeled down to `v` and the
/// side condition of the matching rule is checked on what remains.
/// Returns the construction trace on acceptance.
pub fn recognize_script_t(t: &Tree) -> (bool, Option<FamilyTrace>) {
    let mut res = Residual::new(t);
    let mut peeled = Vec::new();
    loop {
        let cur = &res.tree;
        if cur.diameter() <= 3 {
            return (true, Some(res.base_trace(FamilyTag::ScriptT, peeled)));
        }
        let ranks = classify_t_leaves(cur);
        let closures: Vec<_> = ranks
            .with_rank(2)
            .map(|v| ranks.closure(cur, v).expect("2-leaves are ranked"))
            .collect();
        let closed_diam = |set: &[usize]| diameter(&cur.graph().induced(set).0);

        if let Some(c) = closures.iter().find(|c| closed_diam(&c.closed_set) == 2usize) {
            let v = c.center;
            let centre = cur
                .neighbors(v)
                .iter()
                .copied()
                .find(|&u| ranks.rank(u) == Some(1))
                .expect("a star closure has its centre next to v");
            let attach = cur
                .neighbors(v)
                .iter()
                .copied()
                .find(|u| c.closed_set.binary_search(u).is_err())
                .expect("diameter at least 4 leaves v a neighbour outside L[v]");
            let mut star = vec![res.label(v), res.label(centre)];
            star.extend(
                cur.neighbors(centre)
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| res.label(u)),
            );
            peeled.push(FamilyStep::StarByLeaf {
                attach: res.label(attach),
                star,
            });
            let removed = c.closed_set.clone();
            res.remove(&removed);
            continue;
        }

        let c = &closures[0];
        let v = c.center;
        let lower: Vec<usize> = cur
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&u| c.open_set.binary_search(&u).is_ok())
            .collect();
        let (stems, leaves): (Vec<usize>, Vec<usize>) =
            lower.iter().partition(|&&u| ranks.rank(u) == Some(1));
        let star_of = |centre: usize| {
            let mut s = vec![res.label(centre)];
            s.extend(
                cur.neighbors(centre)
                    .iter()
                    .filter(|&&u| u != v)
                    .map(|&u| res.label(u)),
            );
            s
        };
        let step = match closed_diam(&c.closed_set).finite() {
            Some(3) if stems.len() == 1 && !leaves.is_empty() => FamilyStep::StarAndLeaves {
                attach: res.label(v),
                star: star_of(stems[0]),
                extra: leaves.iter().map(|&u| res.label(u)).collect(),
            },
            Some(4) if stems.len() == 2 && leaves.is_empty() => FamilyStep::TwoStars {
                attach: res.label(v),
                first: star_of(stems[0]),
                second: star_of(stems[1]),
            },
            _ => return (false, None),
        };
        let open = c.open_set.clone();
        let v_label = res.label(v);
        res.remove(&open);
        let v_local = res
            .labels
            .binary_search(&v_label)
            .expect("v survives the open peel");
        let side = match step {
            FamilyStep::StarAndLeaves { .. } => in_some_min_dominating_set(&res.tree, v_local),
            _ => leaf_drop_decrement(&res.tree, v_local).expect("v is a leaf of the residual"),
        };
        if !side {
            return (false, None);
        }
        peeled.push(step);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{canonical_form, gen_spider_tn};

    #[test]
    fn small_diameter_accepted() {
        for t in [Tree::single(), Tree::path(2), Tree::path(4), Tree::star(5)] {
            assert!(recognize_script_t(&t).0);
        }
        let double_star = Tree::from_edges(6, &[(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        let (ok, trace) = recognize_script_t(&double_star);
        assert!(ok);
        assert!(trace.unwrap().steps.is_empty());
    }

    #[test]
    fn rejections() {
        assert!(!recognize_script_t(&gen_spider_tn(3)).0);
    }

    #[test]
    fn paths_belong() {
        // γ(P_n) = ⌈n/3⌉ = γ∞(P_n)
        for n in 1..=30 {
            assert!(recognize_script_t(&Tree::path(n)).0, "P{n}");
        }
    }

    #[test]
    fn p6_is_a_star_on_p3() {
        // γ(P6) = 2 = γ∞(P6), so P6 belongs to the family
        let (ok, trace) = recognize_script_t(&Tree::path(6));
        assert!(ok);
        assert_eq!(trace.unwrap().steps.len(), 1);
    }

    #[test]
    fn star_by_leaf_on_p7() {
        let (ok, trace) = recognize_script_t(&Tree::path(7));
        let trace = trace.unwrap();
        assert!(ok);
        assert_eq!(
            trace.steps,
            vec![FamilyStep::StarByLeaf {
                attach: 3,
                star: vec![2, 1, 0]
            }]
        );
        assert_eq!(canonical_form(&trace.replay()), canonical_form(&Tree::path(7)));
    }

    #[test]
    fn accepted_traces_replay() {
        for n in 1..=9 {
            for t in crate::families::enumerate_trees(n).unwrap() {
                if let (true, Some(trace)) = recognize_script_t(&t) {
                    assert_eq!(canonical_form(&trace.replay()), canonical_form(&t));
                }
            }
        }
    }
}
