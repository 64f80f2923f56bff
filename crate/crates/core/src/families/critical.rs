use super::{FamilyStep, FamilyTag, FamilyTrace, Residual};
use crate::graph::Tree;

/// Finds a pendant `P_4` unit hanging at `x` whose removal leaves `x` with
/// degree at most one.  Returns the unit's local vertices and the step.
fn pendant_unit(res: &Residual, x: usize) -> Option<(Vec<usize>, FamilyStep)> {
    let t = &res.tree;
    let deg = |u: usize| t.degree(u);
    let far = |a: usize, from: usize| t.neighbors(a).iter().copied().find(|&u| u != from);
    // a - b with b a leaf, a of degree 2
    let tails: Vec<(usize, usize)> = t
        .neighbors(x)
        .iter()
        .filter(|&&a| deg(a) == 2)
        .filter_map(|&a| far(a, x).map(|b| (a, b)))
        .collect();
    if deg(x) <= 2 {
        for &(a, b) in &tails {
            if deg(b) == 2 {
                let c = far(b, a).expect("degree 2");
                if deg(c) == 1 {
                    return Some((
                        vec![a, b, c],
                        FamilyStep::P4AtEnd {
                            attach: res.label(x),
                            path: [res.label(a), res.label(b), res.label(c)],
                        },
                    ));
                }
            }
        }
    }
    if deg(x) <= 3 {
        let single = t.neighbors(x).iter().copied().find(|&s| deg(s) == 1);
        if let Some(s) = single {
            if let Some(&(a, b)) = tails.iter().find(|&&(_, b)| deg(b) == 1) {
                return Some((
                    vec![a, b, s],
                    FamilyStep::P4AtInner {
                        attach: res.label(x),
                        path: [res.label(a), res.label(b)],
                        single: res.label(s),
                    },
                ));
            }
        }
    }
    None
}

/// Membership in `𝒞`: trees built from `K_1` by repeatedly taking the
/// 1-sum with `P_4` at a leaf.  Peels pendant units (lowest attachment
/// vertex first) until one vertex remains.
pub fn recognize_c(t: &Tree) -> (bool, Option<FamilyTrace>) {
    if t.n() % 3 != 1 {
        return (false, None);
    }
    let mut res = Residual::new(t);
    let mut peeled = Vec::new();
    while res.tree.n() > 1 {
        let found = (0..res.tree.n()).find_map(|x| pendant_unit(&res, x));
        let Some((local, step)) = found else {
            return (false, None);
        };
        let mut local = local;
        local.sort_unstable();
        res.remove(&local);
        peeled.push(step);
    }
    (true, Some(res.base_trace(FamilyTag::Critical, peeled)))
}
