use std::collections::BTreeSet;

use super::FamilyError;
use crate::error::ParseError;
use crate::graph::Tree;

/// Largest order [`enumerate_trees`] accepts.
pub const ENUMERATION_LIMIT: usize = 12;

/// Canonical string of a tree: the sorted-parenthesis encoding rooted at
/// its centre, taking the smaller string when there are two centres.
/// Two trees are isomorphic iff their canonical forms are equal.
pub fn canonical_form(t: &Tree) -> String {
    t.centers()
        .into_iter()
        .map(|c| rooted_encoding(t, c))
        .min()
        .expect("every tree has a centre")
}

/// Sorted-parenthesis (AHU) encoding of `t` rooted at `root`.
pub fn rooted_encoding(t: &Tree, root: usize) -> String {
    let rooting = t.rooted(root);
    let mut code: Vec<String> = vec![String::new(); t.n()];
    for &v in rooting.order.iter().rev() {
        let mut parts: Vec<String> = rooting.children[v]
            .iter()
            .map(|&c| std::mem::take(&mut code[c]))
            .collect();
        parts.sort_unstable();
        let mut s = String::with_capacity(2 + parts.iter().map(String::len).sum::<usize>());
        s.push('(');
        for p in parts {
            s.push_str(&p);
        }
        s.push(')');
        code[v] = s;
    }
    std::mem::take(&mut code[root])
}

/// Rebuilds a tree from a parenthesis encoding.  Vertices are numbered in
/// preorder, so vertex 0 is the encoded root.
pub fn tree_from_canonical(code: &str) -> Result<Tree, ParseError> {
    let malformed = || ParseError::Malformed {
        line: 1,
        text: code.to_string(),
    };
    let mut parent: Vec<usize> = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    let mut closed_root = false;
    for ch in code.trim().chars() {
        if closed_root {
            return Err(malformed());
        }
        match ch {
            '(' => {
                let id = parent.len();
                parent.push(open.last().copied().unwrap_or(0));
                open.push(id);
            }
            ')' => {
                open.pop().ok_or_else(malformed)?;
                closed_root = open.is_empty();
            }
            _ => return Err(malformed()),
        }
    }
    if !closed_root {
        return Err(malformed());
    }
    Ok(Tree::from_parents(&parent))
}

/// Every rooted tree on `n` vertices as a level sequence (root at level 0),
/// generated in reverse lexicographic order starting from the path.
fn rooted_level_sequences(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut seq: Vec<usize> = (0..n).collect();
    loop {
        out.push(seq.clone());
        // last vertex deeper than the root's children
        let Some(p) = (0..n).rev().find(|&i| seq[i] > 1) else {
            return out;
        };
        let q = (0..p)
            .rev()
            .find(|&i| seq[i] == seq[p] - 1)
            .expect("a deeper vertex has an ancestor one level up");
        let shift = p - q;
        for i in p..n {
            seq[i] = seq[i - shift];
        }
    }
}

fn tree_from_levels(levels: &[usize]) -> Tree {
    let mut parent = vec![0; levels.len()];
    let mut last_at: Vec<usize> = Vec::new();
    for (i, &l) in levels.iter().enumerate() {
        last_at.truncate(l);
        if l > 0 {
            parent[i] = last_at[l - 1];
        }
        last_at.push(i);
    }
    Tree::from_parents(&parent)
}

/// One representative per isomorphism class of free trees on `n` vertices,
/// sorted by canonical form and labelled in canonical preorder.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>, FamilyError> {
    if n == 0 || n > ENUMERATION_LIMIT {
        return Err(FamilyError::EnumerationLimit {
            n,
            limit: ENUMERATION_LIMIT,
        });
    }
    let forms: BTreeSet<String> = rooted_level_sequences(n)
        .iter()
        .map(|levels| canonical_form(&tree_from_levels(levels)))
        .collect();
    Ok(forms
        .iter()
        .map(|f| tree_from_canonical(f).expect("canonical forms are well formed"))
        .collect())
}

/// All trees with `1 <= n <= n_max`, smallest first.
pub fn enumerate_trees_upto(n_max: usize) -> Result<Vec<Tree>, FamilyError> {
    let mut all = Vec::new();
    for n in 1..=n_max {
        all.extend(enumerate_trees(n)?);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| rooted_level_sequences(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 9, 20, 48, 115, 286, 719]);
    }

    #[test]
    fn free_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
        assert!(enumerate_trees(0).is_err());
        assert!(enumerate_trees(13).is_err());
    }

    #[test]
    fn four_vertices() {
        let trees = enumerate_trees(4).unwrap();
        let mut diams: Vec<usize> = trees.iter().map(Tree::diameter).collect();
        diams.sort_unstable();
        assert_eq!(diams, vec![2, 3]);
        assert_eq!(enumerate_trees(1).unwrap()[0].n(), 1);
    }

    #[test]
    fn canonical_round_trip() {
        for t in enumerate_trees(9).unwrap() {
            let form = canonical_form(&t);
            assert_eq!(canonical_form(&tree_from_canonical(&form).unwrap()), form);
        }
        assert!(tree_from_canonical("(()").is_err());
        assert!(tree_from_canonical("()()").is_err());
        assert!(tree_from_canonical("(x)").is_err());
        assert!(tree_from_canonical("").is_err());
    }

    #[test]
    fn canonical_form_ignores_labels() {
        let a = Tree::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        let b = Tree::from_edges(5, &[(4, 3), (3, 2), (3, 0), (0, 1)]).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
        assert_ne!(canonical_form(&a), canonical_form(&Tree::path(5)));
    }
}
