use super::Tree;
use crate::error::GraphError;

/// Leaf ranks of every vertex of a tree.
///
/// A leaf has rank 0.  A vertex is a `t`-leaf when it is adjacent to a
/// `(t-1)`-leaf and all of its neighbours except at most one are `s`-leaves
/// for some `s < t`.  A vertex may satisfy the definition for several `t`;
/// its rank is the smallest such `t`.  In a tree every vertex ends up ranked:
/// the unranked vertices always form a subforest whose leaves qualify next.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafRanks {
    rank: Vec<Option<usize>>,
    /// `levels[t]` lists every vertex satisfying the `t`-leaf definition.
    levels: Vec<Vec<usize>>,
}

impl LeafRanks {
    pub fn rank(&self, v: usize) -> Option<usize> {
        self.rank[v]
    }

    pub fn ranks(&self) -> &[Option<usize>] {
        &self.rank
    }

    /// Whether `v` satisfies the `t`-leaf definition (not necessarily minimally).
    pub fn is_t_leaf(&self, v: usize, t: usize) -> bool {
        self.levels.get(t).is_some_and(|l| l.binary_search(&v).is_ok())
    }

    /// Vertices of rank exactly `t`, ascending.
    pub fn with_rank(&self, t: usize) -> impl Iterator<Item = usize> + '_ {
        self.rank
            .iter()
            .enumerate()
            .filter_map(move |(v, r)| (*r == Some(t)).then_some(v))
    }

    /// `L(v)` and `L[v]` for a ranked vertex.
    pub fn closure(&self, tree: &Tree, v: usize) -> Result<LeafClosure, GraphError> {
        let t = self.rank[v].ok_or(GraphError::NoLeafRank(v))?;
        let mut open_set = Vec::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            let ru = self.rank[u].expect("closure only descends into ranked vertices");
            for &w in tree.neighbors(u) {
                if self.rank[w].is_some_and(|rw| rw < ru) {
                    open_set.push(w);
                    stack.push(w);
                }
            }
        }
        open_set.sort_unstable();
        let mut closed_set = open_set.clone();
        let pos = closed_set.binary_search(&v).unwrap_err();
        closed_set.insert(pos, v);
        Ok(LeafClosure {
            center: v,
            t,
            open_set,
            closed_set,
        })
    }
}

/// The leaf closure of a ranked vertex: `open_set` is `L(v)`, `closed_set`
/// is `L[v] = L(v) ∪ {v}`.  Both are sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafClosure {
    pub center: usize,
    pub t: usize,
    pub open_set: Vec<usize>,
    pub closed_set: Vec<usize>,
}

pub fn classify_t_leaves(tree: &Tree) -> LeafRanks {
    let n = tree.n();
    let mut rank = vec![None; n];
    let mut levels: Vec<Vec<usize>> = Vec::new();
    let level0: Vec<usize> = (0..n).filter(|&v| tree.degree(v) <= 1).collect();
    for &v in &level0 {
        rank[v] = Some(0);
    }
    levels.push(level0);

    let mut unranked = n - levels[0].len();
    let mut mark = vec![usize::MAX; n];
    while unranked > 0 {
        let t = levels.len();
        let mut candidates = Vec::new();
        for &u in &levels[t - 1] {
            for &v in tree.neighbors(u) {
                if mark[v] != t {
                    mark[v] = t;
                    candidates.push(v);
                }
            }
        }
        // ranks assigned so far are all < t
        let mut level: Vec<usize> = candidates
            .into_iter()
            .filter(|&v| tree.neighbors(v).iter().filter(|&&w| rank[w].is_none()).count() <= 1)
            .collect();
        if level.is_empty() {
            break;
        }
        level.sort_unstable();
        for &v in &level {
            if rank[v].is_none() {
                rank[v] = Some(t);
                unranked -= 1;
            }
        }
        levels.push(level);
    }
    LeafRanks { rank, levels }
}

pub fn leaf_closure(tree: &Tree, v: usize) -> Result<LeafClosure, GraphError> {
    if v >= tree.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: tree.n() });
    }
    classify_t_leaves(tree).closure(tree, v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_ranks() {
        let p7 = Tree::path(7);
        let r = classify_t_leaves(&p7);
        assert_eq!(
            r.ranks(),
            &[Some(0), Some(1), Some(2), Some(3), Some(2), Some(1), Some(0)]
        );
        // an endpoint next to a 1-leaf formally meets the 2-leaf definition too
        assert!(r.is_t_leaf(0, 2));
        assert!(!r.is_t_leaf(1, 2));
    }

    #[test]
    fn star_and_single() {
        let r = classify_t_leaves(&Tree::star(3));
        assert_eq!(r.ranks(), &[Some(1), Some(0), Some(0), Some(0)]);
        assert_eq!(classify_t_leaves(&Tree::single()).ranks(), &[Some(0)]);
    }

    #[test]
    fn closures() {
        let p7 = Tree::path(7);
        let c = leaf_closure(&p7, 2).unwrap();
        assert_eq!(c.open_set, vec![0, 1]);
        assert_eq!(c.closed_set, vec![0, 1, 2]);
        assert_eq!(c.t, 2);

        let star = Tree::star(3);
        assert_eq!(leaf_closure(&star, 0).unwrap().open_set, vec![1, 2, 3]);
        assert!(leaf_closure(&star, 1).unwrap().open_set.is_empty());

        // v = 2 with the chain 2 - 1 - 0 below it and a long tail on the other side
        let t = Tree::from_edges(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6)]).unwrap();
        assert_eq!(leaf_closure(&t, 2).unwrap().open_set, vec![0, 1]);
    }

    #[test]
    fn every_vertex_gets_a_rank() {
        let t = Tree::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6), (6, 7)],
        )
        .unwrap();
        let r = classify_t_leaves(&t);
        assert!(r.ranks().iter().all(Option::is_some));
        assert_eq!(r.rank(2), Some(2));
        assert_eq!(r.rank(3), Some(2));
        assert!(leaf_closure(&t, 99).is_err());
    }
}
