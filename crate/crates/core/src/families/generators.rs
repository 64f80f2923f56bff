use serde::{Deserialize, Serialize};

use super::FamilyError;
use crate::graph::{Graph, Tree};

/// Star `K_{1,n}` with two leaves hung on each of its leaves.
///
/// Vertex 0 is the centre, `1..=n` the middle vertices, and middle vertex
/// `i` carries leaves `n + 2i - 1` and `n + 2i`.
pub fn gen_spider_tn(n: usize) -> Tree {
    assert!(n >= 1, "spider needs at least one leg");
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..=n {
        edges.push((0, i));
        edges.push((i, n + 2 * i - 1));
        edges.push((i, n + 2 * i));
    }
    Tree::from_edges(3 * n + 1, &edges).expect("spider is a tree")
}

/// Hangs a path of `k` new vertices from every vertex of `base`.
///
/// Base vertices keep their labels; the path below base vertex `v` is
/// `b + v*k, ..., b + v*k + k - 1` (nearest first), `b = |V(base)|`.
pub fn gen_t_mk(base: &Tree, k: usize) -> Tree {
    assert!(k >= 1, "pendant paths need at least one vertex");
    let b = base.n();
    let mut g = Graph::empty(b * (k + 1));
    for (u, v) in base.edges() {
        g.add_edge(u, v).expect("base edges are simple");
    }
    for v in 0..b {
        let first = b + v * k;
        g.add_edge(v, first).expect("fresh vertex");
        for j in 1..k {
            g.add_edge(first + j - 1, first + j).expect("fresh vertex");
        }
    }
    Tree::new(g).expect("pendant paths keep a tree")
}

/// An edge between vertex `vertex_a` of unit `unit_a` and vertex `vertex_b`
/// of unit `unit_b` (unit-local indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitJoin {
    pub unit_a: usize,
    pub vertex_a: usize,
    pub unit_b: usize,
    pub vertex_b: usize,
}

/// Parent array of the unit: a complete `(Δ-1)`-ary tree of depth `⌊k/2⌋`
/// except that the root has `Δ` children.  Vertices are in BFS order.
pub fn unit_parents(k: usize, delta: usize) -> Vec<usize> {
    let depth = k / 2;
    let mut parent = vec![0];
    let mut layer = vec![0usize];
    for level in 0..depth {
        let fanout = if level == 0 { delta } else { delta - 1 };
        let mut next = Vec::new();
        for &p in &layer {
            for _ in 0..fanout {
                parent.push(p);
                next.push(parent.len() - 1);
            }
        }
        layer = next;
    }
    parent
}

pub fn unit_size(k: usize, delta: usize) -> usize {
    unit_parents(k, delta).len()
}

/// Leaf-to-leaf chain over `units` copies: the last vertex of unit `i`
/// joins the first leaf of unit `i + 1`.
pub fn chain_joins(k: usize, delta: usize, units: usize) -> Vec<UnitJoin> {
    let size = unit_size(k, delta);
    let first_leaf = if size == 1 { 0 } else { size - leaf_count(k, delta) };
    (1..units)
        .map(|i| UnitJoin {
            unit_a: i - 1,
            vertex_a: size - 1,
            unit_b: i,
            vertex_b: first_leaf,
        })
        .collect()
}

fn leaf_count(k: usize, delta: usize) -> usize {
    let depth = k / 2;
    if depth == 0 {
        1
    } else {
        delta * (delta - 1).pow(depth as u32 - 1)
    }
}

/// Disjoint unit trees for odd `k` and maximum degree `delta`, glued by
/// `joins`.  Unit `u`, local vertex `i` becomes vertex `u * size + i`.
pub fn gen_t_mkd(
    k: usize,
    delta: usize,
    units: usize,
    joins: &[UnitJoin],
) -> Result<Tree, FamilyError> {
    if k.is_multiple_of(2) {
        return Err(FamilyError::InvalidParameter(format!("k = {k} must be odd")));
    }
    if delta < 2 {
        return Err(FamilyError::InvalidParameter(format!(
            "maximum degree {delta} must be at least 2"
        )));
    }
    if units == 0 {
        return Err(FamilyError::InvalidParameter("need at least one unit".into()));
    }
    if joins.len() + 1 != units {
        return Err(FamilyError::BadJoins(format!(
            "{} joins cannot connect {units} units into a tree",
            joins.len()
        )));
    }
    let parents = unit_parents(k, delta);
    let size = parents.len();
    let mut g = Graph::empty(size * units);
    for u in 0..units {
        for (i, &p) in parents.iter().enumerate().skip(1) {
            g.add_edge(u * size + p, u * size + i).expect("unit edges are simple");
        }
    }
    let mut comp: Vec<usize> = (0..units).collect();
    fn find(comp: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while comp[r] != r {
            r = comp[r];
        }
        comp[x] = r;
        r
    }
    for j in joins {
        if j.unit_a >= units || j.unit_b >= units || j.vertex_a >= size || j.vertex_b >= size {
            return Err(FamilyError::BadJoins(format!("join {j:?} is out of range")));
        }
        let (ra, rb) = (find(&mut comp, j.unit_a), find(&mut comp, j.unit_b));
        if ra == rb {
            return Err(FamilyError::BadJoins(format!("join {j:?} closes a cycle")));
        }
        comp[ra] = rb;
        let a = j.unit_a * size + j.vertex_a;
        let b = j.unit_b * size + j.vertex_b;
        for v in [a, b] {
            if g.degree(v) >= delta {
                return Err(FamilyError::DegreeViolation {
                    vertex: v,
                    degree: g.degree(v),
                    delta,
                });
            }
        }
        g.add_edge(a, b).expect("joins connect different units");
    }
    Ok(Tree::new(g).expect("units joined along a spanning tree form a tree"))
}
