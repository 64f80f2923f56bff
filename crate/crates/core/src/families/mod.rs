//! Tree families: exhaustive enumeration, generators for the extremal
//! constructions, and recognizers for the characterized classes.
//!
//! * `𝒯` ([`recognize_script_t`]): trees whose eternal distance-2
//!   domination number equals the domination number.
//! * `𝕋` ([`recognize_bbt`]): trees with `γ = γ₂`.
//! * `𝒞` ([`recognize_c`]): iterated 1-sums of `P_4` at leaves, the
//!   eternal distance-2 domination critical trees.

mod critical;
mod enumerate;
mod generators;
mod script_t;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use critical::recognize_c;
pub use enumerate::{
    canonical_form, enumerate_trees, enumerate_trees_upto, rooted_encoding, tree_from_canonical,
    ENUMERATION_LIMIT,
};
pub use generators::{
    chain_joins, gen_spider_tn, gen_t_mk, gen_t_mkd, unit_parents, unit_size, UnitJoin,
};
pub use script_t::recognize_script_t;

use crate::domination::gamma_k_tree;
use crate::graph::{Graph, Tree};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("tree enumeration supports 1 <= n <= {limit}, got {n}")]
    EnumerationLimit { n: usize, limit: usize },
    #[error("invalid unit joins: {0}")]
    BadJoins(String),
    #[error("vertex {vertex} already has degree {degree}, the maximum is {delta}")]
    DegreeViolation {
        vertex: usize,
        degree: usize,
        delta: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyTag {
    /// `γ∞_{all,2} = γ`.
    ScriptT,
    /// `γ = γ₂`.
    BlackboardT,
    /// Eternal distance-2 domination critical.
    Critical,
}

/// One construction step.  Vertex labels are those of the recognized tree;
/// `attach` always exists before the step.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FamilyStep {
    /// A star joined through one of its leaves: `attach - star[0]`, where
    /// `star[0]` is a leaf of the star centred at `star[1]` whose remaining
    /// leaves are `star[2..]`.
    StarByLeaf { attach: usize, star: Vec<usize> },
    /// A star joined through its centre `star[0]` (leaves `star[1..]`), plus
    /// `extra` new leaves on the leaf `attach`.
    StarAndLeaves {
        attach: usize,
        star: Vec<usize>,
        extra: Vec<usize>,
    },
    /// Two stars joined through their centres to the leaf `attach`.
    TwoStars {
        attach: usize,
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// `P_4` glued at an end: `attach - path[0] - path[1] - path[2]`.
    P4AtEnd { attach: usize, path: [usize; 3] },
    /// `P_4` glued at an inner vertex: `attach - path[0] - path[1]` plus the
    /// leaf `single` on `attach`.
    P4AtInner {
        attach: usize,
        path: [usize; 2],
        single: usize,
    },
}

impl FamilyStep {
    fn edges(&self) -> Vec<(usize, usize)> {
        let star_by_centre = |attach: usize, star: &[usize]| {
            let mut e = vec![(attach, star[0])];
            e.extend(star[1..].iter().map(|&l| (star[0], l)));
            e
        };
        match self {
            FamilyStep::StarByLeaf { attach, star } => {
                let mut e = vec![(*attach, star[0]), (star[0], star[1])];
                e.extend(star[2..].iter().map(|&l| (star[1], l)));
                e
            }
            FamilyStep::StarAndLeaves {
                attach,
                star,
                extra,
            } => {
                let mut e = star_by_centre(*attach, star);
                e.extend(extra.iter().map(|&l| (*attach, l)));
                e
            }
            FamilyStep::TwoStars {
                attach,
                first,
                second,
            } => {
                let mut e = star_by_centre(*attach, first);
                e.extend(star_by_centre(*attach, second));
                e
            }
            FamilyStep::P4AtEnd { attach, path } => {
                vec![(*attach, path[0]), (path[0], path[1]), (path[1], path[2])]
            }
            FamilyStep::P4AtInner {
                attach,
                path,
                single,
            } => vec![(*attach, path[0]), (path[0], path[1]), (*attach, *single)],
        }
    }
}

/// How a tree is built from a small base inside a family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyTrace {
    pub family: FamilyTag,
    pub base_vertices: Vec<usize>,
    pub base_edges: Vec<(usize, usize)>,
    /// Construction order (the reverse of the order they were peeled).
    pub steps: Vec<FamilyStep>,
}

impl FamilyTrace {
    /// Rebuilds the tree from the base by applying every step.
    pub fn replay(&self) -> Tree {
        let mut labels: Vec<usize> = self.base_vertices.clone();
        let mut edges = self.base_edges.clone();
        for step in &self.steps {
            for (a, b) in step.edges() {
                labels.push(a);
                labels.push(b);
                edges.push((a, b));
            }
        }
        labels.sort_unstable();
        labels.dedup();
        let index = |v: usize| labels.binary_search(&v).expect("labelled vertex");
        let mut g = Graph::empty(labels.len());
        for (a, b) in edges {
            g.add_edge(index(a), index(b)).expect("replayed edges are simple");
        }
        Tree::new(g).expect("family constructions produce trees")
    }
}

/// Membership in `𝕋`, decided numerically as `γ(T) = γ₂(T)`.
pub fn recognize_bbt(t: &Tree) -> bool {
    gamma_k_tree(t, 1).value == gamma_k_tree(t, 2).value
}

/// Peeling state shared by the structural recognizers: the surviving
/// vertices of the input tree, as a tree of their own.
pub(crate) struct Residual {
    pub tree: Tree,
    /// `labels[i]`: input-tree vertex of residual vertex `i`.
    pub labels: Vec<usize>,
}

impl Residual {
    pub fn new(t: &Tree) -> Self {
        Residual {
            tree: t.clone(),
            labels: (0..t.n()).collect(),
        }
    }

    pub fn remove(&mut self, local: &[usize]) {
        let (next, mapping) = self
            .tree
            .remove_vertices(local)
            .expect("peeled parts hang off the residual");
        self.labels = mapping.iter().map(|&i| self.labels[i]).collect();
        self.tree = next;
    }

    pub fn label(&self, local: usize) -> usize {
        self.labels[local]
    }

    pub fn base_trace(self, family: FamilyTag, mut peeled: Vec<FamilyStep>) -> FamilyTrace {
        peeled.reverse();
        FamilyTrace {
            family,
            base_edges: self
                .tree
                .edges()
                .map(|(a, b)| (self.labels[a], self.labels[b]))
                .collect(),
            base_vertices: self.labels,
            steps: peeled,
        }
    }
}
