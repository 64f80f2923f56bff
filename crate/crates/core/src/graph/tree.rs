use std::collections::VecDeque;
use std::ops::Deref;

use super::{bfs_distances, Graph};
use crate::error::GraphError;

/// A connected acyclic graph on at least one vertex, optionally rooted.
///
/// Treeness is checked once at construction; everything downstream relies
/// on it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tree {
    graph: Graph,
    rooting: Option<Rooting>,
}

/// Parent, children and depth arrays of a tree hung from `root`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rooting {
    pub root: usize,
    pub parent: Vec<Option<usize>>,
    pub children: Vec<Vec<usize>>,
    pub depth: Vec<usize>,
    /// Breadth-first order from the root; parents precede children.
    pub order: Vec<usize>,
}

impl Rooting {
    pub fn new(g: &Graph, root: usize) -> Rooting {
        let n = g.n();
        let mut parent = vec![None; n];
        let mut children = vec![Vec::new(); n];
        let mut depth = vec![0; n];
        let mut order = Vec::with_capacity(n);
        let mut seen = vec![false; n];
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &w in g.neighbors(u) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(u);
                    depth[w] = depth[u] + 1;
                    children[u].push(w);
                    queue.push_back(w);
                }
            }
        }
        Rooting {
            root,
            parent,
            children,
            depth,
            order,
        }
    }
}

impl Tree {
    pub fn new(graph: Graph) -> Result<Tree, GraphError> {
        let n = graph.n();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        let m = graph.m();
        if m + 1 != n {
            return Err(GraphError::EdgeCount { n, m });
        }
        if !graph.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(Tree {
            graph,
            rooting: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree, GraphError> {
        Tree::new(Graph::from_edges(n, edges)?)
    }

    /// Builds a tree from a parent array; `parent[0]` is ignored and every
    /// other `parent[i]` must be smaller than `i`.
    pub fn from_parents(parent: &[usize]) -> Tree {
        let n = parent.len().max(1);
        let mut adj = vec![Vec::new(); n];
        for (i, &p) in parent.iter().enumerate().skip(1) {
            assert!(p < i, "parent[{i}] = {p} must precede {i}");
            adj[i].push(p);
            adj[p].push(i);
        }
        for nb in &mut adj {
            nb.sort_unstable();
        }
        Tree {
            graph: Graph::from_adjacency_unchecked(adj),
            rooting: None,
        }
    }

    pub fn path(n: usize) -> Tree {
        Tree::new(Graph::path(n)).expect("paths are trees")
    }

    pub fn star(leaves: usize) -> Tree {
        Tree::new(Graph::star(leaves)).expect("stars are trees")
    }

    pub fn single() -> Tree {
        Tree::path(1)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    /// Re-roots the tree at `root`.
    pub fn rooted_at(mut self, root: usize) -> Result<Tree, GraphError> {
        if root >= self.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: root,
                n: self.n(),
            });
        }
        self.rooting = Some(Rooting::new(&self.graph, root));
        Ok(self)
    }

    pub fn rooting(&self) -> Option<&Rooting> {
        self.rooting.as_ref()
    }

    /// Rooting at `root` without storing it.
    pub fn rooted(&self, root: usize) -> Rooting {
        Rooting::new(&self.graph, root)
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.graph.degree(v) <= 1
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.is_leaf(v)).collect()
    }

    /// Vertices adjacent to a leaf (the leaf itself excluded).
    pub fn is_stem(&self, v: usize) -> bool {
        self.n() > 2 && self.graph.neighbors(v).iter().any(|&w| self.is_leaf(w))
    }

    /// Diameter by double BFS.
    pub fn diameter(&self) -> usize {
        let (far, _) = self.farthest_from(0);
        self.farthest_from(far).1
    }

    fn farthest_from(&self, s: usize) -> (usize, usize) {
        bfs_distances(&self.graph, s)
            .expect("source in range")
            .into_iter()
            .enumerate()
            .map(|(v, d)| (v, d.expect("trees are connected")))
            .fold((s, 0), |best, (v, d)| if d > best.1 { (v, d) } else { best })
    }

    /// The one or two central vertices (minimum eccentricity).
    pub fn centers(&self) -> Vec<usize> {
        let n = self.n();
        if n <= 2 {
            return (0..n).collect();
        }
        let mut deg: Vec<usize> = (0..n).map(|v| self.graph.degree(v)).collect();
        let mut layer: Vec<usize> = (0..n).filter(|&v| deg[v] == 1).collect();
        let mut remaining = n;
        while remaining > 2 {
            remaining -= layer.len();
            let mut next = Vec::new();
            for &leaf in &layer {
                for &w in self.graph.neighbors(leaf) {
                    deg[w] -= 1;
                    if deg[w] == 1 {
                        next.push(w);
                    }
                }
            }
            layer = next;
        }
        layer.sort_unstable();
        layer
    }

    /// Deletes `removed`; the remainder must still be a non-empty tree.
    /// Vertex `i` of the result is `mapping[i]` of `self`.
    pub fn remove_vertices(&self, removed: &[usize]) -> Result<(Tree, Vec<usize>), GraphError> {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !gone[v]).collect();
        self.induced_subtree(&keep)
    }

    pub fn induced_subtree(&self, keep: &[usize]) -> Result<(Tree, Vec<usize>), GraphError> {
        let (g, mapping) = self.graph.induced(keep);
        Ok((Tree::new(g)?, mapping))
    }

    pub fn relabel(&self, perm: &[usize]) -> Tree {
        Tree {
            graph: self.graph.relabel(perm),
            rooting: None,
        }
    }
}

impl Deref for Tree {
    type Target = Graph;

    fn deref(&self) -> &Graph {
        &self.graph
    }
}

impl TryFrom<Graph> for Tree {
    type Error = GraphError;

    fn try_from(g: Graph) -> Result<Self, Self::Error> {
        Tree::new(g)
    }
}
