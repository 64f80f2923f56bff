//! Simple undirected graphs, trees, distances and the leaf-rank vocabulary.

mod distance;
pub mod io;
mod leaves;
mod tree;

pub use distance::{bfs_distances, diameter, distance_matrix, power_graph, Diameter};
pub use leaves::{classify_t_leaves, leaf_closure, LeafClosure, LeafRanks};
pub use tree::{Rooting, Tree};

use crate::error::GraphError;

/// A simple undirected graph on the dense vertex set `0..n`.
///
/// Adjacency lists are kept sorted; there are no loops and no parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path edges are simple")
    }

    /// Star `K_{1,leaves}` with the center at vertex 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &edges).expect("star edges are simple")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle edges are simple")
    }

    /// Inserts `{u, v}`, keeping adjacency lists sorted.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        match self.adj[u].binary_search(&v) {
            Ok(_) => Err(GraphError::DuplicateEdge(u.min(v), u.max(v))),
            Err(pos) => {
                self.adj[u].insert(pos, v);
                let pos = self.adj[v].binary_search(&u).unwrap_err();
                self.adj[v].insert(pos, u);
                Ok(())
            }
        }
    }

    pub fn add_vertex(&mut self) -> usize {
        self.adj.push(Vec::new());
        self.adj.len() - 1
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn m(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, nb)| nb.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        bfs_distances(self, 0)
            .map(|d| d.iter().all(Option::is_some))
            .unwrap_or(false)
    }

    /// Subgraph induced by `keep` (duplicates ignored).  Vertex `i` of the
    /// result corresponds to `mapping[i]` of `self`; `mapping` is sorted.
    pub fn induced(&self, keep: &[usize]) -> (Graph, Vec<usize>) {
        let mut mapping: Vec<usize> = keep.to_vec();
        mapping.sort_unstable();
        mapping.dedup();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in mapping.iter().enumerate() {
            index[v] = i;
        }
        let adj = mapping
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                    .collect()
            })
            .collect();
        (Graph { adj }, mapping)
    }

    /// Graph with every vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n());
        let mut adj = vec![Vec::new(); self.n()];
        for (u, nb) in self.adj.iter().enumerate() {
            let mut mapped: Vec<usize> = nb.iter().map(|&v| perm[v]).collect();
            mapped.sort_unstable();
            adj[perm[u]] = mapped;
        }
        Graph { adj }
    }
}
