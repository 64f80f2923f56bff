use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::GraphError;

/// Hop distances from `source`; `None` marks unreachable vertices.
pub fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<Option<usize>>, GraphError> {
    if source >= g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: source,
            n: g.n(),
        });
    }
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    Ok(dist)
}

/// All-pairs hop distances by repeated BFS.
pub fn distance_matrix(g: &Graph) -> Vec<Vec<Option<usize>>> {
    (0..g.n())
        .map(|s| bfs_distances(g, s).expect("source in range"))
        .collect()
}

/// Graph diameter.  Disconnected graphs have an infinite diameter, which
/// orders above every finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

impl Diameter {
    pub fn finite(self) -> Option<usize> {
        match self {
            Diameter::Finite(d) => Some(d),
            Diameter::Infinite => None,
        }
    }
}

impl PartialEq<usize> for Diameter {
    fn eq(&self, other: &usize) -> bool {
        *self == Diameter::Finite(*other)
    }
}

impl PartialOrd<usize> for Diameter {
    fn partial_cmp(&self, other: &usize) -> Option<std::cmp::Ordering> {
        Some(self.cmp(&Diameter::Finite(*other)))
    }
}

impl fmt::Display for Diameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diameter::Finite(d) => write!(f, "{d}"),
            Diameter::Infinite => f.write_str("inf"),
        }
    }
}

/// Maximum shortest-path distance over all vertex pairs.  The empty graph
/// is given diameter 0.
pub fn diameter(g: &Graph) -> Diameter {
    let mut best = 0;
    for s in 0..g.n() {
        for d in bfs_distances(g, s).expect("source in range") {
            match d {
                Some(d) => best = best.max(d),
                None => return Diameter::Infinite,
            }
        }
    }
    Diameter::Finite(best)
}

/// The `k`-th power: same vertices, `u ~ v` iff `1 <= dist(u, v) <= k`.
pub fn power_graph(g: &Graph, k: usize) -> Graph {
    assert!(k >= 1, "graph powers start at k = 1");
    let n = g.n();
    let mut adj = vec![Vec::new(); n];
    let mut dist = vec![usize::MAX; n];
    let mut seen = Vec::new();
    let mut queue = VecDeque::new();
    for (s, row) in adj.iter_mut().enumerate() {
        dist[s] = 0;
        seen.push(s);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            if dist[u] == k {
                continue;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    seen.push(w);
                    queue.push_back(w);
                }
            }
        }
        for &v in &seen {
            if v != s {
                row.push(v);
            }
            dist[v] = usize::MAX;
        }
        seen.clear();
        row.sort_unstable();
    }
    Graph::from_adjacency_unchecked(adj)
}

impl Graph {
    pub(crate) fn from_adjacency_unchecked(adj: Vec<Vec<usize>>) -> Graph {
        Graph { adj }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bfs_on_small_graphs() {
        let p3 = Graph::path(3);
        assert_eq!(bfs_distances(&p3, 0).unwrap(), vec![Some(0), Some(1), Some(2)]);
        assert_eq!(bfs_distances(&Graph::empty(1), 0).unwrap(), vec![Some(0)]);
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(bfs_distances(&two, 0).unwrap()[2], None);
        assert!(matches!(
            bfs_distances(&p3, 3),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
    }

    #[test]
    fn diameters() {
        assert_eq!(diameter(&Graph::path(7)), Diameter::Finite(6));
        assert_eq!(diameter(&Graph::empty(1)), Diameter::Finite(0));
        let two = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(diameter(&two), Diameter::Infinite);
        assert!(Diameter::Infinite > 1_000_000usize);
        assert!(Diameter::Finite(3) >= 3usize);
    }

    #[test]
    fn powers() {
        let p4 = Graph::path(4);
        let sq = power_graph(&p4, 2);
        assert_eq!(sq.m(), 5);
        assert!(!sq.has_edge(0, 3));
        assert_eq!(power_graph(&p4, 1), p4);
        let p5 = Graph::path(5);
        assert_eq!(power_graph(&p5, 4).m(), 10);
    }
}
