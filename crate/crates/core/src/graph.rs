//! Immutable simple connected undirected graphs.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// A connected, simple, undirected, unweighted graph on vertices `0..n`.
///
/// Adjacency lists are sorted, so [`Graph::has_edge`] is a binary search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Rejects self-loops, repeated edges
    /// (in either orientation), out-of-range ids and disconnected input.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        let graph = Graph {
            adj,
            edge_count: edges.len(),
        };
        graph.check_connected()?;
        Ok(graph)
    }

    /// Builds a graph from per-vertex neighbor lists, validating symmetry.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut half_edges = 0;
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            for (i, &v) in list.iter().enumerate() {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                if i > 0 && list[i - 1] == v {
                    return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
                }
            }
            half_edges += list.len();
        }
        for u in 0..n {
            for &v in &adj[u] {
                if adj[v].binary_search(&u).is_err() {
                    return Err(Error::AsymmetricAdjacency(u, v));
                }
            }
        }
        let graph = Graph {
            adj,
            edge_count: half_edges / 2,
        };
        graph.check_connected()?;
        Ok(graph)
    }

    fn check_connected(&self) -> Result<()> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        if reached == n {
            Ok(())
        } else {
            Err(Error::Disconnected { reached, n })
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adj
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_sorted_adjacency() {
        let g = Graph::from_edges(4, &[(2, 1), (0, 1), (3, 2)]).unwrap();
        assert_eq!(g.neighbors(1), &[0, 2]);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2), (2, 3)]);
        assert!(g.has_edge(3, 2));
        assert!(!g.has_edge(0, 3));
    }

    #[test]
    fn rejects_malformed_input() {
        assert_eq!(Graph::from_edges(0, &[]), Err(Error::EmptyGraph));
        assert_eq!(Graph::from_edges(2, &[(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge(0, 1))
        );
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::from_edges(4, &[(0, 1), (2, 3)]),
            Err(Error::Disconnected { reached: 2, n: 4 })
        );
    }

    #[test]
    fn adjacency_must_be_symmetric() {
        assert_eq!(
            Graph::from_adjacency(vec![vec![1], vec![]]),
            Err(Error::AsymmetricAdjacency(0, 1))
        );
        let g = Graph::from_adjacency(vec![vec![1], vec![0]]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn single_vertex_is_connected() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
    }
}
