//! Finite simple undirected graphs and the Γ-calculus primitives on them.
//!
//! Vertices are dense indices `0..n`. Every vertex must have at least one
//! neighbour; construction rejects isolated vertices.

mod ball;
mod io;
pub(crate) mod ops;

pub use ball::{ball2, VertexBall2};
pub use io::{parse_edge_list, parse_json, serialize_edge_list, serialize_json};
pub use ops::{dirichlet_form, gamma, gamma2, gamma_field, laplacian_apply, triangle_stats, TriangleStats};

use std::collections::VecDeque;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list. Edges may be given in either
    /// orientation; duplicates and self-loops are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for (i, &(u, v)) in edges.iter().enumerate() {
            let line = i + 1;
            for w in [u, v] {
                if w >= n {
                    return Err(Error::OutOfRange { line, index: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop { line, vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(Error::DuplicateEdge { line: 0, u: a, v: b });
            }
        }
        Self::from_sorted_adjacency(adj)
    }

    /// Builds a graph from neighbour lists, sorting and deduplicating them.
    /// Used by generators whose rules produce each edge from both ends.
    pub fn from_adjacency(mut adj: Vec<Vec<usize>>) -> Result<Self> {
        let n = adj.len();
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            list.dedup();
            if let Some(&w) = list.iter().find(|&&w| w >= n) {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
            if list.binary_search(&u).is_ok() {
                return Err(Error::SelfLoop { line: 0, vertex: u });
            }
        }
        for u in 0..n {
            for &v in &adj[u] {
                if adj[v].binary_search(&u).is_err() {
                    return Err(Error::InvalidParameter(format!(
                        "adjacency not symmetric: {u} lists {v} but not conversely"
                    )));
                }
            }
        }
        Self::from_sorted_adjacency(adj)
    }

    fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Result<Self> {
        if let Some(v) = adj.iter().position(Vec::is_empty) {
            return Err(Error::IsolatedVertex(v));
        }
        Ok(Self { adj, name: None })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Connected component label per vertex, and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let n = self.n();
        let mut label = vec![usize::MAX; n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for s in 0..n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = count;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if label[v] == usize::MAX {
                        label[v] = count;
                        queue.push_back(v);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn is_connected(&self) -> bool {
        self.components().1 == 1
    }

    pub(crate) fn check_vertex(&self, x: usize) -> Result<()> {
        if x < self.n() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: x, n: self.n() })
        }
    }

    pub(crate) fn check_len(&self, f: &[f64]) -> Result<()> {
        if f.len() == self.n() {
            Ok(())
        } else {
            Err(Error::LengthMismatch {
                expected: self.n(),
                got: f.len(),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_isolated_vertex() {
        assert_eq!(Graph::from_edges(3, &[(0, 1)]), Err(Error::IsolatedVertex(2)));
    }

    #[test]
    fn rejects_duplicate_and_loop() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1, .. })
        ));
        assert!(matches!(
            Graph::from_edges(2, &[(1, 1)]),
            Err(Error::SelfLoop { vertex: 1, .. })
        ));
    }

    #[test]
    fn adjacency_is_sorted_and_symmetric() {
        let g = Graph::from_edges(4, &[(3, 0), (0, 1), (2, 0), (1, 2)]).unwrap();
        assert_eq!(g.neighbors(0), &[1, 2, 3]);
        assert!(g.has_edge(3, 0) && g.has_edge(0, 3));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (1, 2)]);
    }

    #[test]
    fn components_of_two_edges() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(g.components().1, 2);
        assert!(!g.is_connected());
    }
}
