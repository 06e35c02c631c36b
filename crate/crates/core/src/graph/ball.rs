use std::collections::HashMap;

use super::Graph;
use crate::error::Result;

/// Radius-two neighbourhood of a vertex, the carrier of Γ₂ at that vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexBall2 {
    pub center: usize,
    /// Neighbours of the centre, ascending.
    pub n1: Vec<usize>,
    /// Vertices at distance exactly two, ascending.
    pub n2: Vec<usize>,
    /// Pairs `(i, j)`, `i < j`, of indices into `n1` whose vertices are adjacent.
    pub edges_n1n1: Vec<(usize, usize)>,
    /// Pairs `(i, k)` of an index into `n1` and an index into `n2`, adjacent in the graph.
    pub edges_n1n2: Vec<(usize, usize)>,
    /// Common neighbours of the centre and each `n2[k]`.
    pub r: Vec<usize>,
    /// Full-graph degree of each `n1[i]`.
    pub deg1: Vec<usize>,
}

impl VertexBall2 {
    /// Number of local coordinates (`|N1| + |N2|`), the centre being pinned.
    pub fn dim(&self) -> usize {
        self.n1.len() + self.n2.len()
    }

    /// Graph vertex for each local coordinate: `n1` then `n2`.
    pub fn coords(&self) -> Vec<usize> {
        self.n1.iter().chain(&self.n2).copied().collect()
    }

    pub fn degree(&self) -> usize {
        self.n1.len()
    }
}

pub fn ball2(g: &Graph, x: usize) -> Result<VertexBall2> {
    g.check_vertex(x)?;
    let n1: Vec<usize> = g.neighbors(x).to_vec();
    let pos1: HashMap<usize, usize> = n1.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    let mut n2 = Vec::new();
    for &v in &n1 {
        for &u in g.neighbors(v) {
            if u != x && !pos1.contains_key(&u) {
                n2.push(u);
            }
        }
    }
    n2.sort_unstable();
    n2.dedup();
    let pos2: HashMap<usize, usize> = n2.iter().enumerate().map(|(k, &u)| (u, k)).collect();

    let mut edges_n1n1 = Vec::new();
    let mut edges_n1n2 = Vec::new();
    let mut r = vec![0; n2.len()];
    for (i, &v) in n1.iter().enumerate() {
        for &w in g.neighbors(v) {
            if let Some(&j) = pos1.get(&w) {
                if i < j {
                    edges_n1n1.push((i, j));
                }
            } else if let Some(&k) = pos2.get(&w) {
                edges_n1n2.push((i, k));
                r[k] += 1;
            }
        }
    }
    let deg1 = n1.iter().map(|&v| g.degree(v)).collect();
    Ok(VertexBall2 {
        center: x,
        n1,
        n2,
        edges_n1n1,
        edges_n1n2,
        r,
        deg1,
    })
}
