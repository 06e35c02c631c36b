//! Edge boundaries, Cheeger constants and log-Sobolev estimates.

mod cheeger;
mod logsobolev;

pub use cheeger::{cheeger_exact, cheeger_sweep, for_each_subset, DEFAULT_EXACT_CAP};
pub use logsobolev::{entropy, logsobolev_estimate, normalized_dirichlet, LogSobolevEstimate, RHO_CONVENTION};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{self, compose, transposition};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Exact,
    Sweep,
    Testset,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IsoperimetryReport {
    #[serde(serialize_with = "crate::report::ser12")]
    pub h: f64,
    #[serde(rename = "set")]
    pub argmin_set: Vec<usize>,
    pub boundary: usize,
    pub method: Method,
}

impl IsoperimetryReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("iso json")
    }

    pub(crate) fn new(g: &Graph, set: Vec<usize>, method: Method) -> Self {
        let boundary = boundary_size(g, &set).expect("valid set");
        Self {
            h: boundary as f64 / set.len() as f64,
            argmin_set: set,
            boundary,
            method,
        }
    }
}

/// Number of edges with exactly one endpoint in `set`.
pub fn boundary_size(g: &Graph, set: &[usize]) -> Result<usize> {
    let mut inside = vec![false; g.n()];
    for &v in set {
        g.check_vertex(v)?;
        inside[v] = true;
    }
    Ok(g.edges().filter(|&(u, v)| inside[u] != inside[v]).count())
}

/// The cyclic-distance test set in the Cayley graph of `S_n` generated by
/// the first transposition and the full rotation.
#[derive(Debug, Clone)]
pub struct SnTestSet {
    pub n: usize,
    /// `|A|` for `A = {φ : dist(φ(0), φ(1)) ≤ n/4}`.
    pub set_size: usize,
    pub group_order: usize,
    /// Report on the smaller of `A` and its complement.
    pub report: IsoperimetryReport,
    /// Every boundary edge joins `φ` and `(0 1)∘φ`.
    pub boundary_only_transposition_edges: bool,
}

pub fn sn_test_set(n: usize) -> Result<SnTestSet> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("sn_test_set needs n >= 3, got {n}")));
    }
    let (g, elements) = families::sn_special_labeled(n)?;
    let cyc = |a: usize, b: usize| {
        let d = a.abs_diff(b);
        d.min(n - d)
    };
    // dist ≤ n/4 over integers
    let inside: Vec<bool> = elements.iter().map(|p| 4 * cyc(p[0], p[1]) <= n).collect();
    let set_size = inside.iter().filter(|&&b| b).count();

    let swap = transposition(n, 0, 1);
    let index: std::collections::HashMap<&[usize], usize> =
        elements.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    let mut only_swap = true;
    for (u, v) in g.edges() {
        if inside[u] != inside[v] {
            let su = compose(&swap, &elements[u]);
            if index[su.as_slice()] != v {
                only_swap = false;
            }
        }
    }

    let take_inside = 2 * set_size <= g.n();
    let set: Vec<usize> = (0..g.n()).filter(|&i| inside[i] == take_inside).collect();
    let report = IsoperimetryReport::new(&g, set, Method::Testset);
    Ok(SnTestSet {
        n,
        set_size,
        group_order: g.n(),
        report,
        boundary_only_transposition_edges: only_swap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundary_examples() {
        let c6 = families::cycle(6).unwrap();
        assert_eq!(boundary_size(&c6, &[0, 1, 2]).unwrap(), 2);
        assert_eq!(boundary_size(&c6, &[0, 1, 2, 3, 4, 5]).unwrap(), 0);
        let k4 = families::complete(4).unwrap();
        assert_eq!(boundary_size(&k4, &[1, 3]).unwrap(), 4);
        assert!(boundary_size(&k4, &[9]).is_err());
    }

    #[test]
    fn complement_symmetry() {
        let g = families::slice(5, 2).unwrap();
        for mask in 0u32..(1 << 10) {
            if mask % 37 != 0 {
                continue;
            }
            let a: Vec<usize> = (0..10).filter(|i| mask >> i & 1 == 1).collect();
            let b: Vec<usize> = (0..10).filter(|i| mask >> i & 1 == 0).collect();
            assert_eq!(boundary_size(&g, &a).unwrap(), boundary_size(&g, &b).unwrap());
        }
    }

    #[test]
    fn test_set_boundary_uses_only_the_transposition() {
        for n in 4..=6 {
            let t = sn_test_set(n).unwrap();
            assert!(t.boundary_only_transposition_edges, "n = {n}");
            assert_eq!(
                t.report.boundary,
                boundary_size(&families::sn_special(n).unwrap(), &t.report.argmin_set).unwrap()
            );
        }
    }

    #[test]
    fn test_set_n4_values() {
        // ordered pairs at cyclic distance 1 among 4 symbols: 8 of 12
        let t = sn_test_set(4).unwrap();
        assert_eq!(t.set_size, 16);
        assert_eq!(t.report.argmin_set.len(), 8);
    }
}
