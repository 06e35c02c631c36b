use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families::{self, AbelianCayleySpec, PermCayleySpec};
use crate::graph::Graph;

/// A named collection of graphs to verify.
#[derive(Debug, Clone)]
pub enum Corpus {
    /// Every example family at sizes small enough for exact enumeration.
    Standard,
    /// Caller-supplied graphs.
    Graphs(Vec<Graph>),
}

impl FromStr for Corpus {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "standard" => Ok(Corpus::Standard),
            other => Err(Error::InvalidParameter(format!(
                "unknown corpus '{other}' (expected 'standard')"
            ))),
        }
    }
}

impl Corpus {
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        match self {
            Corpus::Standard => standard_corpus(),
            Corpus::Graphs(gs) => Ok(gs.clone()),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Corpus::Standard => "standard".to_owned(),
            Corpus::Graphs(gs) => {
                let names: Vec<&str> = gs.iter().map(|g| g.name().unwrap_or("graph")).collect();
                format!("custom[{}]", names.join(", "))
            }
        }
    }
}

pub fn standard_corpus() -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=4 {
        out.push(families::hypercube(n)?);
    }
    for n in 2..=10 {
        out.push(families::complete(n)?);
    }
    for n in 3..=12 {
        out.push(families::cycle(n)?);
    }
    for n in 3..=6 {
        out.push(families::path(n)?);
    }
    for (n, k) in [(4, 2), (5, 1), (5, 2), (6, 3)] {
        out.push(families::slice(n, k)?);
    }
    for n in [3, 4] {
        out.push(families::perm_cayley(&PermCayleySpec::all_transpositions(n))?);
        out.push(families::sn_special(n)?);
    }
    for (orders, gens) in [
        (vec![9], vec![vec![2], vec![3]]),
        (vec![16], vec![vec![1], vec![4]]),
        (vec![3, 3], vec![vec![1, 0], vec![0, 1]]),
        (vec![2, 6], vec![vec![1, 0], vec![0, 1], vec![1, 1]]),
    ] {
        out.push(families::abelian_cayley(&AbelianCayleySpec::new(orders, gens))?);
    }
    for n in 2..=3 {
        out.push(families::middle_slice_adjacent(n)?);
    }
    for n in 3..=5 {
        out.push(families::dyck(n)?);
    }
    out.push(families::tree(3, 3)?.graph);
    out.push(families::petersen());
    Ok(out)
}
