//! Exact Bakry–Émery curvature: per-vertex values, the global minimum and
//! minimising test functions.

mod form;
mod oracle;

pub use form::{
    assemble_gamma2_form, assemble_gamma2_form_definitional, gamma_form, reduce_distance2, QuadraticForm, ReducedForm,
};
pub use oracle::oracle_curvature;

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ball2, gamma, gamma2, triangle_stats, Graph};

/// Curvature at a single vertex with a minimising function on its ball.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalCurvature {
    pub vertex: usize,
    pub kappa: f64,
    /// `(vertex, value)` over the centre (value 0), `N1` and `N2`, normalised
    /// so that `Γ(f)(x) = 1` and the first non-zero `N1` value is positive.
    pub witness: Vec<(usize, f64)>,
}

impl LocalCurvature {
    /// The witness as a function on the whole graph, zero off the ball.
    pub fn witness_function(&self, n: usize) -> Vec<f64> {
        let mut f = vec![0.0; n];
        for &(v, a) in &self.witness {
            f[v] = a;
        }
        f
    }
}

/// `κ(x) = min_f Γ₂(f)(x) / Γ(f)(x)`, computed as the smallest eigenvalue of
/// the `N2`-reduced Γ₂-form (the Γ-form being the identity on `N1`).
pub fn local_curvature(g: &Graph, x: usize) -> Result<LocalCurvature> {
    let ball = ball2(g, x)?;
    let form = assemble_gamma2_form(&ball);
    let reduced = reduce_distance2(&form, &ball)?;
    let eig = crate::linalg::symmetric_eigen(&reduced.form.coeff)?;
    let kappa = eig.values[0];

    let mut g1: Vec<f64> = eig.vector(0).iter().map(|a| a * std::f64::consts::SQRT_2).collect();
    if let Some(first) = g1.iter().find(|a| a.abs() > 1e-12) {
        if *first < 0.0 {
            g1.iter_mut().for_each(|a| *a = -*a);
        }
    }
    let g2 = reduced.extend(&g1);
    let mut witness = vec![(x, 0.0)];
    witness.extend(ball.n1.iter().copied().zip(g1));
    witness.extend(ball.n2.iter().copied().zip(g2));
    Ok(LocalCurvature {
        vertex: x,
        kappa,
        witness,
    })
}

/// Which vertices enter the global minimum.
#[derive(Debug, Clone, Copy)]
pub enum VertexSelection<'a> {
    All,
    Only(&'a [usize]),
}

#[derive(Debug, Clone, Serialize)]
pub struct Witness {
    pub vertex: usize,
    #[serde(serialize_with = "crate::report::ser_map12")]
    pub values: BTreeMap<usize, f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CurvatureReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(serialize_with = "crate::report::ser12")]
    pub ric: f64,
    #[serde(serialize_with = "crate::report::ser12")]
    pub upper_bound: f64,
    /// Vertices the report covers, in the same order as `per_vertex`.
    pub vertices: Vec<usize>,
    #[serde(serialize_with = "crate::report::ser_vec12")]
    pub per_vertex: Vec<f64>,
    pub witness: Witness,
}

impl CurvatureReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report json")
    }

    /// `(vertex, κ)` pairs.
    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.vertices.iter().copied().zip(self.per_vertex.iter().copied())
    }
}

/// Curvature over the selected vertices, the `2 + T/2` upper bound and a
/// witness at the lowest-index minimising vertex.
pub fn curvature(g: &Graph, selection: VertexSelection<'_>) -> Result<CurvatureReport> {
    let vertices: Vec<usize> = match selection {
        VertexSelection::All => (0..g.n()).collect(),
        VertexSelection::Only(vs) => {
            for &v in vs {
                g.check_vertex(v)?;
            }
            vs.to_vec()
        }
    };
    if vertices.is_empty() {
        return Err(Error::NoVertices);
    }
    let locals: Vec<LocalCurvature> = vertices
        .par_iter()
        .map(|&x| local_curvature(g, x))
        .collect::<Result<_>>()?;
    let best = locals
        .iter()
        .enumerate()
        .min_by(|a, b| a.1.kappa.total_cmp(&b.1.kappa).then(a.1.vertex.cmp(&b.1.vertex)))
        .map(|(i, _)| i)
        .expect("non-empty");
    let t = triangle_stats(g).max;
    let w = &locals[best];
    Ok(CurvatureReport {
        name: g.name().map(str::to_owned),
        ric: w.kappa,
        upper_bound: 2.0 + t as f64 / 2.0,
        vertices,
        per_vertex: locals.iter().map(|l| l.kappa).collect(),
        witness: Witness {
            vertex: w.vertex,
            values: w.witness.iter().copied().collect(),
        },
    })
}

/// `Γ₂(f)(x) − K·Γ(f)(x)` from the definitions.
pub fn check_inequality(g: &Graph, x: usize, f: &[f64], k: f64) -> Result<f64> {
    Ok(gamma2(g, f, x)? - k * gamma(g, f, f, x)?)
}
