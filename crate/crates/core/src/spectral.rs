//! Laplacian spectrum, spectral gap, heat semigroup and the gap/curvature
//! comparison.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::curvature::{curvature, VertexSelection};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{symmetric_eigen, Eigen};

/// `−Δ = D − A` as a dense matrix.
pub fn laplacian_matrix(g: &Graph) -> DMatrix<f64> {
    let n = g.n();
    let mut m = DMatrix::zeros(n, n);
    for u in 0..n {
        m[(u, u)] = g.degree(u) as f64;
        for &v in g.neighbors(u) {
            m[(u, v)] = -1.0;
        }
    }
    m
}

fn zero_threshold(g: &Graph) -> f64 {
    1e-8 * g.max_degree() as f64
}

#[derive(Debug, Clone, Serialize)]
pub struct SpectralReport {
    /// Eigenvalues of `−Δ`, ascending.
    #[serde(serialize_with = "crate::report::ser_vec12")]
    pub eigenvalues: Vec<f64>,
    /// Least eigenvalue classified as non-zero.
    #[serde(serialize_with = "crate::report::ser12")]
    pub lambda: f64,
    /// Number of eigenvalues classified as zero (= connected components).
    #[serde(rename = "components")]
    pub zero_multiplicity: usize,
}

impl SpectralReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spectral json")
    }
}

pub fn laplacian_eigen(g: &Graph) -> Result<Eigen> {
    symmetric_eigen(&laplacian_matrix(g))
}

fn report_from(g: &Graph, eig: &Eigen) -> SpectralReport {
    let thr = zero_threshold(g);
    let zero_multiplicity = eig.values.iter().filter(|v| v.abs() <= thr).count();
    let lambda = eig.values.iter().copied().find(|&v| v > thr).unwrap_or(f64::NAN);
    SpectralReport {
        eigenvalues: eig.values.clone(),
        lambda,
        zero_multiplicity,
    }
}

pub fn spectrum(g: &Graph) -> Result<SpectralReport> {
    Ok(report_from(g, &laplacian_eigen(g)?))
}

/// `E(f,h) = Σ_{x∼y} (f(x) − f(y))(h(x) − h(y))`.
pub fn dirichlet(g: &Graph, f: &[f64], h: &[f64]) -> Result<f64> {
    crate::graph::dirichlet_form(g, f, h)
}

/// `P_t = exp(tΔ)` at a fixed time.
#[derive(Debug, Clone)]
pub struct HeatKernel {
    pub t: f64,
    pub entries: DMatrix<f64>,
}

impl HeatKernel {
    pub fn apply(&self, f: &[f64]) -> Vec<f64> {
        (&self.entries * DVector::from_column_slice(f))
            .iter()
            .copied()
            .collect()
    }
}

/// Spectral decomposition of `Δ`, reused to form `P_t` for any `t`.
#[derive(Debug, Clone)]
pub struct HeatSemigroup {
    eig: Eigen,
    report: SpectralReport,
}

impl HeatSemigroup {
    pub fn new(g: &Graph) -> Result<Self> {
        let eig = laplacian_eigen(g)?;
        let report = report_from(g, &eig);
        Ok(Self { eig, report })
    }

    pub fn spectrum(&self) -> &SpectralReport {
        &self.report
    }

    pub fn kernel(&self, t: f64) -> Result<HeatKernel> {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "heat kernel time {t} must be finite and >= 0"
            )));
        }
        let v = &self.eig.vectors;
        let mut scaled = v.clone();
        for (k, &mu) in self.eig.values.iter().enumerate() {
            let w = (-t * mu.max(0.0)).exp();
            scaled.column_mut(k).scale_mut(w);
        }
        let mut entries = scaled * v.transpose();
        // symmetric by construction; remove rounding asymmetry
        let n = entries.nrows();
        for i in 0..n {
            for j in 0..i {
                let a = 0.5 * (entries[(i, j)] + entries[(j, i)]);
                entries[(i, j)] = a;
                entries[(j, i)] = a;
            }
        }
        Ok(HeatKernel { t, entries })
    }
}

pub fn heat_kernel(g: &Graph, t: f64) -> Result<HeatKernel> {
    HeatSemigroup::new(g)?.kernel(t)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GapCurvature {
    #[serde(serialize_with = "crate::report::ser12")]
    pub lambda: f64,
    #[serde(serialize_with = "crate::report::ser12")]
    pub ric: f64,
    #[serde(serialize_with = "crate::report::ser12")]
    pub slack: f64,
}

/// `λ − Ric` for a non-negatively curved graph.
pub fn gap_vs_curvature(g: &Graph) -> Result<GapCurvature> {
    let ric = curvature(g, VertexSelection::All)?.ric;
    if ric < -1e-8 {
        return Err(Error::Hypothesis(format!("curvature {ric} is negative")));
    }
    let lambda = spectrum(g)?.lambda;
    Ok(GapCurvature {
        lambda,
        ric,
        slack: lambda - ric,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SparseGap {
    #[serde(serialize_with = "crate::report::ser12")]
    pub lambda: f64,
    /// `‖(−Δ)v − λv‖` for the returned unit Ritz vector.
    #[serde(serialize_with = "crate::report::ser12")]
    pub residual: f64,
    pub steps: usize,
}

fn apply_laplacian(g: &Graph, v: &[f64], out: &mut [f64]) {
    for x in 0..g.n() {
        out[x] = g.neighbors(x).iter().map(|&y| v[x] - v[y]).sum();
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn project_out_constants(v: &mut [f64]) {
    let mean = v.iter().sum::<f64>() / v.len() as f64;
    v.iter_mut().for_each(|a| *a -= mean);
}

/// Spectral gap of a connected graph by Lanczos iteration on `−Δ` restricted
/// to functions orthogonal to constants, with full reorthogonalisation.
/// Returns once the Ritz residual is at most `tol · λ`.
pub fn sparse_gap(g: &Graph, tol: f64) -> Result<SparseGap> {
    if !g.is_connected() {
        return Err(Error::Hypothesis("sparse_gap needs a connected graph".into()));
    }
    let n = g.n();
    let max_steps = (n - 1).min(2000);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_1a9c);
    let mut q: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
    project_out_constants(&mut q);
    let norm = dot(&q, &q).sqrt();
    q.iter_mut().for_each(|a| *a /= norm);

    let mut basis: Vec<Vec<f64>> = vec![q];
    let mut alpha: Vec<f64> = Vec::new();
    let mut beta: Vec<f64> = Vec::new();
    let mut w = vec![0.0; n];

    let mut step = 0;
    loop {
        let qk = basis.last().expect("basis");
        apply_laplacian(g, qk, &mut w);
        let a = dot(&w, qk);
        alpha.push(a);
        // full reorthogonalisation, twice
        for _ in 0..2 {
            project_out_constants(&mut w);
            for b in &basis {
                let c = dot(&w, b);
                w.iter_mut().zip(b).for_each(|(x, y)| *x -= c * y);
            }
        }
        let bnorm = dot(&w, &w).sqrt();
        step += 1;

        let done_space = step >= max_steps || bnorm <= 1e-12 * a.abs().max(1.0);
        if step % 10 == 0 || done_space {
            let m = alpha.len();
            let t = DMatrix::from_fn(m, m, |i, j| {
                if i == j {
                    alpha[i]
                } else if i == j + 1 {
                    beta[j]
                } else if j == i + 1 {
                    beta[i]
                } else {
                    0.0
                }
            });
            let eig = symmetric_eigen(&t)?;
            let theta = eig.values[0];
            let s = eig.vector(0);
            let est = bnorm * s[m - 1].abs();
            if est <= tol * theta.abs() || done_space {
                let mut y = vec![0.0; n];
                for (k, b) in basis.iter().enumerate() {
                    y.iter_mut().zip(b).for_each(|(acc, v)| *acc += s[k] * v);
                }
                let yn = dot(&y, &y).sqrt();
                y.iter_mut().for_each(|a| *a /= yn);
                let mut ly = vec![0.0; n];
                apply_laplacian(g, &y, &mut ly);
                let lambda = dot(&ly, &y);
                let residual = ly
                    .iter()
                    .zip(&y)
                    .map(|(a, b)| (a - lambda * b).powi(2))
                    .sum::<f64>()
                    .sqrt();
                if residual <= 10.0 * tol * lambda.abs() {
                    return Ok(SparseGap {
                        lambda,
                        residual,
                        steps: step,
                    });
                }
                if done_space {
                    return Err(Error::NoConvergence(format!(
                        "Lanczos residual {residual:e} after {step} steps"
                    )));
                }
            }
        }
        beta.push(bnorm);
        basis.push(w.iter().map(|a| a / bnorm).collect());
    }
}
