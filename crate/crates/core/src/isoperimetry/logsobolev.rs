//! Upper estimate of the log-Sobolev constant
//!
//! ```text
//! ρ = inf_{f > 0 non-constant}  E_u(f, f) / Ent_u(f²)
//! E_u(f, f) = (1/n) Σ_{x∼y} (f(x) − f(y))²
//! Ent_u(g)  = mean(g log g) − mean(g) log mean(g)
//! ```
//!
//! with `u` the uniform probability on the vertices. The infimum is
//! approximated by multi-start gradient descent in `log f`, so the returned
//! value is an upper bound on `ρ`. In this normalisation the hypercontractive
//! constant (`√((q−1)/(r−1)) ≤ e^{ρt}`) is `2ρ`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::laplacian_eigen;

/// Recorded in every estimate so downstream consumers know the scale.
pub const RHO_CONVENTION: &str =
    "entropy form E_u(f,f)/Ent_u(f^2) with uniform probability u; hypercontractive constant is 2x this value";

const FLOOR: f64 = 1e-12;
const MAX_ITER: usize = 400;

#[derive(Debug, Clone, Serialize)]
pub struct LogSobolevEstimate {
    #[serde(serialize_with = "crate::report::ser12")]
    pub rho_hat: f64,
    /// Random starts on top of the deterministic ones.
    pub trials: usize,
    #[serde(serialize_with = "crate::report::ser_vec12")]
    pub best_witness: Vec<f64>,
    pub convention: &'static str,
}

/// `(1/n) Σ_{x∼y} (f(x) − f(y))²`.
pub fn normalized_dirichlet(g: &Graph, f: &[f64]) -> f64 {
    g.edges().map(|(u, v)| (f[u] - f[v]).powi(2)).sum::<f64>() / g.n() as f64
}

/// `Ent_u(g)` for `g ≥ 0` under the uniform probability.
pub fn entropy(g: &[f64]) -> f64 {
    let n = g.len() as f64;
    let m = g.iter().sum::<f64>() / n;
    if m <= 0.0 {
        return 0.0;
    }
    let glogg = g.iter().map(|&v| if v > 0.0 { v * v.ln() } else { 0.0 }).sum::<f64>() / n;
    glogg - m * m.ln()
}

fn ratio(g: &Graph, f: &[f64]) -> f64 {
    let sq: Vec<f64> = f.iter().map(|a| a * a).collect();
    let ent = entropy(&sq);
    let scale = sq.iter().sum::<f64>() / f.len() as f64;
    if ent <= 1e-14 * scale {
        return f64::INFINITY;
    }
    normalized_dirichlet(g, f) / ent
}

/// Value and gradient with respect to `w = log f`.
fn ratio_grad_log(g: &Graph, f: &[f64]) -> (f64, Vec<f64>) {
    let n = f.len() as f64;
    let sq: Vec<f64> = f.iter().map(|a| a * a).collect();
    let m = sq.iter().sum::<f64>() / n;
    let ent = entropy(&sq);
    let e = normalized_dirichlet(g, f);
    if ent <= 1e-14 * m {
        return (f64::INFINITY, vec![0.0; f.len()]);
    }
    let r = e / ent;
    let grad = (0..f.len())
        .map(|x| {
            let de: f64 = 2.0 / n * g.neighbors(x).iter().map(|&y| f[x] - f[y]).sum::<f64>();
            let dent = 2.0 / n * f[x] * (sq[x] / m).ln();
            // chain rule through f = e^w
            f[x] * (de - r * dent) / ent
        })
        .collect();
    (r, grad)
}

fn clamp(f: &mut [f64]) {
    f.iter_mut().for_each(|a| *a = a.max(FLOOR));
}

/// Gradient descent in log-coordinates with Armijo backtracking. Never
/// returns a worse point than the start.
fn minimize(g: &Graph, mut f: Vec<f64>) -> (f64, Vec<f64>) {
    clamp(&mut f);
    let (mut val, mut grad) = ratio_grad_log(g, &f);
    if !val.is_finite() {
        return (val, f);
    }
    let mut step = 1.0;
    for _ in 0..MAX_ITER {
        let gn2: f64 = grad.iter().map(|a| a * a).sum();
        if gn2 <= 1e-30 {
            break;
        }
        let mut accepted = false;
        while step > 1e-14 {
            let mut trial: Vec<f64> = f.iter().zip(&grad).map(|(a, d)| a * (-step * d).exp()).collect();
            clamp(&mut trial);
            // scale invariance: keep max at 1 so the floor stays meaningful
            let mx = trial.iter().copied().fold(0.0, f64::max);
            trial.iter_mut().for_each(|a| *a = (*a / mx).max(FLOOR));
            let tv = ratio(g, &trial);
            if tv.is_finite() && tv <= val - 1e-4 * step * gn2 {
                let improvement = val - tv;
                f = trial;
                let (v, gr) = ratio_grad_log(g, &f);
                val = v;
                grad = gr;
                step *= 2.0;
                accepted = true;
                if improvement <= 1e-13 * val.abs() {
                    return (val, f);
                }
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            break;
        }
    }
    (val, f)
}

/// Deterministic starts: softened indicators of single vertices (and the
/// exact indicator, clamped) plus exponentials of the Fiedler vector.
fn deterministic_starts(g: &Graph) -> Result<Vec<Vec<f64>>> {
    let n = g.n();
    let mut starts = Vec::new();
    for v in 0..n.min(16) {
        for base in [FLOOR, 0.5] {
            let mut f = vec![base; n];
            f[v] = 1.0;
            starts.push(f);
        }
    }
    let eig = laplacian_eigen(g)?;
    let phi = eig.vector(1);
    let scale = phi.amax().max(1e-300);
    for s in [0.5, 1.0, 2.0, 4.0, -1.0, -4.0] {
        starts.push(phi.iter().map(|p| (s * p / scale).exp()).collect());
    }
    Ok(starts)
}

/// Multi-start estimate with `trials` additional random starts. Start `i`
/// depends only on `(seed, i)`, so more trials never raise the estimate.
pub fn logsobolev_estimate(g: &Graph, trials: usize, seed: u64) -> Result<LogSobolevEstimate> {
    let n = g.n();
    let mut starts = deterministic_starts(g)?;
    for i in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add((i as u64).wrapping_mul(0xD1B5_4A32_D192_ED03)));
        starts.push((0..n).map(|_| rng.gen_range(-2.0f64..2.0).exp()).collect());
    }
    let mut best: Option<(f64, Vec<f64>)> = None;
    for s in starts {
        let (v, f) = minimize(g, s);
        if v.is_finite() && best.as_ref().is_none_or(|(b, _)| v < *b) {
            best = Some((v, f));
        }
    }
    let (_, f) = best.ok_or_else(|| Error::NoConvergence("no finite log-Sobolev ratio".into()))?;
    Ok(LogSobolevEstimate {
        rho_hat: ratio(g, &f),
        trials,
        best_witness: f,
        convention: RHO_CONVENTION,
    })
}
