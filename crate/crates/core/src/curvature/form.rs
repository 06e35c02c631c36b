//! Γ₂ at a vertex as a quadratic form in the values on its radius-two ball.
//!
//! All forms here represent *twice* the quantity: `fᵀ Q f = 2Γ₂(f)(x)` and
//! `fᵀ G f = 2Γ(f)(x)`, with `f(x) = 0` pinned. With that normalisation the
//! Γ-form is the identity on the `N1` coordinates and zero on `N2`, so the
//! curvature at `x` is the smallest eigenvalue of the reduced Γ₂-form.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexBall2};

#[derive(Debug, Clone, PartialEq)]
pub struct QuadraticForm {
    pub coeff: DMatrix<f64>,
    /// Graph vertex carried by each local coordinate.
    pub coords: Vec<usize>,
}

impl QuadraticForm {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn value(&self, f: &[f64]) -> f64 {
        assert_eq!(f.len(), self.dim());
        let mut acc = 0.0;
        for i in 0..f.len() {
            for j in 0..f.len() {
                acc += f[i] * self.coeff[(i, j)] * f[j];
            }
        }
        acc
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| (self.coeff[(i, j)] - self.coeff[(j, i)]).abs() <= tol))
    }
}

/// Adds `c · (a·f_i + b·f_j)²` to a coefficient matrix.
fn add_square(q: &mut DMatrix<f64>, c: f64, i: usize, a: f64, j: usize, b: f64) {
    q[(i, i)] += c * a * a;
    q[(j, j)] += c * b * b;
    q[(i, j)] += c * a * b;
    q[(j, i)] += c * a * b;
}

/// Assembles `2Γ₂` from the expanded Bochner formula:
///
/// ```text
/// 2Γ₂(f)(x) = ½ Σ_{u∈N2, v∼u} (f(u) − 2f(v))²  +  (Σ_v f(v))²
///           + Σ_v (4 − d(x) − d(v))/2 · f(v)²
///           + Σ_{v∼w in N1} [2(f(v) − f(w))² + ½(f(v)² + f(w)²)]
/// ```
pub fn assemble_gamma2_form(ball: &VertexBall2) -> QuadraticForm {
    let d1 = ball.n1.len();
    let dim = ball.dim();
    let dx = d1 as f64;
    let mut q = DMatrix::zeros(dim, dim);

    for &(i, k) in &ball.edges_n1n2 {
        add_square(&mut q, 0.5, d1 + k, 1.0, i, -2.0);
    }
    for i in 0..d1 {
        for j in 0..d1 {
            q[(i, j)] += 1.0;
        }
        q[(i, i)] += (4.0 - dx - ball.deg1[i] as f64) / 2.0;
    }
    for &(i, j) in &ball.edges_n1n1 {
        add_square(&mut q, 2.0, i, 1.0, j, -1.0);
        q[(i, i)] += 0.5;
        q[(j, j)] += 0.5;
    }
    QuadraticForm {
        coeff: q,
        coords: ball.coords(),
    }
}

/// Assembles `2Γ₂` by polarising the definitional evaluator
/// `Γ₂ = ½ΔΓ(f) − Γ(f, Δf)` on unit vectors. Independent of the expansion.
pub fn assemble_gamma2_form_definitional(g: &Graph, ball: &VertexBall2) -> QuadraticForm {
    let coords = ball.coords();
    let dim = coords.len();
    let mut scratch = vec![0.0; g.n()];
    let mut eval = |entries: &[(usize, f64)]| {
        for &(v, a) in entries {
            scratch[v] = a;
        }
        let val = 2.0 * crate::graph::gamma2(g, &scratch, ball.center).expect("ball vertex");
        for &(v, _) in entries {
            scratch[v] = 0.0;
        }
        val
    };
    let diag: Vec<f64> = coords.iter().map(|&v| eval(&[(v, 1.0)])).collect();
    let mut q = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        q[(i, i)] = diag[i];
        for j in 0..i {
            let both = eval(&[(coords[i], 1.0), (coords[j], 1.0)]);
            let off = 0.5 * (both - diag[i] - diag[j]);
            q[(i, j)] = off;
            q[(j, i)] = off;
        }
    }
    QuadraticForm { coeff: q, coords }
}

/// `2Γ(f)(x)` in ball coordinates: identity on `N1`, zero on `N2`.
pub fn gamma_form(ball: &VertexBall2) -> QuadraticForm {
    let dim = ball.dim();
    let d1 = ball.n1.len();
    QuadraticForm {
        coeff: DMatrix::from_fn(dim, dim, |i, j| if i == j && i < d1 { 1.0 } else { 0.0 }),
        coords: ball.coords(),
    }
}

/// The Γ₂-form restricted to `N1` after optimally eliminating the `N2` values.
#[derive(Debug, Clone)]
pub struct ReducedForm {
    pub form: QuadraticForm,
    /// Row `k` maps `N1` values to the optimal value at `n2[k]`.
    pub extension: DMatrix<f64>,
}

impl ReducedForm {
    /// Optimal `N2` values for given `N1` values.
    pub fn extend(&self, g1: &[f64]) -> Vec<f64> {
        (0..self.extension.nrows())
            .map(|k| (0..g1.len()).map(|i| self.extension[(k, i)] * g1[i]).sum())
            .collect()
    }
}

/// Schur complement of the `N2` block. The block must be diagonal with
/// entries `r(u)/2`; anything else means the form was assembled wrongly.
pub fn reduce_distance2(form: &QuadraticForm, ball: &VertexBall2) -> Result<ReducedForm> {
    let d1 = ball.n1.len();
    let d2 = ball.n2.len();
    if form.dim() != d1 + d2 {
        return Err(Error::FormConsistency(format!(
            "form dimension {} != ball dimension {}",
            form.dim(),
            d1 + d2
        )));
    }
    let q = &form.coeff;
    for k in 0..d2 {
        let dk = q[(d1 + k, d1 + k)];
        let expect = ball.r[k] as f64 / 2.0;
        if dk <= 0.0 || (dk - expect).abs() > 1e-9 {
            return Err(Error::FormConsistency(format!(
                "N2 diagonal entry {k} is {dk}, expected r/2 = {expect}"
            )));
        }
        for l in 0..d2 {
            if l != k && q[(d1 + k, d1 + l)].abs() > 1e-9 {
                return Err(Error::FormConsistency(format!("N2 block not diagonal at ({k},{l})")));
            }
        }
    }
    // f(u) = −D⁻¹ Bᵀ g, reduced = A − B D⁻¹ Bᵀ
    let extension = DMatrix::from_fn(d2, d1, |k, i| -q[(d1 + k, i)] / q[(d1 + k, d1 + k)]);
    let mut reduced = q.view((0, 0), (d1, d1)).into_owned();
    for k in 0..d2 {
        let dk = q[(d1 + k, d1 + k)];
        for i in 0..d1 {
            let bi = q[(i, d1 + k)];
            if bi == 0.0 {
                continue;
            }
            for j in 0..d1 {
                reduced[(i, j)] -= bi * q[(d1 + k, j)] / dk;
            }
        }
    }
    Ok(ReducedForm {
        form: QuadraticForm {
            coeff: reduced,
            coords: ball.n1.clone(),
        },
        extension,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::graph::ball2;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn full_fn(g: &Graph, form: &QuadraticForm, local: &[f64]) -> Vec<f64> {
        let mut f = vec![0.0; g.n()];
        for (&v, &a) in form.coords.iter().zip(local) {
            f[v] = a;
        }
        f
    }

    #[test]
    fn k2_form() {
        let g = families::complete(2).unwrap();
        let b = ball2(&g, 0).unwrap();
        let q = assemble_gamma2_form(&b);
        assert_eq!(q.coeff, DMatrix::from_element(1, 1, 2.0));
        assert_eq!(assemble_gamma2_form_definitional(&g, &b).coeff, q.coeff);
    }

    #[test]
    fn c5_flat_witness() {
        let g = families::cycle(5).unwrap();
        let b = ball2(&g, 0).unwrap();
        let q = assemble_gamma2_form(&b);
        assert_eq!(q.dim(), 4);
        // coords are n1 = [1, 4], n2 = [2, 3]; the witness is linear along 3,4,0,1,2
        assert_eq!(q.coords, vec![1, 4, 2, 3]);
        assert!(q.value(&[-1.0, 1.0, -2.0, 2.0]).abs() < 1e-12);
    }

    #[test]
    fn square_minimiser_value() {
        let g = families::hypercube(2).unwrap();
        let b = ball2(&g, 0).unwrap();
        let q = assemble_gamma2_form(&b);
        // f(N1) = (1, −1), f(u) = f(v) + f(w) = 0 gives 2Γ₂ = 2·(2Γ) = 4
        assert!((q.value(&[1.0, -1.0, 0.0]) - 4.0).abs() < 1e-12);
    }

    #[test]
    fn both_assemblies_agree_and_match_definition() {
        let graphs = [
            families::hypercube(3).unwrap(),
            families::complete(5).unwrap(),
            families::cycle(7).unwrap(),
            families::slice(5, 2).unwrap(),
            families::middle_slice_adjacent(3).unwrap(),
            families::tree(3, 3).unwrap().graph,
            families::sn_special(4).unwrap(),
            families::path(4).unwrap(),
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for g in &graphs {
            for x in 0..g.n() {
                let b = ball2(g, x).unwrap();
                let qa = assemble_gamma2_form(&b);
                let qd = assemble_gamma2_form_definitional(g, &b);
                assert!(qa.is_symmetric(1e-12));
                assert!((&qa.coeff - &qd.coeff).amax() <= 1e-10, "{:?} at {x}", g.name());
                for _ in 0..200 {
                    let local: Vec<f64> = (0..qa.dim()).map(|_| rng.gen_range(-2.0..2.0)).collect();
                    let f = full_fn(g, &qa, &local);
                    let def = 2.0 * crate::graph::gamma2(g, &f, x).unwrap();
                    assert!((qa.value(&local) - def).abs() <= 1e-9);
                    let gam = 2.0 * crate::graph::gamma(g, &f, &f, x).unwrap();
                    assert!((gamma_form(&b).value(&local) - gam).abs() <= 1e-9);
                }
            }
        }
    }

    #[test]
    fn schur_reduction_is_the_minimum() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for g in [
            families::hypercube(3).unwrap(),
            families::slice(5, 2).unwrap(),
            families::cycle(6).unwrap(),
        ] {
            let b = ball2(&g, 1).unwrap();
            let q = assemble_gamma2_form(&b);
            let red = reduce_distance2(&q, &b).unwrap();
            for _ in 0..50 {
                let g1: Vec<f64> = (0..b.n1.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let ext = red.extend(&g1);
                let full: Vec<f64> = g1.iter().chain(&ext).copied().collect();
                let best = q.value(&full);
                assert!((red.form.value(&g1) - best).abs() < 1e-9);
                // closed-form minimiser f(u) = (2/r) Σ f(v)
                for (k, &u) in b.n2.iter().enumerate() {
                    let s: f64 = b.edges_n1n2.iter().filter(|e| e.1 == k).map(|e| g1[e.0]).sum();
                    assert!((ext[k] - 2.0 * s / b.r[k] as f64).abs() < 1e-12, "vertex {u}");
                }
                // perturbing any N2 value cannot do better
                for k in 0..b.n2.len() {
                    for delta in [-0.3, 0.3] {
                        let mut p = full.clone();
                        p[b.n1.len() + k] += delta;
                        assert!(q.value(&p) >= best - 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn cube_reduced_form_closed_form() {
        // Σ_{v≠w}(g_v − g_w)² + (Σg)² + (2 − n)Σg², pairs unordered
        let n = 3;
        let g = families::hypercube(n).unwrap();
        let b = ball2(&g, 0).unwrap();
        let red = reduce_distance2(&assemble_gamma2_form(&b), &b).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..100 {
            let v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let mut pairs = 0.0;
            for i in 0..n {
                for j in i + 1..n {
                    pairs += (v[i] - v[j]).powi(2);
                }
            }
            let s: f64 = v.iter().sum();
            let sq: f64 = v.iter().map(|a| a * a).sum();
            let expect = pairs + s * s + (2.0 - n as f64) * sq;
            assert!((red.form.value(&v) - expect).abs() < 1e-10);
        }
    }

    #[test]
    fn complete_graph_has_nothing_to_reduce() {
        let g = families::complete(5).unwrap();
        let b = ball2(&g, 0).unwrap();
        let q = assemble_gamma2_form(&b);
        let red = reduce_distance2(&q, &b).unwrap();
        assert_eq!(red.form.coeff, q.coeff);
        assert_eq!(red.extension.nrows(), 0);
    }

    #[test]
    fn tree_minimiser_doubles() {
        let t = families::tree(3, 3).unwrap();
        let b = ball2(&t.graph, 0).unwrap();
        let red = reduce_distance2(&assemble_gamma2_form(&b), &b).unwrap();
        let ext = red.extend(&[1.0, -2.0, 0.5]);
        for (k, &(i, _)) in b.edges_n1n2.iter().enumerate() {
            assert_eq!(b.edges_n1n2[k].1, k);
            assert!((ext[k] - 2.0 * [1.0, -2.0, 0.5][i]).abs() < 1e-12);
        }
    }

    #[test]
    fn rejects_corrupted_block() {
        let g = families::hypercube(3).unwrap();
        let b = ball2(&g, 0).unwrap();
        let mut q = assemble_gamma2_form(&b);
        q.coeff[(3, 4)] = 0.5;
        q.coeff[(4, 3)] = 0.5;
        assert!(matches!(reduce_distance2(&q, &b), Err(Error::FormConsistency(_))));
        let mut q = assemble_gamma2_form(&b);
        q.coeff[(3, 3)] = -1.0;
        assert!(matches!(reduce_distance2(&q, &b), Err(Error::FormConsistency(_))));
    }
}
