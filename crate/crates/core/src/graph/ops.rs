//! Δ, Γ and Γ₂ evaluated directly from their defining sums.

use super::Graph;
use crate::error::Result;

/// `Δf(x) = Σ_{y∼x} (f(y) − f(x))`.
pub fn laplacian_apply(g: &Graph, f: &[f64]) -> Result<Vec<f64>> {
    g.check_len(f)?;
    Ok((0..g.n()).map(|x| laplacian_at(g, f, x)).collect())
}

#[inline]
pub(crate) fn laplacian_at(g: &Graph, f: &[f64], x: usize) -> f64 {
    g.neighbors(x).iter().map(|&y| f[y] - f[x]).sum()
}

/// `Γ(f,h)(x) = ½ Σ_{y∼x} (f(x) − f(y))(h(x) − h(y))`.
pub fn gamma(g: &Graph, f: &[f64], h: &[f64], x: usize) -> Result<f64> {
    g.check_vertex(x)?;
    g.check_len(f)?;
    g.check_len(h)?;
    Ok(gamma_at(g, f, h, x))
}

#[inline]
pub(crate) fn gamma_at(g: &Graph, f: &[f64], h: &[f64], x: usize) -> f64 {
    0.5 * g
        .neighbors(x)
        .iter()
        .map(|&y| (f[x] - f[y]) * (h[x] - h[y]))
        .sum::<f64>()
}

/// `Γ(f)` at every vertex.
pub fn gamma_field(g: &Graph, f: &[f64]) -> Result<Vec<f64>> {
    g.check_len(f)?;
    Ok((0..g.n()).map(|x| gamma_at(g, f, f, x)).collect())
}

/// `Γ₂(f)(x) = ½ ΔΓ(f)(x) − Γ(f, Δf)(x)`, composed from the definitions.
/// Only values of `f` within distance two of `x` are read.
pub fn gamma2(g: &Graph, f: &[f64], x: usize) -> Result<f64> {
    g.check_vertex(x)?;
    g.check_len(f)?;
    Ok(gamma2_at(g, f, x))
}

pub(crate) fn gamma2_at(g: &Graph, f: &[f64], x: usize) -> f64 {
    let gamma_f = |y: usize| gamma_at(g, f, f, y);
    let lap = |y: usize| laplacian_at(g, f, y);

    // ½ΔΓ(f)(x)
    let gx = gamma_f(x);
    let lap_gamma: f64 = g.neighbors(x).iter().map(|&y| gamma_f(y) - gx).sum();

    // Γ(f, Δf)(x)
    let lx = lap(x);
    let cross = 0.5
        * g.neighbors(x)
            .iter()
            .map(|&y| (f[x] - f[y]) * (lx - lap(y)))
            .sum::<f64>();

    0.5 * lap_gamma - cross
}

/// `E(f,h) = Σ_{x∼y} (f(x) − f(y))(h(x) − h(y))`, each edge counted once.
pub fn dirichlet_form(g: &Graph, f: &[f64], h: &[f64]) -> Result<f64> {
    g.check_len(f)?;
    g.check_len(h)?;
    Ok(g.edges().map(|(u, v)| (f[u] - f[v]) * (h[u] - h[v])).sum())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleStats {
    /// `(u, v, t)` for every edge `u < v`: `t` is the number of common neighbours.
    pub per_edge: Vec<(usize, usize, usize)>,
    pub max: usize,
}

pub fn triangle_stats(g: &Graph) -> TriangleStats {
    let per_edge: Vec<_> = g
        .edges()
        .map(|(u, v)| (u, v, common_neighbors(g.neighbors(u), g.neighbors(v))))
        .collect();
    let max = per_edge.iter().map(|e| e.2).max().unwrap_or(0);
    TriangleStats { per_edge, max }
}

fn common_neighbors(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn k2() -> Graph {
        Graph::from_edges(2, &[(0, 1)]).unwrap()
    }

    #[test]
    fn laplacian_examples() {
        assert_eq!(laplacian_apply(&k2(), &[0.0, 1.0]).unwrap(), vec![1.0, -1.0]);
        let c4 = families::cycle(4).unwrap();
        assert_eq!(
            laplacian_apply(&c4, &[1.0, 0.0, -1.0, 0.0]).unwrap(),
            vec![-2.0, 0.0, 2.0, 0.0]
        );
        let c = laplacian_apply(&c4, &[3.5; 4]).unwrap();
        assert!(c.iter().all(|&v| v == 0.0));
        assert!(laplacian_apply(&c4, &[1.0]).is_err());
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma(&k2(), &[0.0, 1.0], &[0.0, 1.0], 0).unwrap(), 0.5);
        assert_eq!(gamma(&k2(), &[2.0, 2.0], &[2.0, 2.0], 1).unwrap(), 0.0);
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let f = [0.0, 1.0, 2.0, 3.0];
        assert_eq!(gamma(&star, &f, &f, 0).unwrap(), 7.0);
        assert!(gamma(&star, &f, &f, 4).is_err());
    }

    #[test]
    fn gamma2_examples() {
        assert_eq!(gamma2(&k2(), &[0.0, 1.0], 0).unwrap(), 1.0);
        assert_eq!(gamma2(&k2(), &[5.0, 5.0], 0).unwrap(), 0.0);
        let c5 = families::cycle(5).unwrap();
        // values 0, -1, -2 going one way and 1, 2 going the other
        let f = [0.0, -1.0, -2.0, 2.0, 1.0];
        assert!(gamma2(&c5, &f, 0).unwrap().abs() < 1e-12);
    }

    #[test]
    fn triangle_counts() {
        assert_eq!(triangle_stats(&families::hypercube(4).unwrap()).max, 0);
        assert_eq!(triangle_stats(&families::complete(6).unwrap()).max, 4);
        let s = triangle_stats(&families::slice(6, 2).unwrap());
        assert!(s.per_edge.iter().all(|e| e.2 == 4));
    }

    fn random_graph(seed: u64) -> Graph {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(3..14);
        // spanning path plus random chords keeps every vertex covered
        let mut edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
        for u in 0..n {
            for v in u + 2..n {
                if rng.gen_bool(0.3) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    fn random_fn(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
        (0..n).map(|_| rng.gen_range(-3.0..3.0)).collect()
    }

    proptest! {
        #[test]
        fn global_identity(seed in any::<u64>()) {
            let g = random_graph(seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xabc);
            let f = random_fn(g.n(), &mut rng);
            let h = random_fn(g.n(), &mut rng);
            let lhs: f64 = (0..g.n()).map(|x| gamma_at(&g, &f, &h, x)).sum();
            let lf = laplacian_apply(&g, &f).unwrap();
            let lh = laplacian_apply(&g, &h).unwrap();
            let mid: f64 = -f.iter().zip(&lh).map(|(a, b)| a * b).sum::<f64>();
            let rhs: f64 = -h.iter().zip(&lf).map(|(a, b)| a * b).sum::<f64>();
            prop_assert!((lhs - mid).abs() < 1e-10);
            prop_assert!((lhs - rhs).abs() < 1e-10);
            prop_assert!(f.iter().zip(&lf).map(|(a, b)| a * b).sum::<f64>() <= 1e-10);
            prop_assert!(lf.iter().sum::<f64>().abs() < 1e-10);
            prop_assert!((dirichlet_form(&g, &f, &f).unwrap() + f.iter().zip(&lf).map(|(a, b)| a * b).sum::<f64>()).abs() < 1e-10);
        }

        #[test]
        fn product_rule(seed in any::<u64>()) {
            let g = random_graph(seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xdef);
            let f = random_fn(g.n(), &mut rng);
            let h = random_fn(g.n(), &mut rng);
            let fh: Vec<f64> = f.iter().zip(&h).map(|(a, b)| a * b).collect();
            let lfh = laplacian_apply(&g, &fh).unwrap();
            let lf = laplacian_apply(&g, &f).unwrap();
            let lh = laplacian_apply(&g, &h).unwrap();
            for x in 0..g.n() {
                let rhs = f[x] * lh[x] + 2.0 * gamma_at(&g, &f, &h, x) + h[x] * lf[x];
                prop_assert!((lfh[x] - rhs).abs() < 1e-10);
            }
        }

        #[test]
        fn gamma2_shift_invariant(seed in any::<u64>(), c in -10.0f64..10.0) {
            let g = random_graph(seed);
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x123);
            let f = random_fn(g.n(), &mut rng);
            let shifted: Vec<f64> = f.iter().map(|v| v + c).collect();
            for x in 0..g.n() {
                prop_assert!((gamma2_at(&g, &f, x) - gamma2_at(&g, &shifted, x)).abs() < 1e-9);
                prop_assert!(gamma_at(&g, &f, &f, x) >= 0.0);
            }
        }
    }
}
