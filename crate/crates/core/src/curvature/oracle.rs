//! Independent estimate of κ(x): multi-start steepest descent on the
//! Rayleigh quotient `Γ₂(f)(x) / Γ(f)(x)` over functions on the ball, with
//! both quantities evaluated from their definitions. Shares no code with the
//! form assembly, Schur reduction or eigensolver.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::graph::{ball2, Graph};

struct Evaluator<'a> {
    g: &'a Graph,
    x: usize,
    coords: Vec<usize>,
    scratch: Vec<f64>,
}

impl Evaluator<'_> {
    fn load(&mut self, f: &[f64]) {
        for (&v, &a) in self.coords.iter().zip(f) {
            self.scratch[v] = a;
        }
    }

    /// `(Γ₂(f)(x), Γ(f)(x))`.
    fn pair(&mut self, f: &[f64]) -> (f64, f64) {
        self.load(f);
        let s = &self.scratch;
        (
            crate::graph::ops::gamma2_at(self.g, s, self.x),
            crate::graph::ops::gamma_at(self.g, s, s, self.x),
        )
    }

    /// Bilinear forms `(Γ₂(f,h), Γ(f,h))` by polarisation.
    fn bilinear(&mut self, f: &[f64], h: &[f64]) -> (f64, f64) {
        let plus: Vec<f64> = f.iter().zip(h).map(|(a, b)| a + b).collect();
        let minus: Vec<f64> = f.iter().zip(h).map(|(a, b)| a - b).collect();
        let (qp, pp) = self.pair(&plus);
        let (qm, pm) = self.pair(&minus);
        ((qp - qm) / 4.0, (pp - pm) / 4.0)
    }

    /// Gradients of both quadratics at `f`.
    fn gradients(&mut self, f: &[f64]) -> (Vec<f64>, Vec<f64>) {
        let dim = f.len();
        let mut gq = vec![0.0; dim];
        let mut gp = vec![0.0; dim];
        let mut e = vec![0.0; dim];
        for i in 0..dim {
            e[i] = 1.0;
            let (q, p) = self.bilinear(f, &e);
            gq[i] = 2.0 * q;
            gp[i] = 2.0 * p;
            e[i] = 0.0;
        }
        (gq, gp)
    }
}

fn normalize(f: &mut [f64]) {
    let n = f.iter().map(|a| a * a).sum::<f64>().sqrt();
    if n > 0.0 {
        f.iter_mut().for_each(|a| *a /= n);
    }
}

/// Smallest `μ` with `det(A − μB) = 0` for 2×2 symmetric `A`, `B` (`B` ⪰ 0)
/// and the corresponding combination coefficients.
fn min_pencil_2x2(a: [f64; 3], b: [f64; 3]) -> Option<(f64, [f64; 2])> {
    let [a11, a12, a22] = a;
    let [b11, b12, b22] = b;
    let c2 = b11 * b22 - b12 * b12;
    let c1 = -(a11 * b22 + a22 * b11 - 2.0 * a12 * b12);
    let c0 = a11 * a22 - a12 * a12;
    let scale = b11.abs().max(b22.abs()).max(1e-300);
    let mu = if c2.abs() > 1e-12 * scale * scale {
        let disc = (c1 * c1 - 4.0 * c2 * c0).max(0.0);
        // stable smaller root of c2 μ² + c1 μ + c0 with c2 > 0
        let q = -0.5 * (c1 - disc.sqrt());
        let r1 = q / c2;
        let r2 = if q != 0.0 { c0 / q } else { r1 };
        r1.min(r2)
    } else if c1.abs() > 0.0 {
        -c0 / c1
    } else {
        return None;
    };
    let r1 = [a12 - mu * b12, -(a11 - mu * b11)];
    let r2 = [a22 - mu * b22, -(a12 - mu * b12)];
    let pick = if r1[0].hypot(r1[1]) >= r2[0].hypot(r2[1]) {
        r1
    } else {
        r2
    };
    if pick[0] == 0.0 && pick[1] == 0.0 {
        return None;
    }
    Some((mu, pick))
}

fn descend(ev: &mut Evaluator<'_>, mut f: Vec<f64>, max_iter: usize) -> f64 {
    normalize(&mut f);
    let (mut q, mut p) = ev.pair(&f);
    if p <= 1e-14 {
        return f64::INFINITY;
    }
    let mut stall = 0;
    for _ in 0..max_iter {
        let rq = q / p;
        let (gq, gp) = ev.gradients(&f);
        let mut d: Vec<f64> = gq.iter().zip(&gp).map(|(a, b)| -(a - rq * b) / p).collect();
        let dn = d.iter().map(|a| a * a).sum::<f64>().sqrt();
        if dn < 1e-15 {
            break;
        }
        d.iter_mut().for_each(|a| *a /= dn);
        let (qd, pd) = ev.pair(&d);
        let (qfd, pfd) = ev.bilinear(&f, &d);
        let Some((_, [alpha, beta])) = min_pencil_2x2([q, qfd, qd], [p, pfd, pd]) else {
            break;
        };
        let mut next: Vec<f64> = f.iter().zip(&d).map(|(a, b)| alpha * a + beta * b).collect();
        normalize(&mut next);
        let (nq, np) = ev.pair(&next);
        if np <= 1e-14 || !(nq / np).is_finite() || nq / np > rq {
            break;
        }
        if rq - nq / np <= 1e-15 * rq.abs().max(1.0) {
            stall += 1;
            if stall >= 5 {
                q = nq;
                p = np;
                break;
            }
        } else {
            stall = 0;
        }
        f = next;
        q = nq;
        p = np;
    }
    q / p
}

/// Best Rayleigh value over `trials` random starts (at least one).
/// Always an upper bound on κ(x), up to rounding.
pub fn oracle_curvature(g: &Graph, x: usize, trials: usize, seed: u64) -> Result<f64> {
    let ball = ball2(g, x)?;
    let coords = ball.coords();
    let dim = coords.len();
    let mut ev = Evaluator {
        g,
        x,
        coords,
        scratch: vec![0.0; g.n()],
    };
    let mut best = f64::INFINITY;
    for t in 0..trials.max(1) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (t as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let start: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
        best = best.min(descend(&mut ev, start, 20_000));
    }
    Ok(best)
}
