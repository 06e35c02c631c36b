use std::cmp::Ordering;

use rayon::prelude::*;

use super::{IsoperimetryReport, Method};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::laplacian_eigen;

pub const DEFAULT_EXACT_CAP: usize = 22;

/// Bits of the Gray-code walk that are split into parallel prefix blocks.
const PREFIX_BITS: usize = 8;

/// Incremental boundary bookkeeping for a vertex set stored as a bitmask.
struct Walker<'a> {
    g: &'a Graph,
    inside: Vec<bool>,
    mask: u64,
    size: usize,
    boundary: usize,
}

impl<'a> Walker<'a> {
    fn new(g: &'a Graph, mask: u64) -> Self {
        let inside: Vec<bool> = (0..g.n()).map(|v| mask >> v & 1 == 1).collect();
        let boundary = g.edges().filter(|&(u, v)| inside[u] != inside[v]).count();
        let size = mask.count_ones() as usize;
        Self {
            g,
            inside,
            mask,
            size,
            boundary,
        }
    }

    fn flip(&mut self, v: usize) {
        let inner = self.g.neighbors(v).iter().filter(|&&w| self.inside[w]).count();
        let deg = self.g.degree(v);
        if self.inside[v] {
            // edges to outside become internal, edges to inside become boundary
            self.boundary = self.boundary + inner - (deg - inner);
            self.size -= 1;
        } else {
            self.boundary = self.boundary + (deg - inner) - inner;
            self.size += 1;
        }
        self.inside[v] = !self.inside[v];
        self.mask ^= 1 << v;
    }
}

/// Calls `visit(mask, |A|, |∂A|)` for every subset of the vertex set,
/// walking a Gray code so each step is one vertex flip. `n ≤ 30`.
pub fn for_each_subset(g: &Graph, mut visit: impl FnMut(u64, usize, usize)) -> Result<()> {
    let n = g.n();
    if n > 30 {
        return Err(Error::OverCap { n, cap: 30 });
    }
    let mut w = Walker::new(g, 0);
    visit(0, 0, 0);
    for k in 1u64..(1 << n) {
        w.flip(k.trailing_zeros() as usize);
        visit(w.mask, w.size, w.boundary);
    }
    Ok(())
}

/// A candidate set `mask` with ratio `boundary / size`.
#[derive(Debug, Clone, Copy)]
struct Candidate {
    boundary: usize,
    size: usize,
    mask: u64,
}

/// Lexicographic order of the sorted vertex lists of two sets.
fn lex_cmp(a: u64, b: u64) -> Ordering {
    let d = a ^ b;
    if d == 0 {
        return Ordering::Equal;
    }
    let v = d.trailing_zeros();
    let (with, without) = if a >> v & 1 == 1 {
        (Ordering::Less, Ordering::Greater)
    } else {
        (Ordering::Greater, Ordering::Less)
    };
    // the set lacking v is a prefix of the other iff it has nothing above v
    let other = if a >> v & 1 == 1 { b } else { a };
    if other >> v == 0 {
        without
    } else {
        with
    }
}

impl Candidate {
    fn better_than(&self, other: &Candidate) -> bool {
        let lhs = self.boundary * other.size;
        let rhs = other.boundary * self.size;
        lhs < rhs || (lhs == rhs && lex_cmp(self.mask, other.mask) == Ordering::Less)
    }
}

fn best_of(a: Option<Candidate>, b: Option<Candidate>) -> Option<Candidate> {
    match (a, b) {
        (Some(x), Some(y)) => Some(if y.better_than(&x) { y } else { x }),
        (x, None) => x,
        (None, y) => y,
    }
}

fn mask_to_set(mask: u64, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Exact Cheeger constant by enumerating every subset containing vertex 0
/// (each cut is seen once, through whichever side contains 0) in parallel
/// Gray-code blocks. Ties go to the lexicographically least set.
pub fn cheeger_exact(g: &Graph, cap: usize) -> Result<IsoperimetryReport> {
    let n = g.n();
    if n > cap.min(40) {
        return Err(Error::OverCap { n, cap: cap.min(40) });
    }
    let full: u64 = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let free = n - 1;
    let prefix = free.min(PREFIX_BITS);
    let low = free - prefix;

    let consider = |best: &mut Option<Candidate>, mask: u64, size: usize, boundary: usize| {
        if 2 * size <= n {
            *best = best_of(*best, Some(Candidate { boundary, size, mask }));
        }
        let comp = n - size;
        if comp > 0 && 2 * comp <= n {
            *best = best_of(
                *best,
                Some(Candidate {
                    boundary,
                    size: comp,
                    mask: full & !mask,
                }),
            );
        }
    };

    let best = (0u64..1 << prefix)
        .into_par_iter()
        .map(|p| {
            // vertex 0 fixed; bit i of the walk is vertex i + 1; prefix bits sit on top
            let start = 1u64 | (p << (low + 1));
            let mut w = Walker::new(g, start);
            let mut best = None;
            consider(&mut best, w.mask, w.size, w.boundary);
            for k in 1u64..(1 << low) {
                w.flip(k.trailing_zeros() as usize + 1);
                consider(&mut best, w.mask, w.size, w.boundary);
            }
            best
        })
        .reduce(|| None, best_of)
        .expect("n >= 2 gives at least one candidate");

    Ok(IsoperimetryReport {
        h: best.boundary as f64 / best.size as f64,
        argmin_set: mask_to_set(best.mask, n),
        boundary: best.boundary,
        method: Method::Exact,
    })
}

/// Upper bound on the Cheeger constant from sweeping the Fiedler vector.
pub fn cheeger_sweep(g: &Graph) -> Result<IsoperimetryReport> {
    let n = g.n();
    let eig = laplacian_eigen(g)?;
    let fiedler = eig.vector(1);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| fiedler[a].total_cmp(&fiedler[b]).then(a.cmp(&b)));

    let mut inside = vec![false; n];
    let mut boundary = 0usize;
    let mut best: Option<(usize, usize, usize)> = None; // (boundary, size, prefix length)
    for (k, &v) in order.iter().enumerate().take(n - 1) {
        let inner = g.neighbors(v).iter().filter(|&&w| inside[w]).count();
        boundary = boundary + (g.degree(v) - inner) - inner;
        inside[v] = true;
        let len = k + 1;
        let size = len.min(n - len);
        let better = match best {
            None => true,
            Some((b, s, _)) => boundary * s < b * size,
        };
        if better {
            best = Some((boundary, size, len));
        }
    }
    let (_, size, len) = best.expect("n >= 2");
    let mut set: Vec<usize> = if len == size {
        order[..len].to_vec()
    } else {
        order[len..].to_vec()
    };
    set.sort_unstable();
    Ok(IsoperimetryReport::new(g, set, Method::Sweep))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;
    use crate::isoperimetry::boundary_size;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Plain enumeration over all subsets with |A| ≤ n/2, no Gray code.
    fn brute_force(g: &Graph) -> (usize, usize) {
        let n = g.n();
        let mut best = (usize::MAX, 1usize);
        for mask in 1u64..(1 << n) {
            let set = mask_to_set(mask, n);
            if 2 * set.len() > n {
                continue;
            }
            let b = boundary_size(g, &set).unwrap();
            if b * best.1 < best.0 * set.len() || best.0 == usize::MAX {
                best = (b, set.len());
            }
        }
        best
    }

    #[test]
    fn lexicographic_order() {
        assert_eq!(lex_cmp(0b011, 0b101), Ordering::Less); // {0,1} < {0,2}
        assert_eq!(lex_cmp(0b001, 0b011), Ordering::Less); // {0} < {0,1}
        assert_eq!(lex_cmp(0b110, 0b001), Ordering::Greater); // {1,2} > {0}
        assert_eq!(lex_cmp(0b101, 0b101), Ordering::Equal);
    }

    #[test]
    fn known_constants() {
        let r = cheeger_exact(&families::cycle(6).unwrap(), DEFAULT_EXACT_CAP).unwrap();
        assert!((r.h - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(r.argmin_set, vec![0, 1, 2]);
        assert_eq!(r.boundary, 2);
        for n in 2..=10 {
            let r = cheeger_exact(&families::complete(n).unwrap(), DEFAULT_EXACT_CAP).unwrap();
            assert_eq!(r.h, n.div_ceil(2) as f64);
        }
        let r = cheeger_exact(&families::cycle(10).unwrap(), DEFAULT_EXACT_CAP).unwrap();
        assert!((r.h - 0.4).abs() < 1e-15);
        assert_eq!(
            cheeger_exact(&families::complete(2).unwrap(), DEFAULT_EXACT_CAP)
                .unwrap()
                .h,
            1.0
        );
    }

    #[test]
    fn matches_brute_force() {
        for g in [
            families::hypercube(3).unwrap(),
            families::slice(5, 2).unwrap(),
            families::dyck(4).unwrap(),
            families::tree(3, 2).unwrap().graph,
            families::middle_slice_adjacent(2).unwrap(),
            Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap(),
        ] {
            let r = cheeger_exact(&g, DEFAULT_EXACT_CAP).unwrap();
            let (b, s) = brute_force(&g);
            assert_eq!(r.boundary * s, b * r.argmin_set.len(), "{:?}", g.name());
            assert!(2 * r.argmin_set.len() <= g.n());
            assert_eq!(r.boundary, boundary_size(&g, &r.argmin_set).unwrap());
        }
    }

    #[test]
    fn random_subsets_never_beat_exact() {
        let g = families::slice(6, 3).unwrap();
        let r = cheeger_exact(&g, DEFAULT_EXACT_CAP).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..10_000 {
            let size = rng.gen_range(1..=g.n() / 2);
            let mut set: Vec<usize> = (0..g.n()).collect();
            for i in 0..size {
                let j = rng.gen_range(i..g.n());
                set.swap(i, j);
            }
            set.truncate(size);
            let ratio = boundary_size(&g, &set).unwrap() as f64 / size as f64;
            assert!(ratio >= r.h - 1e-15);
        }
    }

    #[test]
    fn over_cap() {
        let g = families::cycle(23).unwrap();
        assert_eq!(
            cheeger_exact(&g, DEFAULT_EXACT_CAP).unwrap_err(),
            Error::OverCap { n: 23, cap: 22 }
        );
    }

    #[test]
    fn sweep_is_an_upper_bound() {
        for k in 3..=10 {
            let g = families::cycle(2 * k).unwrap();
            let s = cheeger_sweep(&g).unwrap();
            assert!((s.h - 2.0 / k as f64).abs() < 1e-12);
        }
        for g in [
            families::hypercube(3).unwrap(),
            families::hypercube(4).unwrap(),
            families::complete(7).unwrap(),
            families::slice(6, 3).unwrap(),
            families::sn_special(3).unwrap(),
            families::dyck(4).unwrap(),
        ] {
            let e = cheeger_exact(&g, DEFAULT_EXACT_CAP).unwrap();
            let s = cheeger_sweep(&g).unwrap();
            assert!(s.h >= e.h - 1e-12);
            assert!(2 * s.argmin_set.len() <= g.n());
        }
    }

    #[test]
    fn subset_walk_counts() {
        let g = families::cycle(5).unwrap();
        let mut seen = 0;
        for_each_subset(&g, |mask, size, boundary| {
            let set = mask_to_set(mask, 5);
            assert_eq!(set.len(), size);
            assert_eq!(boundary_size(&g, &set).unwrap(), boundary);
            seen += 1;
        })
        .unwrap();
        assert_eq!(seen, 32);
    }
}
