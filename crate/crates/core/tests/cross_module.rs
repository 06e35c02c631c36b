use gamma2::curvature::{assemble_gamma2_form, curvature, local_curvature, VertexSelection};
use gamma2::families;
use gamma2::graph::{ball2, gamma, gamma2, parse_json, serialize_json};
use gamma2::isoperimetry::{cheeger_exact, cheeger_sweep, sn_test_set, DEFAULT_EXACT_CAP};
use gamma2::verify::standard_corpus;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn definition_matches_assembled_form_on_corpus() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for g in standard_corpus().unwrap() {
        for x in [0, g.n() / 2, g.n() - 1] {
            let ball = ball2(&g, x).unwrap();
            let form = assemble_gamma2_form(&ball);
            let coords = ball.coords();
            for _ in 0..20 {
                let local: Vec<f64> = (0..coords.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
                let mut f = vec![0.0; g.n()];
                for (&v, &a) in coords.iter().zip(&local) {
                    f[v] = a;
                }
                // the form represents 2Γ₂ with f(x) pinned at zero
                let def = gamma2(&g, &f, x).unwrap();
                assert!((2.0 * def - form.value(&local)).abs() < 1e-10, "{:?} x={x}", g.name());
            }
        }
    }
}

#[test]
fn witness_attains_curvature_on_corpus() {
    for g in standard_corpus().unwrap() {
        let r = curvature(&g, VertexSelection::All).unwrap();
        let w = local_curvature(&g, r.witness.vertex).unwrap();
        let f = w.witness_function(g.n());
        let x = w.vertex;
        assert!((gamma(&g, &f, &f, x).unwrap() - 1.0).abs() < 1e-9);
        assert!((gamma2(&g, &f, x).unwrap() - r.ric).abs() < 1e-8, "{:?}", g.name());
    }
}

/// Signed area between a balanced path and the alternating one.
fn area_function(n: usize) -> (usize, Vec<f64>) {
    let seqs = families::balanced_sequences(n);
    let alt: Vec<i8> = (0..2 * n).map(|i| if i % 2 == 0 { 1 } else { -1 }).collect();
    let x = seqs.iter().position(|s| *s == alt).unwrap();
    let prefix = |s: &[i8]| -> Vec<i64> {
        s.iter()
            .scan(0i64, |acc, &b| {
                *acc += b as i64;
                Some(*acc)
            })
            .collect()
    };
    let base = prefix(&alt);
    let f = seqs
        .iter()
        .map(|s| 0.5 * prefix(s).iter().zip(&base).map(|(a, b)| (a - b) as f64).sum::<f64>())
        .collect();
    (x, f)
}

#[test]
fn middle_slice_area_witness_tends_to_minus_one() {
    let mut prev = f64::INFINITY;
    for n in 2..=6 {
        let g = families::middle_slice_adjacent(n).unwrap();
        let (x, f) = area_function(n);
        let ratio = gamma2(&g, &f, x).unwrap() / gamma(&g, &f, &f, x).unwrap();
        let kappa = local_curvature(&g, x).unwrap().kappa;
        assert!(ratio >= kappa - 1e-9);
        assert!(ratio > -1.0 && ratio < prev, "n={n}: {ratio}");
        prev = ratio;
    }
    assert!(prev < -0.5);
}

#[test]
fn sweep_never_beats_exact_on_corpus() {
    for g in standard_corpus()
        .unwrap()
        .into_iter()
        .filter(|g| g.n() <= DEFAULT_EXACT_CAP)
    {
        let e = cheeger_exact(&g, DEFAULT_EXACT_CAP).unwrap();
        let s = cheeger_sweep(&g).unwrap();
        assert!(s.h >= e.h - 1e-12, "{:?}", g.name());
    }
}

#[test]
fn test_set_fraction_and_boundary_count() {
    // |∂A| = 4 (n − 2)!: the transposition moves φ across the threshold only
    // when one of φ(0), φ(1) is 0 or 1 and the other sits at the cut distance
    for n in 4..=7 {
        let t = sn_test_set(n).unwrap();
        let small: usize = (1..=n - 2).product();
        assert_eq!(t.report.boundary, 4 * small, "n={n}");
        let frac = t.set_size as f64 / t.group_order as f64;
        assert!((0.3..0.7).contains(&frac));
    }
}

#[test]
fn s3_transpositions_is_k33() {
    let g = families::perm_cayley(&gamma2::families::PermCayleySpec::all_transpositions(3)).unwrap();
    assert_eq!((g.n(), g.edge_count()), (6, 9));
    let (labels, _) = g.components();
    assert!(labels.iter().all(|&l| l == 0));
    // bipartite by parity and complete between the parts
    let (_, elements) =
        families::perm_cayley_labeled(&gamma2::families::PermCayleySpec::all_transpositions(3)).unwrap();
    let parity = |p: &[usize]| {
        (0..3)
            .flat_map(|i| (i + 1..3).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count()
            % 2
    };
    for u in 0..6 {
        for v in 0..6 {
            assert_eq!(g.has_edge(u, v), parity(&elements[u]) != parity(&elements[v]));
        }
    }
}

#[test]
fn json_round_trip_keeps_curvature() {
    let g = families::petersen();
    let h = parse_json(&serialize_json(&g)).unwrap();
    assert_eq!(g.edges().collect::<Vec<_>>(), h.edges().collect::<Vec<_>>());
    assert_eq!(h.name(), Some("petersen"));
    assert_eq!(
        curvature(&g, VertexSelection::All).unwrap().to_json(),
        curvature(&h, VertexSelection::All).unwrap().to_json()
    );
}
