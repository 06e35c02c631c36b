//! Executable checks of the curvature, spectral and isoperimetric
//! inequalities on concrete graphs.
//!
//! Every check is written as `lhs ≥ rhs` and reports `slack = lhs − rhs`.

mod corpus;

pub use corpus::{standard_corpus, Corpus};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::curvature::{curvature, VertexSelection};
use crate::error::{Error, Result};
use crate::graph::{gamma_field, Graph};
use crate::isoperimetry::{cheeger_exact, for_each_subset, logsobolev_estimate, IsoperimetryReport, DEFAULT_EXACT_CAP};
use crate::spectral::{HeatKernel, HeatSemigroup};

pub const POINTWISE_TOL: f64 = 1e-8;
pub const SUBSET_TOL: f64 = 1e-9;
/// Curvature below this counts as negative for hypothesis gates.
pub const RIC_GATE: f64 = -1e-8;
/// Multiplier on the log-Sobolev estimate, which is an upper bound.
pub const RHO_SAFETY: f64 = 0.5;
pub const SUBSET_CAP: usize = 14;
pub const LSI_CAP: usize = 12;
pub const T_GRID: [f64; 5] = [0.01, 0.1, 0.5, 1.0, 2.0];
const FUNCTIONS_PER_GRAPH: usize = 5;
const LSI_TRIALS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "lowercase", tag = "kind", content = "value")]
pub enum Tolerance {
    Absolute(f64),
    /// Scaled by `max(|lhs|, |rhs|, 1)`.
    Relative(f64),
}

impl Tolerance {
    fn allows(self, lhs: f64, rhs: f64) -> bool {
        let slack = lhs - rhs;
        match self {
            Tolerance::Absolute(t) => slack >= -t,
            Tolerance::Relative(t) => slack >= -t * lhs.abs().max(rhs.abs()).max(1.0),
        }
    }

    fn scaled_slack(self, lhs: f64, rhs: f64) -> f64 {
        match self {
            Tolerance::Absolute(_) => lhs - rhs,
            Tolerance::Relative(_) => (lhs - rhs) / lhs.abs().max(rhs.abs()).max(1.0),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub instance: String,
    #[serde(serialize_with = "crate::report::ser_opt12")]
    pub lhs: Option<f64>,
    #[serde(serialize_with = "crate::report::ser_opt12")]
    pub rhs: Option<f64>,
    #[serde(serialize_with = "crate::report::ser_opt12")]
    pub slack: Option<f64>,
    pub tolerance: Tolerance,
    pub pass: bool,
    /// Advisory records are reported but never fail a run.
    pub required: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckRecord {
    fn measured(name: &str, instance: impl Into<String>, lhs: f64, rhs: f64, tolerance: Tolerance) -> Self {
        Self {
            name: name.to_owned(),
            instance: instance.into(),
            lhs: Some(lhs),
            rhs: Some(rhs),
            slack: Some(lhs - rhs),
            tolerance,
            pass: tolerance.allows(lhs, rhs),
            required: true,
            skipped: None,
            note: None,
        }
    }

    fn skip(name: &str, instance: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            name: name.to_owned(),
            instance: instance.into(),
            lhs: None,
            rhs: None,
            slack: None,
            tolerance: Tolerance::Absolute(0.0),
            pass: false,
            required: true,
            skipped: Some(reason.into()),
            note: None,
        }
    }

    fn advisory(mut self) -> Self {
        self.required = false;
        self
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_skipped(&self) -> bool {
        self.skipped.is_some()
    }

    /// A required, measured check outside its tolerance.
    pub fn failed(&self) -> bool {
        self.required && !self.is_skipped() && !self.pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record json")
    }
}

/// A graph together with the quantities most checks need.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub graph: Graph,
    pub ric: f64,
    /// `2 + T/2` with `T` the maximum number of triangles on an edge.
    pub ric_upper_bound: f64,
    pub lambda: f64,
    pub heat: HeatSemigroup,
    /// Exact Cheeger data when `n` is within the enumeration cap.
    pub cheeger: Option<IsoperimetryReport>,
}

impl Instance {
    pub fn new(graph: Graph) -> Result<Self> {
        Self::with_cap(graph, DEFAULT_EXACT_CAP)
    }

    pub fn with_cap(graph: Graph, cheeger_cap: usize) -> Result<Self> {
        let name = graph.name().unwrap_or("graph").to_owned();
        let report = curvature(&graph, VertexSelection::All)?;
        let heat = HeatSemigroup::new(&graph)?;
        let lambda = heat.spectrum().lambda;
        let cheeger = if graph.n() <= cheeger_cap {
            Some(cheeger_exact(&graph, cheeger_cap)?)
        } else {
            None
        };
        Ok(Self {
            name,
            ric: report.ric,
            ric_upper_bound: report.upper_bound,
            lambda,
            heat,
            cheeger,
            graph,
        })
    }

    /// Curvature used in the `min(√λ, λ/√(2|K|))` bounds and the time
    /// restrictions: non-negative curvature behaves as `K = 0`.
    pub fn k_eff(&self) -> f64 {
        self.ric.min(0.0)
    }

    /// Largest admissible heat time for the short-time estimates.
    pub fn max_time(&self) -> f64 {
        let k = self.k_eff();
        if k < 0.0 {
            1.0 / (2.0 * k.abs())
        } else {
            f64::INFINITY
        }
    }

    fn gate(&self, name: &str) -> Option<CheckRecord> {
        (self.ric < RIC_GATE).then(|| {
            CheckRecord::skip(
                name,
                &self.name,
                format!("hypothesis needs Ric >= 0, got {:.6}", self.ric),
            )
        })
    }

    fn over_cap(&self, name: &str) -> CheckRecord {
        CheckRecord::skip(
            name,
            &self.name,
            format!("n = {} over the exact Cheeger cap", self.graph.n()),
        )
    }
}

/// `c_K(t) = ∫_0^t 2 e^{2Ks} ds`.
pub fn c_k(k: f64, t: f64) -> f64 {
    if k == 0.0 {
        2.0 * t
    } else {
        (2.0 * k * t).exp_m1() / k
    }
}

/// `min(√λ, λ/√(2|K|))`, the second term present only for `K < 0`.
pub fn curvature_rate(lambda: f64, k: f64) -> f64 {
    let root = lambda.max(0.0).sqrt();
    if k < 0.0 {
        root.min(lambda / (2.0 * k.abs()).sqrt())
    } else {
        root
    }
}

/// Right side of the subset Buser inequality: `½ rate |A| (1 − |A|/n)`.
pub fn subset_buser_rhs(lambda: f64, k: f64, size: usize, n: usize) -> f64 {
    let a = size as f64;
    0.5 * curvature_rate(lambda, k) * a * (1.0 - a / n as f64)
}

/// Right side of the log-Sobolev isoperimetric inequality,
/// `(1/16) min(√ρ, ρ/√(2|K|)) |A| L` with `L = (log(n/|A|))^{1/2}` in proof
/// form and `L = log(n/|A|)` otherwise.
pub fn lsi_rhs(rho: f64, k: f64, size: usize, n: usize, proof_form: bool) -> f64 {
    let log = (n as f64 / size as f64).ln();
    let l = if proof_form { log.sqrt() } else { log };
    curvature_rate(rho, k) / 16.0 * size as f64 * l
}

/// `λ ≤ 16h²` for non-negatively curved graphs.
pub fn check_buser_global(inst: &Instance) -> CheckRecord {
    const NAME: &str = "buser_global";
    if let Some(r) = inst.gate(NAME) {
        return r;
    }
    match &inst.cheeger {
        Some(c) => CheckRecord::measured(
            NAME,
            &inst.name,
            16.0 * c.h * c.h,
            inst.lambda,
            Tolerance::Absolute(SUBSET_TOL),
        ),
        None => inst.over_cap(NAME),
    }
}

/// `h ≥ √λ / 4` for non-negatively curved graphs.
pub fn check_cheeger_floor(inst: &Instance) -> CheckRecord {
    const NAME: &str = "cheeger_floor";
    if let Some(r) = inst.gate(NAME) {
        return r;
    }
    match &inst.cheeger {
        Some(c) => CheckRecord::measured(
            NAME,
            &inst.name,
            c.h,
            inst.lambda.sqrt() / 4.0,
            Tolerance::Absolute(SUBSET_TOL),
        ),
        None => inst.over_cap(NAME),
    }
}

/// `λ ≥ Ric` for non-negatively curved graphs.
pub fn check_gap_theorem(inst: &Instance) -> CheckRecord {
    const NAME: &str = "gap_theorem";
    if let Some(r) = inst.gate(NAME) {
        return r;
    }
    CheckRecord::measured(
        NAME,
        &inst.name,
        inst.lambda,
        inst.ric,
        Tolerance::Absolute(POINTWISE_TOL),
    )
}

/// `Ric ≤ 2 + T/2`.
pub fn check_ric_upper(inst: &Instance) -> CheckRecord {
    CheckRecord::measured(
        "ric_upper",
        &inst.name,
        inst.ric_upper_bound,
        inst.ric,
        Tolerance::Absolute(POINTWISE_TOL),
    )
}

fn set_label(mask: u64, n: usize) -> String {
    let set: Vec<String> = (0..n).filter(|&v| mask >> v & 1 == 1).map(|v| v.to_string()).collect();
    format!("{{{}}}", set.join(","))
}

/// Worst subset for `|∂A| ≥ rhs(|A|)` over every `A` accepted by `keep`.
fn worst_subset(
    g: &Graph,
    keep: impl Fn(usize) -> bool,
    rhs: impl Fn(usize) -> f64,
    tol: Tolerance,
) -> Result<(u64, f64, f64, usize)> {
    let mut worst: Option<(f64, u64, f64, f64)> = None;
    let mut count = 0usize;
    for_each_subset(g, |mask, size, boundary| {
        if !keep(size) {
            return;
        }
        count += 1;
        let (l, r) = (boundary as f64, rhs(size));
        let s = tol.scaled_slack(l, r);
        if worst.is_none_or(|w| s < w.0) {
            worst = Some((s, mask, l, r));
        }
    })?;
    let (_, mask, l, r) = worst.ok_or_else(|| Error::InvalidParameter("no subsets to check".into()))?;
    Ok((mask, l, r, count))
}

/// `|∂A| ≥ ½ min(√λ, λ/√(2|K|)) |A|(1 − |A|/n)` over every `A ⊆ V`, with
/// `K` the computed curvature. Reports the worst subset.
pub fn check_subset_iso(inst: &Instance) -> Result<CheckRecord> {
    let n = inst.graph.n();
    if n > SUBSET_CAP {
        return Err(Error::OverCap { n, cap: SUBSET_CAP });
    }
    let (lambda, k) = (inst.lambda, inst.k_eff());
    let tol = Tolerance::Relative(SUBSET_TOL);
    let (mask, l, r, count) = worst_subset(&inst.graph, |_| true, |s| subset_buser_rhs(lambda, k, s, n), tol)?;
    Ok(CheckRecord::measured(
        "subset_iso",
        format!("{} A={}", inst.name, set_label(mask, n)),
        l,
        r,
        tol,
    )
    .with_note(format!("{count} subsets, K = {:.6}", inst.ric)))
}

/// Log-Sobolev isoperimetry over all `0 < |A| ≤ n/2` with `ρ = 0.5·rho_hat`.
/// The first record uses the square-root form and is required; the second
/// uses the plain logarithm and is advisory.
pub fn check_lsi_iso(inst: &Instance, rho_hat: f64) -> Result<[CheckRecord; 2]> {
    let n = inst.graph.n();
    if n > SUBSET_CAP {
        return Err(Error::OverCap { n, cap: SUBSET_CAP });
    }
    let rho = RHO_SAFETY * rho_hat;
    let k = inst.k_eff();
    let tol = Tolerance::Relative(SUBSET_TOL);
    let keep = |s: usize| s > 0 && 2 * s <= n;
    let note = format!("rho_hat = {rho_hat:.6}, safety factor {RHO_SAFETY}");
    let mut out = Vec::with_capacity(2);
    for (name, proof_form) in [("lsi_iso", true), ("lsi_iso_statement", false)] {
        let (mask, l, r, _) = worst_subset(&inst.graph, keep, |s| lsi_rhs(rho, k, s, n, proof_form), tol)?;
        let rec = CheckRecord::measured(name, format!("{} A={}", inst.name, set_label(mask, n)), l, r, tol)
            .with_note(note.clone());
        out.push(if proof_form { rec } else { rec.advisory() });
    }
    Ok(out.try_into().expect("two records"))
}

fn time_gate(inst: &Instance, t: f64) -> Result<()> {
    if t > inst.max_time() {
        return Err(Error::Hypothesis(format!(
            "t = {t} exceeds 1/(2|K|) = {}",
            inst.max_time()
        )));
    }
    Ok(())
}

fn instance_at(inst: &Instance, t: f64) -> String {
    format!("{} t={t}", inst.name)
}

/// `‖f − P_t f‖₁ ≤ 2√t ‖√Γ(f)‖₁`, for `t ≤ 1/(2|K|)` when `K < 0`.
pub fn check_gradient_lemma(inst: &Instance, pt: &HeatKernel, f: &[f64]) -> Result<CheckRecord> {
    let t = pt.t;
    time_gate(inst, t)?;
    inst.graph.check_len(f)?;
    let ptf = pt.apply(f);
    let lhs = 2.0
        * t.sqrt()
        * gamma_field(&inst.graph, f)?
            .iter()
            .map(|v| v.max(0.0).sqrt())
            .sum::<f64>();
    let rhs = f.iter().zip(&ptf).map(|(a, b)| (a - b).abs()).sum::<f64>();
    Ok(CheckRecord::measured(
        "gradient_lemma",
        instance_at(inst, t),
        lhs,
        rhs,
        Tolerance::Absolute(POINTWISE_TOL),
    ))
}

/// Worst vertex of a pointwise inequality `lhs[x] ≥ rhs[x]`.
fn pointwise(name: &str, instance: String, lhs: &[f64], rhs: &[f64]) -> CheckRecord {
    let x = (0..lhs.len())
        .min_by(|&a, &b| (lhs[a] - rhs[a]).total_cmp(&(lhs[b] - rhs[b])))
        .expect("non-empty");
    CheckRecord::measured(
        name,
        format!("{instance} x={x}"),
        lhs[x],
        rhs[x],
        Tolerance::Absolute(POINTWISE_TOL),
    )
}

/// `Γ(P_t f) ≤ e^{−2Kt} P_t Γ(f)` at every vertex.
pub fn check_step1(inst: &Instance, k: f64, pt: &HeatKernel, f: &[f64]) -> Result<CheckRecord> {
    let g = &inst.graph;
    g.check_len(f)?;
    let decay = (-2.0 * k * pt.t).exp();
    let lhs: Vec<f64> = pt.apply(&gamma_field(g, f)?).iter().map(|v| decay * v).collect();
    let rhs = gamma_field(g, &pt.apply(f))?;
    Ok(pointwise("step1", instance_at(inst, pt.t), &lhs, &rhs))
}

/// `P_t(f²) − (P_t f)² ≥ c_K(t) Γ(P_t f)` at every vertex.
pub fn check_variance_bound(inst: &Instance, k: f64, pt: &HeatKernel, f: &[f64]) -> Result<CheckRecord> {
    let g = &inst.graph;
    g.check_len(f)?;
    let ptf = pt.apply(f);
    let sq: Vec<f64> = f.iter().map(|a| a * a).collect();
    let lhs: Vec<f64> = pt.apply(&sq).iter().zip(&ptf).map(|(a, b)| a - b * b).collect();
    let c = c_k(k, pt.t);
    let rhs: Vec<f64> = gamma_field(g, &ptf)?.iter().map(|v| c * v).collect();
    Ok(pointwise("variance_bound", instance_at(inst, pt.t), &lhs, &rhs))
}

/// `max √Γ(P_t f) ≤ max|f| / √t` for `0 < t ≤ 1/(2|K|)`.
pub fn check_sup_gradient(inst: &Instance, pt: &HeatKernel, f: &[f64]) -> Result<CheckRecord> {
    let t = pt.t;
    if t <= 0.0 {
        return Err(Error::InvalidParameter("sup-gradient bound needs t > 0".into()));
    }
    time_gate(inst, t)?;
    inst.graph.check_len(f)?;
    let sup = f.iter().fold(0.0f64, |m, a| m.max(a.abs()));
    let grad = gamma_field(&inst.graph, &pt.apply(f))?
        .iter()
        .fold(0.0f64, |m, v| m.max(v.max(0.0).sqrt()));
    Ok(CheckRecord::measured(
        "sup_gradient",
        instance_at(inst, t),
        sup / t.sqrt(),
        grad,
        Tolerance::Absolute(POINTWISE_TOL),
    ))
}

/// Uniform values in `[−1, 1]`, reproducible from `(seed, stream)`.
pub fn random_function(n: usize, seed: u64, stream: u64) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    (0..n).map(|_| rng.gen_range(-1.0..=1.0)).collect()
}

/// The four heat-kernel checks at every time in `times` over the given
/// functions, one record per (check, time) holding the worst function.
pub fn heat_checks(inst: &Instance, fs: &[Vec<f64>], times: &[f64]) -> Result<Vec<CheckRecord>> {
    let mut out = Vec::new();
    let keep_worst = |acc: Option<CheckRecord>, r: CheckRecord| match acc {
        Some(a) if a.slack <= r.slack => Some(a),
        _ => Some(r),
    };
    for &t in times {
        let pt = inst.heat.kernel(t)?;
        let admissible = t <= inst.max_time();
        let (mut lemma, mut step, mut var, mut sup) = (None, None, None, None);
        for f in fs {
            step = keep_worst(step, check_step1(inst, inst.ric, &pt, f)?);
            var = keep_worst(var, check_variance_bound(inst, inst.ric, &pt, f)?);
            if admissible {
                lemma = keep_worst(lemma, check_gradient_lemma(inst, &pt, f)?);
                if t > 0.0 {
                    sup = keep_worst(sup, check_sup_gradient(inst, &pt, f)?);
                }
            }
        }
        for (name, rec) in [
            ("gradient_lemma", lemma),
            ("step1", step),
            ("variance_bound", var),
            ("sup_gradient", sup),
        ] {
            out.push(rec.unwrap_or_else(|| {
                CheckRecord::skip(
                    name,
                    instance_at(inst, t),
                    format!("t outside (0, 1/(2|K|)] = (0, {}]", inst.max_time()),
                )
            }));
        }
    }
    Ok(out)
}

/// Every check on one instance.
pub fn check_instance(inst: &Instance, seed: u64, index: u64) -> Result<Vec<CheckRecord>> {
    let n = inst.graph.n();
    let mut out = vec![
        check_ric_upper(inst),
        check_gap_theorem(inst),
        check_buser_global(inst),
        check_cheeger_floor(inst),
    ];
    if n <= SUBSET_CAP {
        out.push(check_subset_iso(inst)?);
    } else {
        out.push(CheckRecord::skip(
            "subset_iso",
            &inst.name,
            format!("n = {n} over the subset cap {SUBSET_CAP}"),
        ));
    }
    if n <= LSI_CAP {
        let est = logsobolev_estimate(&inst.graph, LSI_TRIALS, seed ^ index)?;
        out.extend(check_lsi_iso(inst, est.rho_hat)?);
    } else {
        out.push(CheckRecord::skip(
            "lsi_iso",
            &inst.name,
            format!("n = {n} over the log-Sobolev cap {LSI_CAP}"),
        ));
    }
    let fs: Vec<Vec<f64>> = (0..FUNCTIONS_PER_GRAPH as u64)
        .map(|i| random_function(n, seed, index << 16 | i))
        .collect();
    out.extend(heat_checks(inst, &fs, &T_GRID)?);
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// Advisory records outside tolerance; these do not fail the run.
    pub advisory_failed: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub corpus: String,
    pub seed: u64,
    pub records: Vec<CheckRecord>,
    pub summary: Summary,
}

impl VerificationReport {
    pub fn from_records(corpus: String, seed: u64, records: Vec<CheckRecord>) -> Self {
        let skipped = records.iter().filter(|r| r.is_skipped()).count();
        let failed = records.iter().filter(|r| r.failed()).count();
        let advisory_failed = records
            .iter()
            .filter(|r| !r.required && !r.is_skipped() && !r.pass)
            .count();
        let passed = records.iter().filter(|r| r.pass).count();
        let summary = Summary {
            total: records.len(),
            passed,
            failed,
            skipped,
            advisory_failed,
        };
        Self {
            corpus,
            seed,
            records,
            summary,
        }
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }

    /// One record per line followed by a summary object.
    pub fn to_json_lines(&self) -> String {
        let mut s = String::new();
        for r in &self.records {
            s.push_str(&r.to_json());
            s.push('\n');
        }
        let tail = serde_json::json!({ "corpus": self.corpus, "seed": self.seed, "summary": self.summary });
        s.push_str(&tail.to_string());
        s.push('\n');
        s
    }
}

/// Runs every check on every corpus graph. Instances are processed in
/// parallel; records keep corpus order.
pub fn run_all(corpus: &Corpus, seed: u64) -> Result<VerificationReport> {
    let graphs = corpus.graphs()?;
    let per: Vec<Vec<CheckRecord>> = graphs
        .into_par_iter()
        .enumerate()
        .map(|(i, g)| check_instance(&Instance::new(g)?, seed, i as u64))
        .collect::<Result<_>>()?;
    Ok(VerificationReport::from_records(
        corpus.describe(),
        seed,
        per.into_iter().flatten().collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn inst(g: Graph) -> Instance {
        Instance::new(g).unwrap()
    }

    #[test]
    fn c_k_values() {
        assert_eq!(c_k(0.0, 0.3), 0.6);
        assert!((c_k(1.0, 0.5) - (1f64.exp() - 1.0)).abs() < 1e-15);
        assert!((c_k(1e-300, 0.5) - 1.0).abs() < 1e-12);
        // c_K(t) ≥ t on the admissible range for negative K
        let k = -1.0;
        for i in 1..=50 {
            let t = i as f64 / 100.0;
            assert!(c_k(k, t) >= t);
        }
    }

    #[test]
    fn buser_examples() {
        let h4 = inst(families::hypercube(4).unwrap());
        let r = check_buser_global(&h4);
        assert_eq!((r.lhs, r.rhs), (Some(16.0), Some(h4.lambda)));
        assert!((h4.lambda - 2.0).abs() < 1e-10 && r.pass);

        let c12 = inst(families::cycle(12).unwrap());
        let r = check_buser_global(&c12);
        assert!((r.lhs.unwrap() - 16.0 / 9.0).abs() < 1e-12);
        assert!((r.rhs.unwrap() - 2.0 * (1.0 - (std::f64::consts::PI / 6.0).cos())).abs() < 1e-10);
        assert!(r.pass);
    }

    #[test]
    fn negative_curvature_skips_gated_checks() {
        let p = inst(families::tree(3, 2).unwrap().graph);
        assert!(p.ric < 0.0);
        for r in [check_buser_global(&p), check_cheeger_floor(&p), check_gap_theorem(&p)] {
            assert!(r.is_skipped() && !r.failed());
        }
    }

    #[test]
    fn subset_iso_whole_set_is_tight() {
        // A = V and A = ∅ give 0 ≥ 0, so the worst slack is at most zero
        let c8 = inst(families::cycle(8).unwrap());
        let r = check_subset_iso(&c8).unwrap();
        assert!(r.pass && r.slack.unwrap() <= 0.0);
        assert_eq!(subset_buser_rhs(c8.lambda, 0.0, 8, 8), 0.0);
        assert!(check_subset_iso(&inst(families::cycle(15).unwrap())).is_err());
    }

    #[test]
    fn lsi_half_set_uses_log_two() {
        let rhs = lsi_rhs(4.0, 0.0, 4, 8, true);
        assert!((rhs - 2.0 / 16.0 * 4.0 * 2f64.ln().sqrt()).abs() < 1e-15);
        let rhs = lsi_rhs(4.0, 0.0, 4, 8, false);
        assert!((rhs - 2.0 / 16.0 * 4.0 * 2f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn heat_checks_at_time_zero_are_equalities() {
        let h3 = inst(families::hypercube(3).unwrap());
        let pt = h3.heat.kernel(0.0).unwrap();
        let f = random_function(8, 1, 0);
        assert!(check_step1(&h3, h3.ric, &pt, &f).unwrap().slack.unwrap().abs() < 1e-12);
        assert!(check_variance_bound(&h3, h3.ric, &pt, &f).unwrap().slack.unwrap().abs() < 1e-12);
        let r = check_gradient_lemma(&h3, &pt, &f).unwrap();
        assert_eq!(r.lhs, Some(0.0));
        assert!(r.rhs.unwrap().abs() < 1e-12);
        assert!(check_sup_gradient(&h3, &pt, &f).is_err());
    }

    #[test]
    fn constant_function_gives_zero_sides() {
        let c7 = inst(families::cycle(7).unwrap());
        let pt = c7.heat.kernel(1.0).unwrap();
        let r = check_gradient_lemma(&c7, &pt, &[2.0; 7]).unwrap();
        assert_eq!(r.lhs, Some(0.0));
        assert!(r.rhs.unwrap() < 1e-12 && r.pass);
    }

    #[test]
    fn time_gate_for_negative_curvature() {
        let m = inst(families::middle_slice_adjacent(3).unwrap());
        assert!(m.ric < 0.0);
        let pt = m.heat.kernel(10.0).unwrap();
        let f = random_function(m.graph.n(), 3, 0);
        assert!(matches!(check_gradient_lemma(&m, &pt, &f), Err(Error::Hypothesis(_))));
        let recs = heat_checks(&m, &[f], &[10.0]).unwrap();
        assert!(recs.iter().any(|r| r.name == "gradient_lemma" && r.is_skipped()));
        assert!(recs.iter().any(|r| r.name == "step1" && !r.is_skipped()));
    }

    #[test]
    fn report_is_deterministic() {
        let corpus = Corpus::Graphs(vec![families::cycle(6).unwrap(), families::complete(4).unwrap()]);
        let a = run_all(&corpus, 9).unwrap();
        let b = run_all(&corpus, 9).unwrap();
        assert_eq!(a.to_json_lines(), b.to_json_lines());
        assert!(a.all_passed(), "{}", a.to_json_lines());
        assert!(a.to_json_lines().lines().last().unwrap().contains("\"summary\""));
    }
}
