use gamma2::curvature::CurvatureReport;
use gamma2::isoperimetry::{IsoperimetryReport, LogSobolevEstimate, SnTestSet};
use gamma2::report::round12;
use gamma2::spectral::{SparseGap, SpectralReport};
use gamma2::verify::VerificationReport;
use gamma2::Graph;
use serde_json::json;

use crate::Format;

pub struct Out {
    format: Format,
}

fn csv_rows<I, R>(header: &[&str], rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator<Item = String>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("csv header");
    for r in rows {
        w.write_record(r).expect("csv row");
    }
    String::from_utf8(w.into_inner().expect("csv flush")).expect("utf8")
}

fn num(v: f64) -> String {
    round12(v).to_string()
}

fn line(s: String) -> String {
    s + "\n"
}

impl Out {
    pub fn new(format: Format) -> Self {
        Self { format }
    }

    pub fn edges(&self, g: &Graph) -> String {
        csv_rows(&["u", "v"], g.edges().map(|(u, v)| [u.to_string(), v.to_string()]))
    }

    pub fn curvature(&self, r: &CurvatureReport) -> String {
        match self.format {
            Format::Json => line(r.to_json()),
            Format::Csv => csv_rows(&["vertex", "kappa"], r.iter().map(|(v, k)| [v.to_string(), num(k)])),
            Format::Text => {
                let mut s = format!(
                    "graph: {}\nric: {}\nupper bound 2+T/2: {}\nminimising vertex: {}\n",
                    r.name.as_deref().unwrap_or("-"),
                    num(r.ric),
                    num(r.upper_bound),
                    r.witness.vertex
                );
                for (v, k) in r.iter() {
                    s += &format!("  kappa({v}) = {}\n", num(k));
                }
                s
            }
        }
    }

    pub fn spectrum(&self, r: &SpectralReport) -> String {
        match self.format {
            Format::Json => line(r.to_json()),
            Format::Csv => csv_rows(
                &["index", "eigenvalue"],
                r.eigenvalues.iter().enumerate().map(|(i, &e)| [i.to_string(), num(e)]),
            ),
            Format::Text => format!(
                "lambda: {}\ncomponents: {}\nvertices: {}\n",
                num(r.lambda),
                r.zero_multiplicity,
                r.eigenvalues.len()
            ),
        }
    }

    pub fn sparse(&self, r: &SparseGap) -> String {
        match self.format {
            Format::Json => line(serde_json::to_string(r).expect("json")),
            Format::Csv => csv_rows(
                &["lambda", "residual", "steps"],
                [[num(r.lambda), num(r.residual), r.steps.to_string()]],
            ),
            Format::Text => format!(
                "lambda: {}\nresidual: {}\nsteps: {}\n",
                num(r.lambda),
                num(r.residual),
                r.steps
            ),
        }
    }

    pub fn cheeger(&self, r: &IsoperimetryReport, n: usize) -> String {
        match self.format {
            Format::Json => line(r.to_json()),
            Format::Csv => {
                let mut inside = vec![false; n];
                r.argmin_set.iter().for_each(|&v| inside[v] = true);
                csv_rows(
                    &["vertex", "in_set"],
                    inside.iter().enumerate().map(|(v, b)| [v.to_string(), b.to_string()]),
                )
            }
            Format::Text => format!(
                "h: {}\nboundary: {}\nset size: {}\nmethod: {}\nset: {:?}\n",
                num(r.h),
                r.boundary,
                r.argmin_set.len(),
                serde_json::to_value(r.method)
                    .expect("method")
                    .as_str()
                    .unwrap_or_default(),
                r.argmin_set
            ),
        }
    }

    pub fn testset(&self, t: &SnTestSet) -> String {
        let n2 = t.report.h * (t.n * t.n) as f64;
        match self.format {
            Format::Json => {
                let mut v = serde_json::to_value(&t.report).expect("json");
                let obj = v.as_object_mut().expect("object");
                obj.insert("n".into(), json!(t.n));
                obj.insert("set_size".into(), json!(t.set_size));
                obj.insert("group_order".into(), json!(t.group_order));
                obj.insert("ratio_times_n2".into(), json!(round12(n2)));
                obj.insert(
                    "boundary_only_transposition_edges".into(),
                    json!(t.boundary_only_transposition_edges),
                );
                line(v.to_string())
            }
            Format::Csv => csv_rows(
                &["n", "set_size", "group_order", "boundary", "ratio", "ratio_times_n2"],
                [[
                    t.n.to_string(),
                    t.set_size.to_string(),
                    t.group_order.to_string(),
                    t.report.boundary.to_string(),
                    num(t.report.h),
                    num(n2),
                ]],
            ),
            Format::Text => format!(
                "n: {}\n|A|: {} of {}\nboundary: {}\nratio (smaller side): {}\nratio * n^2: {}\n",
                t.n,
                t.set_size,
                t.group_order,
                t.report.boundary,
                num(t.report.h),
                num(n2)
            ),
        }
    }

    pub fn logsobolev(&self, e: &LogSobolevEstimate) -> String {
        match self.format {
            Format::Json => line(serde_json::to_string(e).expect("json")),
            Format::Csv => csv_rows(
                &["vertex", "witness"],
                e.best_witness.iter().enumerate().map(|(v, &f)| [v.to_string(), num(f)]),
            ),
            Format::Text => format!(
                "rho_hat: {}\ntrials: {}\nconvention: {}\n",
                num(e.rho_hat),
                e.trials,
                e.convention
            ),
        }
    }

    pub fn verification(&self, r: &VerificationReport) -> String {
        let opt = |v: Option<f64>| v.map(num).unwrap_or_default();
        match self.format {
            Format::Json => r.to_json_lines(),
            Format::Csv => csv_rows(
                &["name", "instance", "lhs", "rhs", "slack", "pass", "required", "skipped"],
                r.records.iter().map(|c| {
                    [
                        c.name.clone(),
                        c.instance.clone(),
                        opt(c.lhs),
                        opt(c.rhs),
                        opt(c.slack),
                        c.pass.to_string(),
                        c.required.to_string(),
                        c.skipped.clone().unwrap_or_default(),
                    ]
                }),
            ),
            Format::Text => {
                let s = &r.summary;
                let mut out = format!(
                    "corpus: {} (seed {})\nchecks: {}  passed: {}  failed: {}  skipped: {}  advisory failures: {}\n",
                    r.corpus, r.seed, s.total, s.passed, s.failed, s.skipped, s.advisory_failed
                );
                for c in r.records.iter().filter(|c| c.failed()) {
                    out += &format!(
                        "FAIL {} on {}: lhs {} rhs {} slack {}\n",
                        c.name,
                        c.instance,
                        opt(c.lhs),
                        opt(c.rhs),
                        opt(c.slack)
                    );
                }
                out
            }
        }
    }
}
