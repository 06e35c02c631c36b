//! `gamma2`: curvature, spectra, Cheeger constants and inequality checks for
//! finite graphs.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input, 3 resource cap.

mod input;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gamma2::curvature::{curvature, VertexSelection};
use gamma2::graph::{serialize_edge_list, serialize_json};
use gamma2::isoperimetry::{cheeger_exact, cheeger_sweep, logsobolev_estimate, sn_test_set, DEFAULT_EXACT_CAP};
use gamma2::spectral::{sparse_gap, spectrum};
use gamma2::verify::{run_all, Corpus};
use gamma2::Error;

use output::Out;

const DEFAULT_SEED: u64 = 7;
const DEFAULT_SPARSE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Parser)]
#[command(
    name = "gamma2",
    version,
    about = "Bakry-Emery curvature and isoperimetry of finite graphs"
)]
#[command(after_help = input::FAMILY_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "GAMMA2_THREADS")]
    threads: Option<usize>,
    /// Convergence tolerance for the sparse gap solver.
    #[arg(long, global = true)]
    tol: Option<f64>,
}

#[derive(Args)]
struct GraphArgs {
    /// Edge-list or JSON graph file.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Family name followed by its parameters.
    family: Vec<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a generated graph (json, csv edge rows, or text edge list).
    Generate {
        #[arg(required = true)]
        family: Vec<String>,
    },
    /// Per-vertex curvature, Ric and a minimising witness.
    Curvature {
        #[command(flatten)]
        graph: GraphArgs,
        /// Only vertices whose 2-ball is untruncated (tree, path-truncated).
        #[arg(long)]
        interior: bool,
    },
    /// Laplacian spectrum and spectral gap.
    Spectrum {
        #[command(flatten)]
        graph: GraphArgs,
        /// Gap only, by Lanczos iteration.
        #[arg(long)]
        sparse: bool,
    },
    /// Cheeger constant: exact enumeration (default), Fiedler sweep, or the
    /// cyclic-distance test set in S_n.
    Cheeger {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, conflicts_with_all = ["sweep", "testset"])]
        exact: bool,
        #[arg(long, conflicts_with = "testset")]
        sweep: bool,
        /// Symbol count n of the test set.
        #[arg(long, value_name = "N")]
        testset: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_EXACT_CAP)]
        cap_exact_cheeger: usize,
    },
    /// Multi-start upper estimate of the log-Sobolev constant.
    Logsobolev {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, default_value_t = 16)]
        trials: usize,
    },
    /// Run every inequality check over a corpus or a single graph.
    Verify {
        #[arg(long, default_value = "standard", conflicts_with = "input")]
        corpus: String,
        #[arg(long)]
        input: Option<PathBuf>,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::OverCap { .. } => 3,
        Error::EigenResidual { .. } | Error::FormConsistency(_) | Error::NoConvergence(_) => 1,
        _ => 2,
    }
}

fn load(graph: &GraphArgs) -> gamma2::Result<input::Loaded> {
    input::load(graph.input.as_deref(), &graph.family)
}

fn run(cli: &Cli) -> gamma2::Result<(String, bool)> {
    let out = Out::new(cli.format);
    match &cli.command {
        Command::Generate { family } => {
            let g = input::family(family)?.graph;
            let text = match cli.format {
                Format::Json => serialize_json(&g),
                Format::Text => serialize_edge_list(&g),
                Format::Csv => out.edges(&g),
            };
            Ok((text, true))
        }
        Command::Curvature { graph, interior } => {
            let loaded = load(graph)?;
            let selection = match (interior, &loaded.interior) {
                (false, _) => VertexSelection::All,
                (true, Some(v)) => VertexSelection::Only(v),
                (true, None) => {
                    return Err(Error::InvalidParameter(
                        "--interior needs a truncated family (tree, path-truncated)".into(),
                    ))
                }
            };
            Ok((out.curvature(&curvature(&loaded.graph, selection)?), true))
        }
        Command::Spectrum { graph, sparse } => {
            let g = load(graph)?.graph;
            if *sparse {
                let tol = cli.tol.unwrap_or(DEFAULT_SPARSE_TOL);
                Ok((out.sparse(&sparse_gap(&g, tol)?), true))
            } else {
                Ok((out.spectrum(&spectrum(&g)?), true))
            }
        }
        Command::Cheeger {
            graph,
            sweep,
            testset,
            cap_exact_cheeger,
            ..
        } => {
            if let Some(n) = testset {
                if graph.input.is_some() || !graph.family.is_empty() {
                    return Err(Error::InvalidParameter(
                        "--testset builds its own graph; drop the input".into(),
                    ));
                }
                return Ok((out.testset(&sn_test_set(*n)?), true));
            }
            let g = load(graph)?.graph;
            let report = if *sweep {
                cheeger_sweep(&g)?
            } else {
                cheeger_exact(&g, *cap_exact_cheeger)?
            };
            Ok((out.cheeger(&report, g.n()), true))
        }
        Command::Logsobolev { graph, trials } => {
            let g = load(graph)?.graph;
            Ok((out.logsobolev(&logsobolev_estimate(&g, *trials, cli.seed)?), true))
        }
        Command::Verify { corpus, input } => {
            let corpus = match input {
                Some(p) => Corpus::Graphs(vec![input::file(p)?.graph]),
                None => corpus.parse()?,
            };
            let report = run_all(&corpus, cli.seed)?;
            Ok((out.verification(&report), report.all_passed()))
        }
    }
}

fn write(out: Option<&Path>, text: &str) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(text.as_bytes())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if t == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .expect("thread pool");
    }
    match run(&cli) {
        Ok((text, ok)) => {
            if let Err(e) = write(cli.out.as_deref(), &text) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
