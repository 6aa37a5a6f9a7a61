//! Argument parsing and command dispatch.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use dlab_core::audit::{audit, Theorem};
use dlab_core::choosability::{choosability_exact, is_k_choosable, Choosability};
use dlab_core::embedding::{euler_characteristic, trace_faces};
use dlab_core::generate::{generate, Family};
use dlab_core::labeller::constructive_labeller;
use dlab_core::rational::{approx, render_wide};
use dlab_core::search::{find_list_labelling, lambda_exact};
use dlab_core::threshold::{threshold, Threshold};
use dlab_core::{Budget, Error};

use crate::error::{CliError, CliResult};
use crate::hunt::{entry_json, hunt};
use crate::io::{labelling_json, lists_json, parse_graph, parse_lists, write_graph_json, write_graph_text, GraphFile};
use crate::lists::adversarial_lists;
use crate::report::{audit_payload, trace_json, Report, Status};

#[derive(Debug, Parser)]
#[command(name = "dlab", version, about = "Solvers and audits for (d,1)-total labellings")]
pub struct Cli {
    /// Search budget in nodes, per solver call.
    #[arg(long, global = true, default_value_t = Budget::DEFAULT_LIMIT)]
    pub budget: u64,
    /// Seed for generators and random lists.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    Thm13,
    Thm14,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact λ and an optimal labelling.
    Solve {
        /// Graph file; standard input when absent or "-".
        input: Option<PathBuf>,
        #[arg(long)]
        d: u32,
    },
    /// A labelling from the given lists, or "infeasible".
    ListSolve {
        input: Option<PathBuf>,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        lists: PathBuf,
    },
    /// k-choosability, or the exact choosability number without --k.
    Choosable {
        input: Option<PathBuf>,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Run the inductive labeller; lists default to random ones of size M + 2d.
    Construct {
        input: Option<PathBuf>,
        #[arg(long)]
        d: u32,
        #[arg(long = "M")]
        m: usize,
        #[arg(long)]
        lists: Option<PathBuf>,
        #[arg(long)]
        trace: bool,
    },
    /// Show that an embedded graph is not a minimal counterexample.
    Audit {
        input: Option<PathBuf>,
        #[arg(long)]
        d: u32,
        #[arg(long = "M")]
        m: usize,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        /// Include the final charge ledger and case checks.
        #[arg(long)]
        ledger: bool,
    },
    /// Faces and Euler characteristic of an embedded graph.
    Faces { input: Option<PathBuf> },
    /// Print a generated embedded graph.
    Gen {
        family: String,
        params: Vec<u64>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Text)]
        format: GraphFormat,
    },
    /// The degree cap required for Euler characteristic epsilon ≤ 0.
    Threshold {
        #[arg(long)]
        d: u32,
        #[arg(long, allow_negative_numbers = true)]
        epsilon: i64,
    },
    /// λ and choosability of every connected graph up to a size.
    Hunt {
        max_vertices: usize,
        #[arg(long)]
        d: u32,
    },
}

/// What a command produces: a JSON report, or a graph file for `gen`.
#[derive(Debug, Clone)]
pub enum Output {
    Report(Report),
    Graph { text: String, summary: String },
}

fn read_input(path: Option<&Path>, stdin: &mut dyn Read) -> CliResult<GraphFile> {
    let text = match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            s
        }
    };
    parse_graph(&text)
}

fn need_d(d: u32, min: u32) -> CliResult<()> {
    if d < min {
        return Err(CliError::Usage(format!("--d must be at least {min}")));
    }
    Ok(())
}

pub fn run(cli: &Cli, stdin: &mut dyn Read) -> CliResult<Output> {
    let mut budget = Budget::new(cli.budget);
    let report = match &cli.command {
        Command::Solve { input, d } => {
            need_d(*d, 1)?;
            let f = read_input(input.as_deref(), stdin)?;
            let (lambda, lab) = lambda_exact(&f.graph, *d, &mut budget)?;
            Report::new(Status::Ok, format!("lambda = {lambda}"))
                .with("lambda", json!(lambda))
                .with("labelling", labelling_json(&f.graph, &lab))
        }
        Command::ListSolve { input, d, lists } => {
            need_d(*d, 1)?;
            let f = read_input(input.as_deref(), stdin)?;
            let lists = parse_lists(&f.graph, &fs::read_to_string(lists)?)?;
            match find_list_labelling(&f.graph, *d, &lists, &mut budget)? {
                Some(lab) => Report::new(Status::Ok, "labelling found").with("labelling", labelling_json(&f.graph, &lab)),
                None => Report::new(Status::Infeasible, "no labelling from these lists"),
            }
        }
        Command::Choosable { input, d, k } => {
            need_d(*d, 1)?;
            let f = read_input(input.as_deref(), stdin)?;
            match k {
                Some(k) => match is_k_choosable(&f.graph, *d, *k, &mut budget)? {
                    Choosability::Choosable => Report::new(Status::Ok, format!("{k}-choosable"))
                        .with("k", json!(k))
                        .with("choosable", json!(true)),
                    Choosability::NotChoosable(w) => Report::new(Status::Ok, format!("not {k}-choosable"))
                        .with("k", json!(k))
                        .with("choosable", json!(false))
                        .with("witness", lists_json(&f.graph, &w)),
                },
                None => {
                    let c = choosability_exact(&f.graph, *d, &mut budget)?;
                    Report::new(Status::Ok, format!("choosability = {c}")).with("choosability", json!(c))
                }
            }
        }
        Command::Construct { input, d, m, lists, trace } => {
            let f = read_input(input.as_deref(), stdin)?;
            let lists = match lists {
                Some(p) => parse_lists(&f.graph, &fs::read_to_string(p)?)?,
                None => adversarial_lists(&f.graph, *d, *m + 2 * *d as usize, cli.seed),
            };
            match constructive_labeller(&f.graph, f.rotation.as_ref(), *d, *m, &lists, &mut budget) {
                Ok(c) => {
                    let mut r = Report::new(Status::Ok, format!("labelled after {} reductions", c.trace.len()))
                        .with("labelling", labelling_json(&f.graph, &c.labelling));
                    if *trace {
                        r = r.with("trace", trace_json(&c.trace));
                    }
                    r
                }
                Err(failure) => {
                    let err = CliError::Core(failure.error.clone());
                    let mut r = Report::from_error(&err);
                    r.summary = failure.to_string();
                    if *trace {
                        r = r.with("trace", trace_json(&failure.trace));
                    }
                    r
                }
            }
        }
        Command::Audit { input, d, m, theorem, ledger } => {
            let f = read_input(input.as_deref(), stdin)?;
            let theorem = match theorem {
                TheoremArg::Thm13 => Theorem::Thm13,
                TheoremArg::Thm14 => Theorem::Thm14,
            };
            let v = audit(&f.graph, f.rotation()?, *d, *m, theorem)?;
            let mut r = Report::new(Status::Ok, v.outcome.to_string());
            r.payload = audit_payload(&f.graph, &v, *ledger);
            r
        }
        Command::Faces { input } => {
            let f = read_input(input.as_deref(), stdin)?;
            let rot = f.rotation()?;
            let faces = trace_faces(&f.graph, rot)?;
            let eps = euler_characteristic(&f.graph, rot)?;
            let list: Vec<Value> = faces
                .iter()
                .map(|face| json!({ "degree": face.degree(), "vertices": face.vertices().collect::<Vec<_>>() }))
                .collect();
            Report::new(Status::Ok, format!("{} faces, euler characteristic {eps}", faces.len()))
                .with("euler_characteristic", json!(eps))
                .with("faces", json!(list))
        }
        Command::Gen { family, params, format } => {
            let fam = Family::parse(family, params, cli.seed)?;
            let e = generate(&fam)?;
            let text = match format {
                GraphFormat::Text => write_graph_text(&e.graph, Some(&e.rotation)),
                GraphFormat::Json => write_graph_json(&e.graph, Some(&e.rotation)),
            };
            let summary = format!(
                "{family}: {} vertices, {} edges, max degree {}",
                e.graph.vertex_count(),
                e.graph.edge_count(),
                e.graph.max_degree()
            );
            return Ok(Output::Graph { text, summary });
        }
        Command::Threshold { d, epsilon } => match threshold(*d, *epsilon).map_err(|e| match e {
            Error::Precondition(m) => CliError::Usage(m),
            other => other.into(),
        })? {
            Threshold::Exact(v) => Report::new(Status::Ok, format!("threshold = {}", render_wide(&v)))
                .with("value", json!(render_wide(&v)))
                .with("exact", json!(true)),
            Threshold::Interval { lower, upper } => {
                Report::new(Status::Ok, format!("threshold ≈ {:.6}", approx(&upper)))
                    .with("value", json!(render_wide(&upper)))
                    .with("exact", json!(false))
                    .with("lower", json!(render_wide(&lower)))
                    .with("upper", json!(render_wide(&upper)))
                    .with("approx", json!(approx(&upper)))
            }
        },
        Command::Hunt { max_vertices, d } => {
            let entries = hunt(*max_vertices, *d, cli.budget)?;
            let gaps: Vec<Value> = entries.iter().filter(|e| e.gap().is_some_and(|g| g > 0)).map(entry_json).collect();
            let violations: Vec<Value> = entries.iter().filter(|e| e.violates_bound(*d)).map(entry_json).collect();
            let skipped = entries.iter().filter(|e| e.gap().is_none()).count();
            let summary = if violations.is_empty() {
                format!("{} graphs, {} with C > lambda + 1, {skipped} skipped, no bound violations", entries.len(), gaps.len())
            } else {
                format!("BOUND VIOLATED by {} graphs (C > Delta + 2d)", violations.len())
            };
            Report::new(Status::Ok, summary)
                .with("d", json!(d))
                .with("max_vertices", json!(max_vertices))
                .with("graphs", json!(entries.iter().map(entry_json).collect::<Vec<_>>()))
                .with("gaps", json!(gaps))
                .with("violations", json!(violations))
                .with("skipped", json!(skipped))
        }
    };
    Ok(Output::Report(report))
}

/// Parses `args`, runs the command, writes the report and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let start = Instant::now();
    let (stdout, stderr) = (io::stdout(), io::stderr());
    let (mut out, mut err) = (stdout.lock(), stderr.lock());
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = write!(out, "{e}");
            return 0;
        }
        Err(e) => {
            let _ = write!(err, "{e}");
            let r = Report::from_error(&CliError::Usage(e.kind().to_string()));
            let _ = writeln!(out, "{}", r.to_json_timed(start.elapsed()));
            return 2;
        }
    };
    let result = run(&cli, &mut io::stdin().lock());
    match result {
        Ok(Output::Graph { text, summary }) => {
            let _ = write!(out, "{text}");
            let _ = writeln!(err, "{summary}");
            0
        }
        Ok(Output::Report(r)) => emit(&mut out, &mut err, &r, start),
        Err(e) => emit(&mut out, &mut err, &Report::from_error(&e), start),
    }
}

fn emit(out: &mut dyn Write, err: &mut dyn Write, r: &Report, start: Instant) -> i32 {
    let _ = writeln!(out, "{}", r.to_json_timed(start.elapsed()));
    let _ = writeln!(err, "{}: {}", r.status.as_str(), r.summary);
    r.exit_code
}
