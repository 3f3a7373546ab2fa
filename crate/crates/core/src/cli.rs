//! The `fca` command line. Data goes to `out`, diagnostics to `err`.
//!
//! Exit codes: 0 success, 1 a `refute`/`fuzz` run found a non-SOUND
//! verdict, 2 bad usage or bad input.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::builtin::builtin_case;
use crate::context::{FormalConcept, FormalContext};
use crate::cxt::{parse_cxt, write_cxt};
use crate::error::Error;
use crate::graph::PreWeightedGraph;
use crate::lattice::{enumerate_bruteforce, enumerate_lectic, partition_fst, ConceptSet};
use crate::reduction::{clarify, classify_pawlak, reduce, run_pipeline, PawlakClass};
use crate::refute::{
    check_alg1, check_alg2, check_alg3, check_all, fuzz, shrink, text_summary, FuzzConfig,
    RefutationReport, Verdict,
};
use crate::replay::{replay_alg1, replay_alg2, replay_alg3, LabeledPair, RemovalMode};

#[derive(Debug, Parser)]
#[command(name = "fca", about = "Formal concept analysis toolkit", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Algo {
    Brute,
    Lectic,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    Drop,
    Keep,
}

impl From<Mode> for RemovalMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Drop => RemovalMode::DropAttribute,
            Mode::Keep => RemovalMode::KeepAttribute,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Builtin {
    Cex1,
    Cex2,
    Cex3,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List all formal concepts.
    Concepts {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "lectic")]
        algo: Algo,
        #[arg(long)]
        json: bool,
    },
    /// Split the core concept set around a pivot attribute.
    Partition {
        file: PathBuf,
        #[arg(long)]
        attr: String,
    },
    /// Remove duplicate columns; prints the clarified context.
    Clarify { file: PathBuf },
    /// Remove reducible attributes from a clarified context.
    Reduce { file: PathBuf },
    /// Run the three reduction phases and report every removal.
    Pipeline { file: PathBuf },
    /// Classify attributes as absolutely necessary, relatively necessary or
    /// absolutely unnecessary.
    Classify { file: PathBuf },
    /// Print the pre-weighted relevant graph.
    Graph {
        file: PathBuf,
        #[arg(long)]
        dot: bool,
    },
    /// Replay one enumeration fragment step by step.
    Replay {
        file: PathBuf,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=3))]
        alg: u8,
        #[arg(long)]
        attr: String,
        /// Required for --alg 3.
        #[arg(long, value_enum)]
        mode: Option<Mode>,
        /// Print the line-oriented trace instead of JSON.
        #[arg(long)]
        trace: bool,
    },
    /// Judge the replays against the oracle.
    Refute {
        #[arg(long, value_enum, conflicts_with_all = ["file", "attr"], required_unless_present = "file")]
        builtin: Option<Builtin>,
        #[arg(long, requires = "attr")]
        file: Option<PathBuf>,
        #[arg(long, requires = "file")]
        attr: Option<String>,
        /// One summary line per report instead of JSON.
        #[arg(long)]
        summary: bool,
    },
    /// Search random contexts for failing replays.
    Fuzz {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        iters: usize,
        #[arg(long, default_value_t = 8)]
        max_objects: usize,
        #[arg(long, default_value_t = 6)]
        max_attrs: usize,
        #[arg(long, default_value_t = 0.4)]
        density: f64,
        /// Give every empty row and column one cross.
        #[arg(long)]
        require_nonempty: bool,
        /// Shrink every finding to a locally minimal context.
        #[arg(long)]
        shrink: bool,
        #[arg(long)]
        summary: bool,
    },
}

/// `Input` maps to exit code 2. `Closed` is a reader that went away
/// (`fca ... | head`) and is not reported.
#[derive(Debug)]
enum Failure {
    Input(String),
    Closed,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        match e.kind() {
            std::io::ErrorKind::BrokenPipe => Failure::Closed,
            _ => Failure::Input(e.to_string()),
        }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{e}");
                    2
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure::Closed) => 0,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn load(path: &Path) -> std::result::Result<FormalContext, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    parse_cxt(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn json(out: &mut dyn Write, value: &impl Serialize) -> std::result::Result<(), Failure> {
    let text = serde_json::to_string_pretty(value).expect("report types serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn labeled(ctx: &FormalContext, c: &FormalConcept) -> LabeledPair {
    LabeledPair {
        extent: ctx.object_labels(&c.extent),
        intent: ctx.attribute_labels(&c.intent),
    }
}

fn labeled_set(ctx: &FormalContext, set: &ConceptSet) -> Vec<LabeledPair> {
    set.iter().map(|c| labeled(ctx, c)).collect()
}

#[derive(Serialize)]
struct PartitionJson {
    pivot: String,
    #[serde(rename = "F")]
    f: Vec<LabeledPair>,
    #[serde(rename = "S")]
    s: Vec<LabeledPair>,
    #[serde(rename = "T")]
    t: Vec<LabeledPair>,
}

#[derive(Serialize)]
struct ClassJson {
    attribute: String,
    class: PawlakClass,
}

#[derive(Serialize)]
struct VertexJson {
    attribute: String,
    pre_weight: Vec<String>,
}

#[derive(Serialize)]
struct GraphJson {
    vertices: Vec<VertexJson>,
    arcs: Vec<[String; 2]>,
    bi_arcs: Vec<[String; 2]>,
}

#[derive(Serialize)]
struct FindingJson {
    iteration: usize,
    context: String,
    report: RefutationReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    shrunk: Option<ShrunkJson>,
}

#[derive(Serialize)]
struct ShrunkJson {
    context: String,
    report: RefutationReport,
}

fn dispatch(command: Command, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Concepts {
            file,
            algo,
            json: as_json,
        } => {
            let ctx = load(&file)?;
            let all = match algo {
                Algo::Brute => enumerate_bruteforce(&ctx)?,
                Algo::Lectic => enumerate_lectic(&ctx),
            };
            if as_json {
                json(out, &labeled_set(&ctx, &all))?;
            } else {
                for c in &all {
                    writeln!(out, "{}", labeled(&ctx, c))?;
                }
            }
            Ok(0)
        }
        Command::Partition { file, attr } => {
            let ctx = load(&file)?;
            let pivot = ctx.attribute_index(&attr)?;
            let p = partition_fst(&ctx, pivot);
            json(
                out,
                &PartitionJson {
                    pivot: attr,
                    f: labeled_set(&ctx, &p.f),
                    s: labeled_set(&ctx, &p.s),
                    t: labeled_set(&ctx, &p.t),
                },
            )?;
            Ok(0)
        }
        Command::Clarify { file } => {
            let ctx = load(&file)?;
            write!(out, "{}", write_cxt(&clarify(&ctx).context))?;
            Ok(0)
        }
        Command::Reduce { file } => {
            let ctx = load(&file)?;
            write!(out, "{}", write_cxt(&reduce(&ctx)?.context))?;
            Ok(0)
        }
        Command::Pipeline { file } => {
            let ctx = load(&file)?;
            json(out, &run_pipeline(&ctx)?.report())?;
            Ok(0)
        }
        Command::Classify { file } => {
            let ctx = load(&file)?;
            let classes: Vec<ClassJson> = classify_pawlak(&ctx)
                .into_iter()
                .enumerate()
                .map(|(a, class)| ClassJson {
                    attribute: ctx.attributes()[a].clone(),
                    class,
                })
                .collect();
            json(out, &classes)?;
            Ok(0)
        }
        Command::Graph { file, dot } => {
            let ctx = load(&file)?;
            let g = PreWeightedGraph::build(&ctx);
            if dot {
                write!(out, "{}", g.to_dot())?;
            } else {
                let name = |a: usize| g.label(a).to_string();
                json(
                    out,
                    &GraphJson {
                        vertices: (0..g.num_vertices())
                            .map(|a| VertexJson {
                                attribute: name(a),
                                pre_weight: ctx.object_labels(g.pre_weight(a)),
                            })
                            .collect(),
                        arcs: g
                            .arcs()
                            .into_iter()
                            .map(|(y, x)| [name(y), name(x)])
                            .collect(),
                        bi_arcs: g
                            .bi_arcs()
                            .into_iter()
                            .map(|(x, y)| [name(x), name(y)])
                            .collect(),
                    },
                )?;
            }
            Ok(0)
        }
        Command::Replay {
            file,
            alg,
            attr,
            mode,
            trace,
        } => {
            let ctx = load(&file)?;
            let pivot = ctx.attribute_index(&attr)?;
            let g = PreWeightedGraph::build(&ctx);
            let outcome = match (alg, mode) {
                (1, None) => replay_alg1(&g, pivot)?,
                (2, None) => replay_alg2(&g, pivot)?,
                (3, Some(m)) => replay_alg3(&g, pivot, m.into())?,
                (3, None) => {
                    return Err(Failure::Input(
                        "--alg 3 needs --mode drop or --mode keep".into(),
                    ))
                }
                (_, Some(_)) => {
                    return Err(Failure::Input("--mode only applies to --alg 3".into()))
                }
                _ => unreachable!("clap restricts --alg to 1..=3"),
            };
            if trace {
                write!(out, "{}", outcome.trace.to_text())?;
            } else {
                json(out, &outcome.report(&g))?;
            }
            Ok(0)
        }
        Command::Refute {
            builtin,
            file,
            attr,
            summary,
        } => {
            let (name, reports) = match (builtin, file, attr) {
                (Some(b), _, _) => {
                    let name = match b {
                        Builtin::Cex1 => "cex1",
                        Builtin::Cex2 => "cex2",
                        Builtin::Cex3 => "cex3",
                    };
                    let case = builtin_case(name).expect("builtin names are fixed");
                    let (ctx, pivot) = (&case.context, case.pivot);
                    let reports = match b {
                        Builtin::Cex1 => vec![check_alg1(ctx, pivot)?],
                        Builtin::Cex2 => vec![check_alg2(ctx, pivot)?],
                        Builtin::Cex3 => vec![
                            check_alg3(ctx, pivot, RemovalMode::DropAttribute)?,
                            check_alg3(ctx, pivot, RemovalMode::KeepAttribute)?,
                        ],
                    };
                    (name.to_string(), reports)
                }
                (None, Some(file), Some(attr)) => {
                    let ctx = load(&file)?;
                    let pivot = ctx.attribute_index(&attr)?;
                    (file.display().to_string(), check_all(&ctx, pivot)?)
                }
                _ => unreachable!("clap enforces --builtin or --file with --attr"),
            };
            if summary {
                write!(
                    out,
                    "{}",
                    text_summary(reports.iter().map(|r| (name.as_str(), r)))
                )?;
            } else {
                json(out, &reports)?;
            }
            Ok(i32::from(
                reports.iter().any(|r| r.verdict != Verdict::Sound),
            ))
        }
        Command::Fuzz {
            seed,
            iters,
            max_objects,
            max_attrs,
            density,
            require_nonempty,
            shrink: do_shrink,
            summary,
        } => {
            let cfg = FuzzConfig {
                seed,
                iterations: iters,
                max_objects,
                max_attributes: max_attrs,
                density,
                require_nonempty_rows_cols: require_nonempty,
            };
            let findings = fuzz(&cfg)?;
            let mut rendered = Vec::with_capacity(findings.len());
            for f in &findings {
                let shrunk = if do_shrink {
                    let (ctx, report) = shrink(&f.report, &f.context)?;
                    Some(ShrunkJson {
                        context: write_cxt(&ctx),
                        report,
                    })
                } else {
                    None
                };
                rendered.push(FindingJson {
                    iteration: f.iteration,
                    context: write_cxt(&f.context),
                    report: f.report.clone(),
                    shrunk,
                });
            }
            if summary {
                for f in &rendered {
                    let name = format!("#{}", f.iteration);
                    writeln!(out, "{}", f.report.summary(&name))?;
                }
            } else {
                json(out, &rendered)?;
            }
            Ok(i32::from(!findings.is_empty()))
        }
    }
}
