use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use symbreak_core::constructions::{
    endline_exception, endline_extension_coloring, exceptional_endline_coloring,
    lifted_total_coloring, subdivision_proper_distinguishing, Construction,
};
use symbreak_core::harness::{enumerate_graphs, run_check, CheckId, CorpusSpec, ReportFormat};
use symbreak_core::invariants::compute;
use symbreak_core::symmetry::automorphism_group_with;
use symbreak_core::transforms::{endline_graph, line_graph, middle_graph, subdivision_graph};
use symbreak_core::{parse_graph6, to_graph6, Error, Graph, InvariantKind, Limits, NamedGraphSpec};

#[derive(Parser)]
#[command(name = "symbreak", version, about = "Symmetry-breaking invariants of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write one graph6 line per isomorphism class of order 1..=K.
    Gen {
        #[arg(long, value_name = "K")]
        max_order: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Sweep one statement over a corpus and write a report.
    Verify {
        #[arg(long, value_name = "ID")]
        theorem: String,
        #[command(flatten)]
        corpus: CorpusArgs,
        #[arg(long, value_name = "N", default_value_t = 1)]
        jobs: usize,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: String,
    },
    /// Apply a graph transformation to one graph6 line (argument or stdin).
    Transform {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long, value_name = "GRAPH")]
        graph6: Option<String>,
        /// Also print the provenance labels as a JSON line.
        #[arg(long)]
        labels: bool,
    },
    /// Compute invariants; prints one JSON object per requested invariant.
    Invariant {
        /// Comma-separated list of chi, D, chiD, Dp, chiDp, Dpp.
        #[arg(long, value_delimiter = ',', required = true)]
        which: Vec<String>,
        #[arg(long, value_name = "GRAPH")]
        graph6: String,
        #[arg(long)]
        witness: bool,
        /// Report best witnesses above the certification cap instead of refusing.
        #[arg(long)]
        witness_only: bool,
    },
    /// Print the automorphism group order, and optionally its elements.
    Aut {
        #[arg(long, value_name = "GRAPH")]
        graph6: String,
        #[arg(long)]
        list: bool,
    },
    /// Build and certify an explicit colouring.
    Construct {
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long, value_name = "GRAPH")]
        graph: String,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct CorpusArgs {
    /// graph6 file, one graph per line.
    #[arg(long, value_name = "FILE")]
    corpus: Option<PathBuf>,
    /// Every connected graph of order 1..=K.
    #[arg(long, value_name = "K")]
    builtin: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    Line,
    Endline,
    Subdivision,
    Middle,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    /// Δ + 2 edge colouring of G⁺ for C4, K4, C6, K3,3.
    Exceptional,
    /// Δ + 1 edge colouring of G⁺ for every other graph.
    Thm28,
    /// Optimal total distinguishing colouring lifted to S(G).
    Lift,
    /// Proper distinguishing colouring of S(G).
    Thm47,
}

/// A named graph (`C6`, `K3,3`, `Q`, ...) or a graph6 string; a trailing `+`
/// takes the endline graph.
fn parse_graph(arg: &str) -> Result<Graph, Error> {
    let arg = arg.trim();
    if let Some(base) = arg.strip_suffix('+') {
        return endline_graph(&parse_graph(base)?);
    }
    match arg.parse::<NamedGraphSpec>() {
        Ok(spec) => symbreak_core::named_graph(spec),
        Err(_) => parse_graph6(arg),
    }
}

fn write_out(out: Option<&PathBuf>, text: &str) -> Result<(), Error> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    let mut limits = Limits::from_env()?;
    match cli.command {
        Command::Gen {
            max_order,
            connected,
            out,
        } => {
            let mut text = String::new();
            for n in 1..=max_order {
                for g in enumerate_graphs(n, connected)? {
                    text.push_str(&to_graph6(&g));
                    text.push('\n');
                }
            }
            write_out(out.as_ref(), &text)?;
        }
        Command::Verify {
            theorem,
            corpus,
            jobs,
            out,
            format,
        } => {
            let id: CheckId = theorem.parse()?;
            let format: ReportFormat = format.parse()?;
            let spec = match (corpus.corpus, corpus.builtin) {
                (Some(path), _) => CorpusSpec::file(path),
                (None, Some(k)) => CorpusSpec::builtin(k),
                (None, None) => unreachable!("clap requires one corpus source"),
            };
            let report = run_check(id, &spec, jobs, &limits)?;
            symbreak_core::harness::emit_report(&report, format, out.as_deref())?;
            let s = &report.summary;
            eprintln!(
                "{}: checked {}, passed {}, failed {}, skipped {}, paper-inconsistent {} ({:.2?})",
                report.theorem,
                s.checked,
                s.passed,
                s.failed,
                s.skipped,
                s.paper_inconsistent.len(),
                report.wall_time
            );
            if s.failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
        Command::Transform { op, graph6, labels } => {
            let line = match graph6 {
                Some(s) => s,
                None => {
                    let mut buf = String::new();
                    io::stdin().read_to_string(&mut buf)?;
                    buf.lines().next().unwrap_or("").to_string()
                }
            };
            let g = parse_graph(&line)?;
            let h = match op {
                Op::Line => line_graph(&g)?,
                Op::Endline => endline_graph(&g)?,
                Op::Subdivision => subdivision_graph(&g)?,
                Op::Middle => middle_graph(&g)?,
            };
            let mut text = to_graph6(&h) + "\n";
            if labels {
                text.push_str(&serde_json::to_string(h.labels()).expect("labels serialize"));
                text.push('\n');
            }
            write_out(None, &text)?;
        }
        Command::Invariant {
            which,
            graph6,
            witness,
            witness_only,
        } => {
            limits.witness_only = witness_only;
            let g = parse_graph(&graph6)?;
            let mut text = String::new();
            for name in which {
                let kind: InvariantKind = name.trim().parse()?;
                let v = compute(kind, &g, &limits)?;
                let mut obj = json!({
                    "kind": v.kind,
                    "value": v.value,
                    "certified": v.certified,
                });
                if witness {
                    obj["witness"] = v.witness.to_json(&g);
                }
                text.push_str(&obj.to_string());
                text.push('\n');
            }
            write_out(None, &text)?;
        }
        Command::Aut { graph6, list } => {
            let g = parse_graph(&graph6)?;
            let group = automorphism_group_with(&g, &limits)?;
            let mut text = format!("order {}\n", group.order());
            if list {
                for p in group.elements() {
                    text.push_str(&format!("{p}\n"));
                }
            }
            write_out(None, &text)?;
        }
        Command::Construct { which, graph } => {
            let g = parse_graph(&graph)?;
            let (name, built) = match which {
                Which::Exceptional => ("exceptional", exceptional_endline_coloring(&g)?),
                Which::Thm28 => {
                    if endline_exception(&g)?.is_some() {
                        ("exceptional", exceptional_endline_coloring(&g)?)
                    } else {
                        ("thm28", endline_extension_coloring(&g, &limits)?)
                    }
                }
                Which::Lift => ("lift", lifted_total_coloring(&g, &limits)?),
                Which::Thm47 => ("thm47", subdivision_proper_distinguishing(&g, &limits)?),
            };
            let ok = built.certification.ok();
            write_out(None, &(construction_json(name, &built) + "\n"))?;
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn construction_json(name: &str, c: &Construction) -> String {
    json!({
        "construction": name,
        "graph6": to_graph6(&c.graph),
        "palette": c.palette(),
        "coloring": c.coloring.to_json(&c.graph),
        "certification": c.certification,
    })
    .to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("symbreak: {e}");
            ExitCode::from(2)
        }
    }
}
