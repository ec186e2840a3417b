use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use seatgraph_core::{
    chordal_sequence, chromatic_poly, eulerian_poly, generalized_eulerian_poly, materialize, odp,
    odp_assign_slice, odp_edge_slice, sweep, verify_acyclic_potential, verify_automorphism,
    verify_cycle_base, verify_cycle_identity, verify_edge_removal, verify_generalized_equals_odp,
    verify_path_identity, verify_point_squish, verify_self_equivalent_slice, Digraph, Error, Label,
    Limits, SeriesIdentity, Verdict,
};

use crate::format::*;

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "seatgraph",
    version,
    about = "Directed friends-and-seats graphs and outdegree polynomials"
)]
pub struct Cli {
    /// Output format; each command has its own default
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,

    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Lift the factorial-time size bounds
    #[arg(long, global = true)]
    pub unsafe_bounds: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
    Csv,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print a graph
    Gen {
        /// tour:N, path:N, cycle:N, empty:N, inline JSON, or a file
        graph: String,
    },
    /// Outdegree polynomial ODP(X, Y), or one of its slices
    Odp {
        x: String,
        y: String,
        /// edge:A,B or assign:I,J
        #[arg(long)]
        slice: Option<String>,
    },
    /// Build DFS(X, Y) explicitly
    Dfs { x: String, y: String },
    /// Chromatic polynomial of the underlying undirected graph
    Chromatic { graph: String },
    /// Sink-equivalent edge sequence from the tournament down to X
    ChordalSeq { graph: String },
    /// Coefficient rows of Eulerian-type polynomials
    Table {
        #[arg(value_enum)]
        kind: TableKind,
        /// Range A..B (inclusive) or a single N
        #[arg(long)]
        n: String,
    },
    /// Check one identity
    Verify {
        #[command(subcommand)]
        which: VerifyCommand,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Eulerian,
    CyclicEulerian,
}

#[derive(Args, Debug)]
pub struct PairArgs {
    #[arg(long)]
    x: String,
    #[arg(long)]
    y: String,
}

#[derive(Args, Debug)]
pub struct PrefixArg {
    /// Number of series coefficients beyond the constant term
    #[arg(long = "M", env = "SEATGRAPH_M", default_value_t = 16)]
    m: usize,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdentityArg {
    Path,
    Cycle,
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    Automorphism(PairArgs),
    Acyclic(PairArgs),
    EdgeRemoval {
        #[command(flatten)]
        pair: PairArgs,
        /// A,B
        #[arg(long)]
        edge: String,
    },
    SelfSlice {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        edge: String,
    },
    Squish {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long)]
        edge: String,
    },
    PathIdentity {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        prefix: PrefixArg,
    },
    CycleIdentity {
        #[arg(long)]
        graph: String,
        #[command(flatten)]
        prefix: PrefixArg,
    },
    CycleBase {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        prefix: PrefixArg,
    },
    GenEulerian {
        #[arg(long)]
        graph: String,
        #[arg(long)]
        cyclic: bool,
    },
    /// Every labeled acyclic graph on N vertices
    Sweep {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        prefix: PrefixArg,
        #[arg(long, value_enum, default_value_t = IdentityArg::Path)]
        identity: IdentityArg,
    },
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Resource(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Resource { .. } => Failure::Resource(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Res<T> = Result<T, Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Named family, inline JSON, or a path to a JSON file.
pub fn parse_graph(arg: &str) -> Res<Digraph> {
    let arg = arg.trim();
    if arg.starts_with('{') {
        return graph_from_json(arg).map_err(usage);
    }
    if let Some((family, n)) = arg.split_once(':') {
        if let Ok(n) = n.parse::<usize>() {
            let g = match family {
                "tour" => Digraph::tour(n),
                "path" => Digraph::path(n),
                "cycle" => Digraph::cycle(n),
                "empty" => Digraph::empty(n),
                _ => return Err(usage(format!("unknown graph family '{family}'"))),
            };
            return Ok(g?);
        }
    }
    let text = std::fs::read_to_string(arg)
        .map_err(|e| usage(format!("cannot read graph '{arg}': {e}")))?;
    graph_from_json(&text).map_err(usage)
}

fn parse_pair(s: &str) -> Res<(Label, Label)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| usage(format!("expected A,B, got '{s}'")))?;
    let num = |t: &str| {
        t.trim()
            .parse::<Label>()
            .map_err(|_| usage(format!("bad label '{t}'")))
    };
    Ok((num(a)?, num(b)?))
}

fn parse_range(s: &str) -> Res<(usize, usize)> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| usage(format!("bad range '{s}'")))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => (num(s)?, num(s)?),
    };
    if lo > hi {
        return Err(usage(format!("empty range '{s}'")));
    }
    Ok((lo, hi))
}

struct Report {
    body: String,
    holds: bool,
}

impl Report {
    fn ok(body: String) -> Self {
        Report { body, holds: true }
    }
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("json");
    s.push('\n');
    s
}

fn reject(format: Format, allowed: &[Format]) -> Res<()> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(usage(
            format!("format {format:?} is not available for this command").to_lowercase(),
        ))
    }
}

fn verdict_report(v: &Verdict, format: Format) -> Res<Report> {
    reject(format, &[Format::Text, Format::Json])?;
    let body = match format {
        Format::Json => json_line(&verdict_json(v)),
        _ => verdict_text(v),
    };
    Ok(Report {
        body,
        holds: v.holds,
    })
}

fn execute(cli: &Cli) -> Res<Report> {
    let limits = if cli.unsafe_bounds {
        Limits::UNBOUNDED
    } else {
        Limits::DEFAULT
    };
    let fmt = |default: Format| cli.format.unwrap_or(default);
    match &cli.command {
        Command::Gen { graph } => {
            let g = parse_graph(graph)?;
            let f = fmt(Format::Json);
            reject(f, &[Format::Json, Format::Dot, Format::Text])?;
            Ok(Report::ok(match f {
                Format::Dot => graph_to_dot(&g),
                Format::Text => format!("{}\n", edges_compact(&g)),
                _ => format!("{}\n", graph_to_json(&g)),
            }))
        }
        Command::Odp { x, y, slice } => {
            let (x, y) = (parse_graph(x)?, parse_graph(y)?);
            let p = match slice.as_deref() {
                None => odp(&x, &y, &limits)?,
                Some(s) => match s.split_once(':') {
                    Some(("edge", pair)) => {
                        let (a, b) = parse_pair(pair)?;
                        odp_edge_slice(&x, &y, a, b, &limits)?
                    }
                    Some(("assign", pair)) => {
                        let (i, j) = parse_pair(pair)?;
                        odp_assign_slice(&x, &y, i, j, &limits)?
                    }
                    _ => {
                        return Err(usage(format!(
                            "bad slice '{s}', expected edge:A,B or assign:I,J"
                        )))
                    }
                },
            };
            let f = fmt(Format::Text);
            reject(f, &[Format::Text, Format::Json])?;
            Ok(Report::ok(match f {
                Format::Json => json_line(&poly_json(&p)),
                _ => format!("{p}\n"),
            }))
        }
        Command::Dfs { x, y } => {
            let g = materialize(&parse_graph(x)?, &parse_graph(y)?, &limits)?;
            let f = fmt(Format::Dot);
            reject(f, &[Format::Dot, Format::Json])?;
            Ok(Report::ok(match f {
                Format::Json => json_line(&dfs_json(&g)),
                _ => dfs_dot(&g),
            }))
        }
        Command::Chromatic { graph } => {
            let g = parse_graph(graph)?;
            if g.n() > 64 {
                return Err(Failure::Resource(
                    "chromatic polynomial supports at most 64 vertices".into(),
                ));
            }
            let p = chromatic_poly(&g);
            let f = fmt(Format::Text);
            reject(f, &[Format::Text, Format::Json])?;
            Ok(Report::ok(match f {
                Format::Json => json_line(&poly_json(&p)),
                _ => format!("{}\n", p.display_with("k")),
            }))
        }
        Command::ChordalSeq { graph } => {
            let seq = chordal_sequence(&parse_graph(graph)?)?;
            reject(fmt(Format::Json), &[Format::Json])?;
            Ok(Report::ok(json_line(&chordal_sequence_json(&seq))))
        }
        Command::Table { kind, n } => {
            let (lo, hi) = parse_range(n)?;
            let rows = (lo..=hi)
                .map(|n| match kind {
                    TableKind::Eulerian => eulerian_poly(n, &limits),
                    TableKind::CyclicEulerian => {
                        Digraph::tour(n).and_then(|g| generalized_eulerian_poly(&g, true, &limits))
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            reject(fmt(Format::Csv), &[Format::Csv])?;
            Ok(Report::ok(rows_csv(&rows)))
        }
        Command::Verify { which } => verify(which, cli.format, &limits),
    }
}

fn verify(which: &VerifyCommand, format: Option<Format>, limits: &Limits) -> Res<Report> {
    let pair =
        |p: &PairArgs| -> Res<(Digraph, Digraph)> { Ok((parse_graph(&p.x)?, parse_graph(&p.y)?)) };
    let text_or_json = format.unwrap_or(Format::Text);
    match which {
        VerifyCommand::Automorphism(p) => {
            let (x, y) = pair(p)?;
            verdict_report(&verify_automorphism(&x, &y, limits)?, text_or_json)
        }
        VerifyCommand::Acyclic(p) => {
            let (x, y) = pair(p)?;
            verdict_report(&verify_acyclic_potential(&x, &y, limits)?, text_or_json)
        }
        VerifyCommand::EdgeRemoval { pair: p, edge } => {
            let (x, y) = pair(p)?;
            let (a, b) = parse_pair(edge)?;
            verdict_report(&verify_edge_removal(&x, &y, a, b, limits)?, text_or_json)
        }
        VerifyCommand::SelfSlice { pair: p, edge } => {
            let (x, y) = pair(p)?;
            let (a, b) = parse_pair(edge)?;
            verdict_report(
                &verify_self_equivalent_slice(&x, &y, a, b, limits)?,
                text_or_json,
            )
        }
        VerifyCommand::Squish { pair: p, edge } => {
            let (x, y) = pair(p)?;
            let (a, b) = parse_pair(edge)?;
            verdict_report(&verify_point_squish(&x, &y, a, b, limits)?, text_or_json)
        }
        VerifyCommand::PathIdentity { graph, prefix }
        | VerifyCommand::CycleIdentity { graph, prefix } => {
            let x = parse_graph(graph)?;
            let (r, which) = if matches!(which, VerifyCommand::PathIdentity { .. }) {
                (
                    verify_path_identity(&x, prefix.m, limits)?,
                    SeriesIdentity::Path,
                )
            } else {
                (
                    verify_cycle_identity(&x, prefix.m, limits)?,
                    SeriesIdentity::Cycle,
                )
            };
            reject(text_or_json, &[Format::Text, Format::Json])?;
            let body = match text_or_json {
                Format::Json => json_line(&series_report_json(&r, which)),
                _ => series_report_text(&r, which),
            };
            Ok(Report {
                body,
                holds: r.verdict.holds,
            })
        }
        VerifyCommand::CycleBase { n, prefix } => {
            let r = verify_cycle_base(*n, prefix.m, limits)?;
            reject(text_or_json, &[Format::Text, Format::Json])?;
            let body = match text_or_json {
                Format::Json => json_line(&cycle_base_json(&r)),
                _ => cycle_base_text(&r),
            };
            Ok(Report {
                body,
                holds: r.verdict.holds,
            })
        }
        VerifyCommand::GenEulerian { graph, cyclic } => {
            let g = parse_graph(graph)?;
            verdict_report(
                &verify_generalized_equals_odp(&g, *cyclic, limits)?,
                text_or_json,
            )
        }
        VerifyCommand::Sweep {
            n,
            prefix,
            identity,
        } => {
            let which = match identity {
                IdentityArg::Path => SeriesIdentity::Path,
                IdentityArg::Cycle => SeriesIdentity::Cycle,
            };
            let rows = sweep(*n, prefix.m, which, limits)?;
            let holds = rows.iter().all(|r| r.report.verdict.holds);
            let f = format.unwrap_or(Format::Csv);
            reject(f, &[Format::Csv, Format::Json])?;
            let body = match f {
                Format::Json => json_line(&sweep_json(&rows, which)),
                _ => sweep_csv(&rows),
            };
            Ok(Report { body, holds })
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let report = match execute(&cli) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("error: {msg} (pass --unsafe-bounds to override)");
            return ExitCode::from(EXIT_RESOURCE);
        }
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, &report.body),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(report.body.as_bytes())
        }
    };
    if let Err(e) = written {
        eprintln!("error: cannot write output: {e}");
        return ExitCode::from(EXIT_USAGE);
    }
    if report.holds {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILED)
    }
}
