//! `scottmap`: tables, per-tiling queries, verification suites and exporters.

mod tables;

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use scottmap::enumerate::{generate_all_bounded, lambda_counts, shape_of, ShapePartition, DEFAULT_MAX_RANK};
use scottmap::flipclasses::{class_counts_by_lambda, class_representatives_bounded};
use scottmap::plabic::{g_map, trip_perm};
use scottmap::scott::scott_perm;
use scottmap::strandmap::build_strand_map;
use scottmap::verify::{run_suite, Suite};
use scottmap::{Error, Permutation, Tiling};
use serde_json::{json, Value};

use tables::{Method, Table};

#[derive(Parser)]
#[command(name = "scottmap", version, about = "Polygon tilings, Scott permutations and their flip classes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    global: Global,
}

#[derive(Args)]
struct Global {
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    out: Option<PathBuf>,
    /// Largest rank for which full enumeration is allowed.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_RANK)]
    max_rank: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
    /// Permutations in cycle notation.
    Cycles,
    /// Permutations as a list of images.
    Oneline,
    /// Only the number of results.
    Count,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ClassEmit {
    Count,
    Reps,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum StrandEmit {
    Json,
    Faces,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PlabicEmit {
    Dot,
    Json,
    Trip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Lemmas,
    MainTheorem,
    Bijections,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Lemmas => Suite::Lemmas,
            SuiteArg::MainTheorem => Suite::MainTheorem,
            SuiteArg::Bijections => Suite::Bijections,
            SuiteArg::All => Suite::All,
        }
    }
}

/// A tiling given on the command line.
#[derive(Args)]
struct TilingArgs {
    /// Number of polygon vertices.
    #[arg(long)]
    n: u32,
    /// Diagonals such as "2-8,3-5,5-8"; empty for the untiled polygon.
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    diagonals: String,
}

impl TilingArgs {
    fn tiling(&self) -> Result<Tiling, CliError> {
        Ok(Tiling::parse(self.n, &self.diagonals)?)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the tilings of an n-gon, optionally by diagonal count or shape.
    Enumerate {
        #[arg(long)]
        n: u32,
        /// Keep tilings with exactly this many diagonals.
        #[arg(long, conflicts_with = "lambda")]
        m: Option<u32>,
        /// Keep tilings of this shape, e.g. "2,2,1,1" or "2^2 1^2".
        #[arg(long)]
        lambda: Option<String>,
    },
    /// Reproduce one of the count tables for ranks 3..=n as CSV.
    Count {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum)]
        table: Table,
        #[arg(long, value_enum, default_value = "enum")]
        method: Method,
    },
    /// The Scott permutation of a tiling.
    Scott {
        #[command(flatten)]
        tiling: TilingArgs,
    },
    /// Flip classes of n-gon tilings.
    Classes {
        #[arg(long)]
        n: u32,
        /// Restrict to tilings of this shape.
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value = "count")]
        emit: ClassEmit,
    },
    /// The strand diagram of a tiling.
    Strands {
        #[command(flatten)]
        tiling: TilingArgs,
        #[arg(long, value_enum, default_value = "json")]
        emit: StrandEmit,
    },
    /// The rhombic plabic graph of a tiling.
    Plabic {
        #[command(flatten)]
        tiling: TilingArgs,
        #[arg(long, value_enum, default_value = "dot")]
        emit: PlabicEmit,
    },
    /// Run an exhaustive verification suite over every rank up to n.
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
    },
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Io(io::Error),
    Csv(csv::Error),
    Usage(String),
    /// Two computations of the same table cell disagree.
    Mismatch(String),
    /// A verification suite found counterexamples; the report is already written.
    Failed,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Csv(e) => write!(f, "{e}"),
            CliError::Usage(s) => f.write_str(s),
            CliError::Mismatch(s) => write!(f, "mismatch: {s}"),
            CliError::Failed => f.write_str("verification failed"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Csv(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut out = String::new();
    let result = run(&cli.command, &cli.global, &mut out);
    // verification reports are written even when the suite fails
    if result.is_ok() || matches!(result, Err(CliError::Failed)) {
        if let Err(e) = emit(&cli.global.out, &out) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(e @ CliError::Mismatch(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn emit(path: &Option<PathBuf>, text: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, text),
        None => io::stdout().lock().write_all(text.as_bytes()),
    }
}

fn run(cmd: &Command, g: &Global, out: &mut String) -> Result<(), CliError> {
    match cmd {
        Command::Enumerate { n, m, lambda } => cmd_enumerate(g, *n, *m, lambda.as_deref(), out),
        Command::Count { n, table, method } => cmd_count(g, *n, *table, *method, out),
        Command::Scott { tiling } => cmd_scott(g, &tiling.tiling()?, out),
        Command::Classes { n, lambda, emit } => cmd_classes(g, *n, lambda.as_deref(), *emit, out),
        Command::Strands { tiling, emit } => cmd_strands(g, &tiling.tiling()?, *emit, out),
        Command::Plabic { tiling, emit } => cmd_plabic(g, &tiling.tiling()?, *emit, out),
        Command::Verify { n, suite } => cmd_verify(g, *n, (*suite).into(), out),
    }
}

fn format_or(g: &Global, default: Format, allowed: &[Format]) -> Result<Format, CliError> {
    let f = g.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        let names: Vec<String> = allowed
            .iter()
            .map(|a| a.to_possible_value().unwrap().get_name().to_string())
            .collect();
        Err(CliError::Usage(format!(
            "--format {} is not available here; choose one of {}",
            f.to_possible_value().unwrap().get_name(),
            names.join(", ")
        )))
    }
}

fn parse_shape(raw: &str, n: u32) -> Result<ShapePartition, CliError> {
    let l: ShapePartition = raw.parse()?;
    Ok(ShapePartition::for_rank(l.parts().to_vec(), n)?)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialise");
    s.push('\n');
    s
}

fn csv_text(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("CSV of UTF-8 fields"))
}

/// Exact counts go into JSON as numbers while they fit in a u64.
fn big_json(x: &BigUint) -> Value {
    match u64::try_from(x) {
        Ok(v) => json!(v),
        Err(_) => json!(x.to_string()),
    }
}

fn diagonals_json(t: &Tiling) -> Value {
    json!(t.diagonals().iter().map(|d| [d.a(), d.b()]).collect::<Vec<_>>())
}

fn perm_json(p: &Permutation) -> Value {
    json!({ "n": p.n(), "sigma": p.images(), "cycles": p.to_cycles() })
}

fn cmd_enumerate(g: &Global, n: u32, m: Option<u32>, lambda: Option<&str>, out: &mut String) -> Result<(), CliError> {
    let format = format_or(g, Format::Text, &[Format::Json, Format::Csv, Format::Text, Format::Count])?;
    let shape = lambda.map(|l| parse_shape(l, n)).transpose()?;
    if let Some(m) = m {
        if n >= 3 && m > n - 3 {
            return Err(Error::OutOfRange { n, value: m }.into());
        }
    }
    let all: Vec<(Tiling, ShapePartition)> = generate_all_bounded(n, g.max_rank)?
        .into_iter()
        .filter(|t| m.is_none_or(|m| t.num_diagonals() == m as usize))
        .map(|t| {
            let s = shape_of(&t);
            (t, s)
        })
        .filter(|(_, s)| shape.as_ref().is_none_or(|l| s == l))
        .collect();
    match format {
        Format::Count => out.push_str(&format!("{}\n", all.len())),
        Format::Text => {
            for (t, _) in &all {
                out.push_str(&format!("{t}\n"));
            }
        }
        Format::Csv => {
            let rows = all.iter().map(|(t, s)| {
                let parts: Vec<String> = s.parts().iter().map(u32::to_string).collect();
                vec![n.to_string(), t.diagonal_list(), parts.join(",")]
            });
            out.push_str(&csv_text(&["n", "diagonals", "lambda"], rows)?);
        }
        _ => {
            let v: Vec<Value> = all
                .iter()
                .map(|(t, s)| json!({ "n": n, "diagonals": diagonals_json(t), "lambda": s.parts() }))
                .collect();
            out.push_str(&pretty(&json!(v)));
        }
    }
    Ok(())
}

fn cmd_count(g: &Global, n: u32, table: Table, method: Method, out: &mut String) -> Result<(), CliError> {
    let format = format_or(g, Format::Csv, &[Format::Json, Format::Csv, Format::Text])?;
    let rows = tables::rows(table, n, method, g.max_rank)?;
    match (format, table.by_shape()) {
        (Format::Json, false) => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let by_m: Vec<Value> = r.cells.iter().map(|(_, c)| big_json(c)).collect();
                    json!({ "n": r.n, "total": big_json(&r.total()), "by_m": by_m })
                })
                .collect();
            out.push_str(&pretty(&json!(v)));
        }
        (Format::Json, true) => {
            let v: Vec<Value> = rows
                .iter()
                .flat_map(|r| {
                    r.cells
                        .iter()
                        .map(move |(l, c)| json!({ "n": r.n, "lambda": l, "count": big_json(c) }))
                })
                .collect();
            out.push_str(&pretty(&json!(v)));
        }
        (Format::Csv, false) => {
            let width = n as usize - 2;
            let mut header = vec!["n".to_string(), "total".to_string()];
            header.extend((0..width).map(|m| format!("m{m}")));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            let body = rows.iter().map(|r| {
                let mut rec = vec![r.n.to_string(), r.total().to_string()];
                rec.extend(r.cells.iter().map(|(_, c)| c.to_string()));
                rec.resize(width + 2, String::new());
                rec
            });
            out.push_str(&csv_text(&header, body)?);
        }
        (Format::Csv, true) => {
            let body = rows
                .iter()
                .flat_map(|r| r.cells.iter().map(move |(l, c)| vec![r.n.to_string(), l.clone(), c.to_string()]));
            out.push_str(&csv_text(&["n", "lambda", "count"], body)?);
        }
        (_, false) => {
            for r in &rows {
                let cells: Vec<String> = r.cells.iter().map(|(_, c)| c.to_string()).collect();
                out.push_str(&format!("n={:<3} total={:<8} {}\n", r.n, r.total(), cells.join(" ")));
            }
        }
        (_, true) => {
            for r in &rows {
                for (l, c) in &r.cells {
                    out.push_str(&format!("n={:<3} {:<12} {}\n", r.n, l, c));
                }
            }
        }
    }
    Ok(())
}

fn cmd_scott(g: &Global, t: &Tiling, out: &mut String) -> Result<(), CliError> {
    let format = format_or(
        g,
        Format::Cycles,
        &[Format::Cycles, Format::Oneline, Format::Json, Format::Text, Format::Csv],
    )?;
    let sigma = scott_perm(t);
    match format {
        Format::Oneline => out.push_str(&format!("{}\n", sigma.to_oneline())),
        Format::Json => out.push_str(&pretty(&perm_json(&sigma))),
        Format::Csv => out.push_str(&csv_text(
            &["n", "diagonals", "cycles", "oneline"],
            [vec![t.n().to_string(), t.diagonal_list(), sigma.to_cycles(), sigma.to_oneline()]],
        )?),
        _ => out.push_str(&format!("{}\n", sigma.to_cycles())),
    }
    Ok(())
}

fn cmd_classes(g: &Global, n: u32, lambda: Option<&str>, emit: ClassEmit, out: &mut String) -> Result<(), CliError> {
    let shape = lambda.map(|l| parse_shape(l, n)).transpose()?;
    match emit {
        ClassEmit::Count | ClassEmit::Reps => {
            let format = format_or(g, Format::Text, &[Format::Json, Format::Csv, Format::Text])?;
            let reps: Vec<_> = class_representatives_bounded(n, g.max_rank)?
                .into_iter()
                .filter(|(_, t)| shape.as_ref().is_none_or(|l| &shape_of(t) == l))
                .collect();
            if emit == ClassEmit::Count {
                match format {
                    Format::Json => out.push_str(&pretty(&json!({ "n": n, "classes": reps.len() }))),
                    _ => out.push_str(&format!("{}\n", reps.len())),
                }
                return Ok(());
            }
            let key_text = |k: &scottmap::flipclasses::FlipClassKey| {
                let tiles: Vec<String> = k.big_tiles.iter().map(ToString::to_string).collect();
                tiles.join(" ")
            };
            match format {
                Format::Json => {
                    let v: Vec<Value> = reps
                        .iter()
                        .map(|(k, t)| {
                            let tiles: Vec<&[u32]> = k.big_tiles.iter().map(|q| q.vertices()).collect();
                            json!({
                                "big_tiles": tiles,
                                "representative": diagonals_json(t),
                                "sigma": scott_perm(t).to_cycles(),
                            })
                        })
                        .collect();
                    out.push_str(&pretty(&json!(v)));
                }
                Format::Csv => {
                    let rows = reps
                        .iter()
                        .map(|(k, t)| vec![key_text(k), t.diagonal_list(), scott_perm(t).to_cycles()]);
                    out.push_str(&csv_text(&["big_tiles", "representative", "sigma"], rows)?);
                }
                _ => {
                    for (k, t) in &reps {
                        let key = if k.big_tiles.is_empty() { "-".to_string() } else { key_text(k) };
                        out.push_str(&format!("{key}\t{t}\t{}\n", scott_perm(t).to_cycles()));
                    }
                }
            }
        }
        ClassEmit::Table => {
            let format = format_or(g, Format::Csv, &[Format::Json, Format::Csv, Format::Text])?;
            let tilings = lambda_counts(n, g.max_rank)?;
            let classes = class_counts_by_lambda(n, g.max_rank)?;
            let shapes: Vec<ShapePartition> = ShapePartition::all_of_size(n - 2)
                .into_iter()
                .filter(|l| shape.as_ref().is_none_or(|s| s == l))
                .collect();
            let cell = |l: &ShapePartition| {
                (
                    tilings.get(l).copied().unwrap_or(0),
                    classes.get(l).copied().unwrap_or(0),
                )
            };
            match format {
                Format::Json => {
                    let v: Vec<Value> = shapes
                        .iter()
                        .map(|l| {
                            let (a, c) = cell(l);
                            json!({ "lambda": l.to_string(), "tilings": a, "classes": c })
                        })
                        .collect();
                    out.push_str(&pretty(&json!(v)));
                }
                Format::Csv => {
                    let rows = shapes.iter().map(|l| {
                        let (a, c) = cell(l);
                        vec![l.to_string(), a.to_string(), c.to_string()]
                    });
                    out.push_str(&csv_text(&["lambda", "tilings", "classes"], rows)?);
                }
                _ => {
                    for l in &shapes {
                        let (a, c) = cell(l);
                        out.push_str(&format!("{:<12} {:>8} {:>8}\n", l.to_string(), a, c));
                    }
                }
            }
        }
    }
    Ok(())
}

fn cmd_strands(g: &Global, t: &Tiling, emit: StrandEmit, out: &mut String) -> Result<(), CliError> {
    let m = build_strand_map(t);
    match emit {
        StrandEmit::Json => {
            format_or(g, Format::Json, &[Format::Json])?;
            out.push_str(&m.to_json_pretty());
            out.push('\n');
        }
        StrandEmit::Faces => {
            let format = format_or(g, Format::Text, &[Format::Json, Format::Csv, Format::Text])?;
            let faces: Vec<_> = m.faces().iter().enumerate().filter(|(_, f)| !f.outer).collect();
            let class = |f: &scottmap::strandmap::Face| format!("{:?}", f.class).to_lowercase();
            let kind = |f: &scottmap::strandmap::Face| if f.is_interior() { "interior" } else { "boundary" };
            match format {
                Format::Json => {
                    let v: Vec<Value> = faces
                        .iter()
                        .map(|(i, f)| {
                            json!({
                                "id": i,
                                "class": class(f),
                                "kind": kind(f),
                                "sides": f.sides(),
                                "strand_sides": f.strand_sides,
                                "vertex_arcs": f.vertex_arcs,
                                "edge_arcs": f.edge_arcs,
                            })
                        })
                        .collect();
                    out.push_str(&pretty(&json!(v)));
                }
                Format::Csv => {
                    let join = |v: &[u32]| v.iter().map(u32::to_string).collect::<Vec<_>>().join(" ");
                    let rows = faces.iter().map(|(i, f)| {
                        vec![
                            i.to_string(),
                            class(f),
                            kind(f).to_string(),
                            f.sides().to_string(),
                            f.strand_sides.to_string(),
                            join(&f.vertex_arcs),
                            join(&f.edge_arcs),
                        ]
                    });
                    let header = ["id", "class", "kind", "sides", "strand_sides", "vertex_arcs", "edge_arcs"];
                    out.push_str(&csv_text(&header, rows)?);
                }
                _ => {
                    for (i, f) in &faces {
                        out.push_str(&format!(
                            "face {i}: {} {}, {} sides ({} strand)",
                            kind(f),
                            class(f),
                            f.sides(),
                            f.strand_sides
                        ));
                        if let Some(v) = f.label() {
                            out.push_str(&format!(", vertex {v}"));
                        }
                        out.push('\n');
                    }
                }
            }
        }
    }
    Ok(())
}

fn cmd_plabic(g: &Global, t: &Tiling, emit: PlabicEmit, out: &mut String) -> Result<(), CliError> {
    let graph = g_map(t);
    match emit {
        PlabicEmit::Dot => {
            format_or(g, Format::Text, &[Format::Text])?;
            out.push_str(&graph.to_dot());
        }
        PlabicEmit::Json => {
            format_or(g, Format::Json, &[Format::Json])?;
            out.push_str(&graph.to_json_pretty());
            out.push('\n');
        }
        PlabicEmit::Trip => {
            let format = format_or(g, Format::Cycles, &[Format::Cycles, Format::Oneline, Format::Json, Format::Text])?;
            let p = trip_perm(&graph)?;
            match format {
                Format::Json => out.push_str(&pretty(&perm_json(&p))),
                Format::Oneline => out.push_str(&format!("{}\n", p.to_oneline())),
                _ => out.push_str(&format!("{}\n", p.to_cycles())),
            }
        }
    }
    Ok(())
}

fn cmd_verify(g: &Global, n: u32, suite: Suite, out: &mut String) -> Result<(), CliError> {
    let format = format_or(g, Format::Text, &[Format::Json, Format::Text])?;
    let result = run_suite(suite, n, g.max_rank)?;
    if format == Format::Json {
        out.push_str(&serde_json::to_string_pretty(&result).expect("report serialises"));
        out.push('\n');
    } else {
        out.push_str(&format!(
            "suite {}: ranks 3..={n}, {} checks, {} failures\n",
            result.suite,
            result.checks,
            result.failures.len()
        ));
        for f in &result.failures {
            out.push_str(&format!("FAIL {}: {}\n", f.property, f.counterexample));
        }
    }
    if result.passed() {
        Ok(())
    } else {
        if let Some(f) = result.failures.first() {
            eprintln!("counterexample for {}: {}", f.property, f.counterexample);
        }
        Err(CliError::Failed)
    }
}
