//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification mismatch, 2 usage or parse
//! error, 3 enumeration budget exceeded.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::closed_form::count;
use crate::degree_spec::DegreeSpec;
use crate::error::Error;
use crate::genfun::{closed_form_gf, recursion_gf, DEFAULT_ORDER};
use crate::oracle::{budget_from_env, oracle_count_with_budget, write_tree_dump};
use crate::recursion::{Engine, Recursions};
use crate::tables::{Sequence, Table, TableKind, TableRanges};
use crate::verify::{run_suite, Grids, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Contract,
    Delete,
    Oracle,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Bfile,
    Text,
}

#[derive(Debug, Parser)]
#[command(name = "planetrees", version, about = "Count plane trees with several marked roots")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct RunConfig {
    /// Counting method; `all` runs every method and requires agreement.
    #[arg(long, global = true, value_enum, default_value = "closed")]
    pub method: Method,
    /// Truncation order of generating functions.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER)]
    pub order: usize,
    /// Most trees any enumeration may visit (default: $PLANETREES_BUDGET or 1000000).
    #[arg(long, global = true)]
    pub budget: Option<u128>,
    /// Output format; each command has its own default.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Worker threads.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write output to FILE instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

impl RunConfig {
    fn budget(&self) -> u128 {
        self.budget.unwrap_or_else(budget_from_env)
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Count the trees of a spec such as "N=3 e=6 d=3,1,4".
    Count {
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
    },
    /// Print one of the sample tables.
    Table {
        kind: String,
        /// Last row index (N or d), or number of degree pairs.
        #[arg(long)]
        rows: Option<usize>,
        #[arg(long)]
        e_min: Option<usize>,
        #[arg(long)]
        e_max: Option<usize>,
    },
    /// Run a cross-check suite: recursions, oracle, series, identities or all.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
        /// Edge bound of the oracle grid over all degree tuples.
        #[arg(long)]
        oracle_edges: Option<usize>,
    },
    /// Emit an integer sequence in b-file form.
    Bfile {
        /// A002054, A074922, A001763 or A088218.
        id: String,
        #[arg(long, default_value_t = 15)]
        terms: usize,
    },
    /// Generating-function output.
    Series {
        #[command(subcommand)]
        action: SeriesAction,
    },
    /// One-rooted tree output.
    Tree {
        #[command(subcommand)]
        action: TreeAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum SeriesAction {
    /// Coefficients of G_N as "e d1 .. dN : num/den" lines.
    Dump {
        #[arg(long, default_value_t = 1)]
        roots: usize,
        /// Build the series by the recursion instead of the closed form.
        #[arg(long)]
        recursive: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum TreeAction {
    /// Every one-rooted tree with the given edge count, one Dyck word per line.
    Dump {
        #[arg(long)]
        edges: usize,
    },
}

/// Outcome of a command: text to emit and the exit code.
struct Outcome {
    text: String,
    code: i32,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: EXIT_OK }
    }
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Domain(_) => EXIT_USAGE,
        Error::Budget { .. } => EXIT_BUDGET,
        _ => EXIT_MISMATCH,
    }
}

fn unsupported(format: Format, command: &str) -> Error {
    Error::Domain(format!("format {format:?} is not available for {command}").to_lowercase())
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code. Output goes to `stdout` or the `--out` file.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = err.render().to_string();
            let _ = if code == EXIT_OK { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    if let Some(jobs) = cli.config.jobs {
        // the global pool can be set once per process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build_global();
    }
    let outcome = match dispatch(&cli) {
        Ok(outcome) => outcome,
        Err(err) => {
            let _ = writeln!(stderr, "error: {err}");
            return exit_code(&err);
        }
    };
    let written = match &cli.config.out {
        Some(path) => std::fs::write(path, &outcome.text),
        None => stdout.write_all(outcome.text.as_bytes()),
    };
    if let Err(err) = written {
        let _ = writeln!(stderr, "error: cannot write output: {err}");
        return EXIT_USAGE;
    }
    outcome.code
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}

fn dispatch(cli: &Cli) -> crate::Result<Outcome> {
    let config = &cli.config;
    match &cli.command {
        Command::Count { spec } => cmd_count(&spec.join(" "), config),
        Command::Table { kind, rows, e_min, e_max } => {
            let kind: TableKind = kind.parse()?;
            let d = kind.default_ranges();
            let ranges = TableRanges {
                rows: rows.unwrap_or(d.rows),
                e_min: e_min.unwrap_or(d.e_min),
                e_max: e_max.unwrap_or(d.e_max),
            };
            let table = Table::generate_with(kind, ranges);
            Ok(Outcome::ok(match config.format.unwrap_or(Format::Csv) {
                Format::Csv => table.to_csv(),
                Format::Json => table.to_json(),
                Format::Text => table.to_text(),
                f @ Format::Bfile => return Err(unsupported(f, "table")),
            }))
        }
        Command::Verify { suite, oracle_edges } => {
            let suite: Suite = suite.parse()?;
            let mut grids = Grids { order: config.order, budget: config.budget(), ..Grids::default() };
            if let Some(e) = *oracle_edges {
                grids.oracle_edges = e;
                grids.oracle_edges_one_degree = grids.oracle_edges_one_degree.min(e + 2);
            }
            let report = run_suite(suite, &grids)?;
            let text = match config.format.unwrap_or(Format::Text) {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
                f => return Err(unsupported(f, "verify")),
            };
            Ok(Outcome { text, code: if report.passed { EXIT_OK } else { EXIT_MISMATCH } })
        }
        Command::Bfile { id, terms } => {
            let seq: Sequence = id.parse()?;
            let format = config.format.unwrap_or(Format::Bfile);
            if format == Format::Bfile || format == Format::Text {
                return Ok(Outcome::ok(seq.bfile(*terms)?));
            }
            let values = seq.terms(*terms)?;
            Ok(Outcome::ok(match format {
                Format::Csv => {
                    std::iter::once("index,value\n".to_string()).chain(values.iter().map(|(e, v)| format!("{e},{v}\n"))).collect()
                }
                _ => {
                    let rows: Vec<_> = values.iter().map(|(e, v)| json!({"index": e, "value": v.to_string()})).collect();
                    serde_json::to_string_pretty(&json!({"sequence": seq.oeis_id(), "terms": rows})).expect("json") + "\n"
                }
            }))
        }
        Command::Series { action: SeriesAction::Dump { roots, recursive } } => {
            match config.format.unwrap_or(Format::Text) {
                Format::Text => {}
                f => return Err(unsupported(f, "series dump")),
            }
            let g = if *recursive { recursion_gf(*roots, config.order)? } else { closed_form_gf(*roots, config.order)? };
            Ok(Outcome::ok(g.dump_lines().iter().map(|l| format!("{l}\n")).collect()))
        }
        Command::Tree { action: TreeAction::Dump { edges } } => {
            let mut buf = Vec::new();
            write_tree_dump(*edges, config.budget(), &mut buf)?;
            Ok(Outcome::ok(String::from_utf8(buf).expect("dyck words are ascii")))
        }
    }
}

fn cmd_count(text: &str, config: &RunConfig) -> crate::Result<Outcome> {
    let spec: DegreeSpec = text.parse()?;
    let methods: Vec<Method> = match config.method {
        Method::All => vec![Method::Closed, Method::Contract, Method::Delete, Method::Oracle],
        m => vec![m],
    };
    let engines = Recursions::new();
    let mut values = Vec::new();
    for m in &methods {
        let v = match m {
            Method::Closed => count(&spec),
            Method::Contract => engines.count(Engine::Contraction, &spec),
            Method::Delete => engines.count(Engine::Deletion, &spec),
            Method::Oracle => oracle_count_with_budget(&spec, config.budget())?,
            Method::All => unreachable!("expanded above"),
        };
        values.push((method_name(*m), v));
    }
    let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
    let text = match config.format.unwrap_or(Format::Text) {
        Format::Text => {
            let mut out = format!("{}\n", values[0].1);
            if methods.len() > 1 {
                let names: Vec<&str> = values.iter().map(|(n, _)| *n).collect();
                if agree {
                    out.push_str(&format!("verified: {} agree\n", names.join(", ")));
                } else {
                    out = values.iter().map(|(n, v)| format!("{n} {v}\n")).collect();
                    out.push_str("MISMATCH between methods\n");
                }
            }
            out
        }
        Format::Csv => std::iter::once("method,count\n".to_string())
            .chain(values.iter().map(|(n, v)| format!("{n},{v}\n")))
            .collect(),
        Format::Json => {
            let counts: serde_json::Map<String, serde_json::Value> =
                values.iter().map(|(n, v)| (n.to_string(), json!(v.to_string()))).collect();
            serde_json::to_string_pretty(&json!({"spec": spec.to_string(), "counts": counts, "agree": agree}))
                .expect("json")
                + "\n"
        }
        f @ Format::Bfile => return Err(unsupported(f, "count")),
    };
    Ok(Outcome { text, code: if agree { EXIT_OK } else { EXIT_MISMATCH } })
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Closed => "closed",
        Method::Contract => "contract",
        Method::Delete => "delete",
        Method::Oracle => "oracle",
        Method::All => "all",
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("planetrees").chain(args.iter().copied());
        let code = run_with(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn count_examples() {
        assert_eq!(run_capture(&["count", "N=2 e=5 d=2,3"]), (0, "24\n".into(), String::new()));
        assert_eq!(run_capture(&["count", "N=7", "e=6"]).1, "1028160\n");
        assert_eq!(run_capture(&["count", "N=1 e=0 d=0"]).1, "1\n");
        let (code, out, _) = run_capture(&["--method", "all", "count", "N=3 e=6 d=3,1,4"]);
        assert_eq!(code, 0);
        assert!(out.contains("verified: closed, contract, delete, oracle agree"), "{out}");
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run_capture(&["count", "N=two e=5"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["--budget", "10", "--method", "oracle", "count", "N=2 e=9"]).0, EXIT_BUDGET);
        assert_eq!(run_capture(&["--format", "bfile", "table", "example51"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["bfile", "A074922"]).0, EXIT_MISMATCH);
        assert_eq!(run_capture(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn dumps() {
        let (code, out, _) = run_capture(&["--order", "2", "series", "dump", "--roots", "1"]);
        assert_eq!(code, 0);
        assert!(out.lines().any(|l| l == "2 2 : 1/1"), "{out}");
        let (_, out, _) = run_capture(&["tree", "dump", "--edges", "2"]);
        assert_eq!(out, "(())\n()()\n");
    }
}
