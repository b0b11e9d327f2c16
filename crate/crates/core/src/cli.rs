//! Command-line front end.
//!
//! [`run`] takes the argument list and the value of `FIBOCUBE_CAP` and
//! returns the exit code together with everything that would be printed, so
//! the binary is a thin shell around it.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::harness::{CensusRow, Harness, Suite};
use crate::oracle::{AvoidanceGraph, DEFAULT_DIMENSION_CAP, MAX_DIMENSION_CAP};
use crate::periodicity::build_overlap_graph;
use crate::structural::{classify, Classification};
use crate::word::Pattern;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BAD: i32 = 10;

pub const CAP_ENV: &str = "FIBOCUBE_CAP";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
    Dot,
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub dimension_cap: usize,
    pub worker_count: usize,
    pub output_format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            dimension_cap: DEFAULT_DIMENSION_CAP,
            worker_count: default_workers(),
            output_format: OutputFormat::Text,
        }
    }
}

fn default_workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

#[derive(Debug, Parser)]
#[command(
    name = "fibocube",
    version,
    about = "Classify binary patterns by whether their avoidance graphs stay isometric in the hypercube"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t)]
    format: OutputFormat,
    /// Largest hypercube dimension the oracle may build (overrides FIBOCUBE_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Worker threads for sweeps and the oracle.
    #[arg(long, global = true)]
    workers: Option<usize>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Good or bad, with the index and all minimal witnesses when bad.
    Classify { pattern: String },
    /// The index B(f), or "good".
    Index { pattern: String },
    /// Minimal witnesses as JSON.
    Witness { pattern: String },
    /// Good/bad counts over all patterns of one length.
    Census {
        length: usize,
        /// Print the column header before a CSV row.
        #[arg(long)]
        header: bool,
    },
    /// Run verification sweeps; exits 0 only if every sweep passes.
    Verify {
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Dimensions above the index checked by the monotonicity sweep.
        #[arg(long, default_value_t = 3)]
        extra: usize,
    },
    /// Export Q_d(f).
    Graph {
        pattern: String,
        #[arg(long)]
        dim: usize,
    },
    /// Export the overlap graph for shifts r and s.
    OverlapGraph { r: usize, s: usize },
}

/// What a single invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Self {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }

    fn from_error(e: Error) -> Self {
        let code = match e {
            Error::MalformedWitness(_)
            | Error::LiftBelowDimension { .. }
            | Error::NotAVertex(_)
            | Error::LengthMismatch { .. } => EXIT_FAILURE,
            _ => EXIT_USAGE,
        };
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, env_cap: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(code, text)
            };
        }
    };
    let config = match resolve_config(&cli.global, env_cap) {
        Ok(c) => c,
        Err(msg) => return Outcome::usage(msg),
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.worker_count)
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            return Outcome {
                code: EXIT_FAILURE,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    pool.install(|| execute(&cli.command, &config))
}

fn resolve_config(g: &GlobalArgs, env_cap: Option<&str>) -> Result<RunConfig, String> {
    let dimension_cap = match (g.cap, env_cap) {
        (Some(c), _) => c,
        (None, Some(s)) => s
            .trim()
            .parse()
            .map_err(|_| format!("{CAP_ENV}={s:?} is not a non-negative integer"))?,
        (None, None) => DEFAULT_DIMENSION_CAP,
    };
    if !(2..=MAX_DIMENSION_CAP).contains(&dimension_cap) {
        return Err(format!(
            "dimension cap {dimension_cap} outside 2..={MAX_DIMENSION_CAP}"
        ));
    }
    let worker_count = g.workers.unwrap_or_else(default_workers);
    if worker_count == 0 {
        return Err("--workers must be at least 1".into());
    }
    Ok(RunConfig {
        dimension_cap,
        worker_count,
        output_format: g.format,
    })
}

fn parse_pattern(s: &str) -> Result<Pattern, Outcome> {
    s.parse::<Pattern>()
        .map_err(|e| Outcome::usage(format!("pattern {s:?}: {e}")))
}

fn unsupported(cmd: &str, format: OutputFormat) -> Outcome {
    Outcome::usage(format!(
        "{cmd} does not support --format {}",
        format
            .to_possible_value()
            .expect("no skipped variants")
            .get_name()
    ))
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn verdict_code(c: &Classification) -> i32 {
    if c.is_good() {
        EXIT_OK
    } else {
        EXIT_BAD
    }
}

fn execute(cmd: &Command, config: &RunConfig) -> Outcome {
    let result = match cmd {
        Command::Classify { pattern } => cmd_classify(pattern, config),
        Command::Index { pattern } => cmd_index(pattern, config),
        Command::Witness { pattern } => cmd_witness(pattern, config),
        Command::Census { length, header } => cmd_census(*length, *header, config),
        Command::Verify {
            max_len,
            suite,
            extra,
        } => cmd_verify(*max_len, *suite, *extra, config),
        Command::Graph { pattern, dim } => cmd_graph(pattern, *dim, config),
        Command::OverlapGraph { r, s } => cmd_overlap_graph(*r, *s, config),
    };
    result.unwrap_or_else(|o| o)
}

type CmdResult = Result<Outcome, Outcome>;

fn cmd_classify(pattern: &str, config: &RunConfig) -> CmdResult {
    let f = parse_pattern(pattern)?;
    let c = classify(&f);
    let out = match config.output_format {
        OutputFormat::Text => {
            let mut out = String::new();
            match c.index() {
                None => out.push_str("good\n"),
                Some(index) => {
                    let _ = writeln!(out, "bad B={index}");
                    for w in &c.witnesses {
                        out.push_str(&json_line(w));
                    }
                }
            }
            out
        }
        OutputFormat::Json => json_line(&c),
        other => return Err(unsupported("classify", other)),
    };
    Ok(Outcome::ok(verdict_code(&c), out))
}

fn cmd_index(pattern: &str, config: &RunConfig) -> CmdResult {
    let f = parse_pattern(pattern)?;
    let c = classify(&f);
    let out = match config.output_format {
        OutputFormat::Text => match c.index() {
            Some(i) => format!("{i}\n"),
            None => "good\n".to_string(),
        },
        OutputFormat::Json => json_line(&c.goodness),
        other => return Err(unsupported("index", other)),
    };
    Ok(Outcome::ok(verdict_code(&c), out))
}

fn cmd_witness(pattern: &str, config: &RunConfig) -> CmdResult {
    let f = parse_pattern(pattern)?;
    let c = classify(&f);
    let out = match config.output_format {
        OutputFormat::Text | OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(&c.witnesses).expect("serializable");
            s.push('\n');
            s
        }
        other => return Err(unsupported("witness", other)),
    };
    Ok(Outcome::ok(verdict_code(&c), out))
}

fn census_text(row: &CensusRow) -> String {
    let mut out = String::new();
    let confirmed = match row.oracle_confirmed {
        Some(true) => "confirmed by oracle",
        Some(false) => "ORACLE DISAGREES",
        None => "structural only",
    };
    let _ = writeln!(
        out,
        "length {}: {} good, {} bad of {} ({:.2}% good, {confirmed})",
        row.length,
        row.good_count,
        row.bad_count,
        row.total,
        100.0 * row.good_fraction
    );
    for (index, count) in &row.index_histogram {
        let _ = writeln!(out, "  B={index}: {count}");
    }
    for (p, count) in &row.p_histogram {
        let _ = writeln!(out, "  p={p}: {count}");
    }
    out
}

fn cmd_census(n: usize, header: bool, config: &RunConfig) -> CmdResult {
    let row = Harness::new(config.dimension_cap)
        .census(n)
        .map_err(Outcome::from_error)?;
    let out = match config.output_format {
        OutputFormat::Text => census_text(&row),
        OutputFormat::Json => json_line(&row),
        OutputFormat::Csv => {
            let mut s = String::new();
            if header {
                s.push_str(CensusRow::CSV_HEADER);
                s.push('\n');
            }
            s.push_str(&row.to_csv());
            s.push('\n');
            s
        }
        other => return Err(unsupported("census", other)),
    };
    let code = if row.oracle_confirmed == Some(false) {
        EXIT_FAILURE
    } else {
        EXIT_OK
    };
    Ok(Outcome::ok(code, out))
}

fn cmd_verify(max_len: usize, suite: Suite, extra: usize, config: &RunConfig) -> CmdResult {
    let reports = Harness::new(config.dimension_cap)
        .run_suite(suite, max_len, extra)
        .map_err(Outcome::from_error)?;
    let mut out = String::new();
    match config.output_format {
        OutputFormat::Text => {
            for r in &reports {
                let _ = writeln!(out, "{r}");
            }
        }
        OutputFormat::Json => {
            for r in &reports {
                out.push_str(&json_line(r));
            }
        }
        other => return Err(unsupported("verify", other)),
    }
    let code = if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    Ok(Outcome::ok(code, out))
}

fn cmd_graph(pattern: &str, dim: usize, config: &RunConfig) -> CmdResult {
    let f = parse_pattern(pattern)?;
    let g = AvoidanceGraph::build_with_cap(&f, dim, config.dimension_cap)
        .map_err(Outcome::from_error)?;
    let out = match config.output_format {
        OutputFormat::Dot => g.to_dot(),
        OutputFormat::Json => json_line(&g.to_json()),
        OutputFormat::Text => {
            let mut s = String::new();
            let _ = writeln!(
                s,
                "Q_{dim}({f}): {} vertices, {} edges",
                g.vertex_count(),
                g.edges().len()
            );
            for v in g.vertices() {
                let _ = writeln!(s, "{v}");
            }
            s
        }
        other => return Err(unsupported("graph", other)),
    };
    Ok(Outcome::ok(EXIT_OK, out))
}

fn cmd_overlap_graph(r: usize, s: usize, config: &RunConfig) -> CmdResult {
    let g = build_overlap_graph(r, s).map_err(Outcome::from_error)?;
    let out = match config.output_format {
        OutputFormat::Dot | OutputFormat::Text => g.to_dot(),
        OutputFormat::Json => json_line(&g),
        other => return Err(unsupported("overlap-graph", other)),
    };
    Ok(Outcome::ok(EXIT_OK, out))
}
