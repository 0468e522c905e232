//! The `colorvir` command line.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical failure
//! is found, 2 for usage or parameter errors.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use colorvir_core::involution::InvolutionKind;
use colorvir_core::{Error, HalfInt, RhoMode};

use crate::config::{parse_spin, Command, Format, RunConfig, DEFAULT_SEED};
use crate::drivers::{scan_of, Drivers};
use crate::report::{to_json, ClassifyJson, InvolutionJson, JacobiJson, RealizeJson};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "colorvir", version, about = "Checks for the Z2xZ2 color superalgebra over Virasoro")]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Graded Jacobi identity on every in-window triple.
    Jacobi {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i32).range(1..))]
        window: i32,
        /// Use the centrally extended algebra.
        #[arg(long)]
        extended: bool,
        #[arg(long, value_enum, default_value_t = RhoArg::Corrected)]
        rho_mode: RhoArg,
        /// Shorthand for `--rho-mode theorem-verbatim`.
        #[arg(long, conflicts_with = "rho_mode")]
        theorem_verbatim: bool,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Central extensions by exact elimination over a window scan.
    Classify {
        #[command(flatten)]
        point: Point,
        /// Comma-separated window sizes; the largest is reported in full.
        #[arg(long, alias = "window", value_delimiter = ',', default_value = "4,5,6",
              value_parser = clap::value_parser!(i32).range(1..))]
        windows: Vec<i32>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Compares the enveloping-algebra composites with the bracket table.
    Realize {
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i32).range(1..))]
        window: i32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Adjoint or superadjoint conditions on every in-window generator.
    Involutions {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[command(flatten)]
        point: Point,
        #[arg(long, default_value_t = 4, value_parser = clap::value_parser!(i32).range(1..))]
        window: i32,
        #[arg(long)]
        extended: bool,
        /// Seed for the antilinearity samples.
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug)]
struct Point {
    #[arg(long, value_parser = parse_spin, allow_hyphen_values = true)]
    l1: HalfInt,
    #[arg(long, value_parser = parse_spin, allow_hyphen_values = true)]
    l2: HalfInt,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads; defaults to the number of cores.
    #[arg(long, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RhoArg {
    Corrected,
    TheoremVerbatim,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FormatArg {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Adjoint,
    Superadjoint,
}

fn config(point: Point, out: OutputArgs, command: Command, windows: Vec<i32>) -> RunConfig {
    let mut cfg = RunConfig::new(command, point.l1, point.l2, 1);
    cfg.windows = windows;
    cfg.format = match out.format {
        FormatArg::Json => Format::Json,
        FormatArg::Table => Format::Table,
    };
    cfg.output = out.output;
    cfg.workers = out.workers.map(usize::from);
    cfg
}

impl From<Sub> for RunConfig {
    fn from(sub: Sub) -> Self {
        match sub {
            Sub::Jacobi { point, window, extended, rho_mode, theorem_verbatim, out } => {
                let mut cfg = config(point, out, Command::Jacobi, vec![window]);
                cfg.extended = extended;
                cfg.rho = match (rho_mode, theorem_verbatim) {
                    (RhoArg::TheoremVerbatim, _) | (_, true) => RhoMode::TheoremVerbatim,
                    _ => RhoMode::Corrected,
                };
                cfg
            }
            Sub::Classify { point, windows, out } => config(point, out, Command::Classify, windows),
            Sub::Realize { point, window, out } => config(point, out, Command::Realize, vec![window]),
            Sub::Involutions { kind, point, window, extended, seed, out } => {
                let kind = match kind {
                    KindArg::Adjoint => InvolutionKind::Adjoint,
                    KindArg::Superadjoint => InvolutionKind::Superadjoint,
                };
                let mut cfg = config(point, out, Command::Involutions(kind), vec![window]);
                cfg.extended = extended;
                cfg.seed = seed;
                cfg
            }
        }
    }
}

/// A finished run: the rendered report and whether every check passed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub report: String,
    pub passed: bool,
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            EXIT_OK
        } else {
            EXIT_FAILURE
        }
    }
}

/// Runs `cfg` and renders its report. Errors are parameter errors.
pub fn execute(cfg: &RunConfig) -> Result<Outcome, Error> {
    let p = cfg.params()?;
    let drivers = Drivers::new(cfg.workers).expect("thread pool");
    let table = cfg.format == Format::Table;
    let render = |json: String, table_text: String| if table { table_text } else { json };
    Ok(match cfg.command {
        Command::Jacobi => {
            let r = JacobiJson::from(&drivers.jacobi(&p, &cfg.largest_window()?));
            Outcome {
                passed: r.passed,
                report: render(to_json(&r), r.table()),
            }
        }
        Command::Classify => {
            let windows = cfg.windows()?;
            let reports = drivers.classify_windows(&p, &windows);
            let r = ClassifyJson::new(&reports, &scan_of(&p, &reports));
            Outcome {
                passed: r.theorem_match,
                report: render(to_json(&r), r.table()),
            }
        }
        Command::Realize => {
            let r = RealizeJson::from(&drivers.realization(&p, &cfg.largest_window()?)?);
            Outcome {
                passed: r.passed,
                report: render(to_json(&r), r.table()),
            }
        }
        Command::Involutions(kind) => {
            let w = cfg.largest_window()?;
            let r = InvolutionJson::new(&drivers.involution(kind, &p, &w, cfg.seed)?, cfg.seed);
            Outcome {
                passed: r.passed,
                report: render(to_json(&r), r.table()),
            }
        }
    })
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(stderr, "{text}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{text}");
                EXIT_OK
            };
        }
    };
    let cfg = RunConfig::from(cli.command);
    let outcome = match execute(&cfg) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &cfg.output {
        Some(path) => std::fs::write(path, &outcome.report),
        None => stdout.write_all(outcome.report.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(stderr, "error: cannot write report: {e}");
        return EXIT_USAGE;
    }
    outcome.exit_code()
}
