//! `vertexlab`: counting, conversion and identity checks from the command line.
//!
//! Exit codes: 0 success, 1 identity failure, 2 size cap exceeded,
//! 3 malformed input.

mod commands;
mod report;

use std::io::{Read as _, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use vertexlab::exec::Exec;
use vertexlab::schur::Partition;
use vertexlab::verify::Level;

use commands::{CountKind, IzerginArgs, LrMethod, Repr, SchurMethod};
use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(
    name = "vertexlab",
    version,
    about = "Exact six-vertex, ASM, Schur and puzzle computations"
)]
struct Cli {
    /// Seed for every randomly drawn parameter.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,
    /// Worker threads; 1 runs sequentially, 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Include ASCII renderings of the objects involved.
    #[arg(long, global = true)]
    emit_diagram: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Enumerate and compare with the closed form.
    Count {
        #[arg(value_enum)]
        kind: CountKind,
        n: usize,
    },
    /// Convert a representation (read from a file or `-` for stdin).
    Convert {
        #[arg(long, value_enum)]
        from: Repr,
        #[arg(long, value_enum)]
        to: Repr,
        input: String,
    },
    /// Determinant formula against brute-force summation.
    Izergin {
        /// Size used when the parameter lists are drawn.
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        xs: Option<String>,
        #[arg(long)]
        ys: Option<String>,
    },
    /// Yang-Baxter equation, all 64 entries.
    Ybe {
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long)]
        z: Option<String>,
    },
    /// λ-determinant of a matrix as a polynomial in λ.
    Ldet {
        /// JSON rows, entries as numbers or "p/q" strings.
        #[arg(long)]
        matrix: Option<String>,
        /// Size of a drawn matrix when none is given.
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Also evaluate at this λ.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    #[command(subcommand)]
    Schur(SchurCmd),
    /// Product of two Schur polynomials.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long, value_enum, default_value_t = LrMethod::Puzzle)]
        method: LrMethod,
        /// Write every puzzle as JSON to this file.
        #[arg(long)]
        emit_puzzles: Option<PathBuf>,
    },
    /// Cauchy identity as truncated power series.
    Cauchy(CauchyArgs),
    /// Run the built-in identity checks.
    Selftest {
        #[arg(long, value_enum, default_value_t = LevelArg::Fast)]
        level: LevelArg,
        /// Run a single check by number.
        #[arg(long)]
        only: Option<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum SchurCmd {
    /// Evaluate a Schur polynomial by one or more methods.
    Eval {
        #[arg(long)]
        shape: String,
        /// Comma-separated values such as 2/1,3,1/2+i.
        #[arg(long, allow_hyphen_values = true)]
        vars: String,
        /// Defaults to every method.
        #[arg(long, value_enum, value_delimiter = ',')]
        method: Vec<SchurMethod>,
    },
    Cauchy(CauchyArgs),
}

#[derive(Args, Debug)]
struct CauchyArgs {
    #[arg(long, default_value_t = 2)]
    m: usize,
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Partitions up to this size, so series up to twice this degree.
    #[arg(long, default_value_t = 4)]
    degree: u32,
    /// Also check the single-variable telescoping sum up to this bound.
    #[arg(long)]
    telescoping: Option<u32>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum LevelArg {
    Fast,
    Full,
}

fn partition(s: &str) -> Result<Partition> {
    s.parse::<Partition>()
        .with_context(|| format!("bad partition {s:?}"))
}

fn read_input(path: &str) -> Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn run(cli: &Cli, exec: Exec) -> Result<Report> {
    let diagrams = cli.emit_diagram;
    match &cli.cmd {
        Command::Count { kind, n } => commands::count(*kind, *n, exec, diagrams),
        Command::Convert { from, to, input } => {
            commands::convert(*from, *to, &read_input(input)?, diagrams)
        }
        Command::Izergin { n, q, xs, ys } => {
            let a = IzerginArgs {
                n: *n,
                q: q.clone(),
                xs: xs.clone(),
                ys: ys.clone(),
            };
            commands::izergin_cmd(&a, cli.seed, exec)
        }
        Command::Ybe { q, x, y, z } => commands::ybe_cmd(
            [q.as_deref(), x.as_deref(), y.as_deref(), z.as_deref()],
            cli.seed,
        ),
        Command::Ldet { matrix, n, at } => {
            commands::ldet_cmd(matrix.as_deref(), *n, at.as_deref(), cli.seed, exec)
        }
        Command::Schur(SchurCmd::Eval {
            shape,
            vars,
            method,
        }) => commands::schur_eval(
            &partition(shape)?,
            &commands::parse_scalars(vars)?,
            method,
            exec,
        ),
        Command::Schur(SchurCmd::Cauchy(a)) | Command::Cauchy(a) => {
            commands::cauchy_cmd(a.m, a.n, a.degree, a.telescoping)
        }
        Command::Lr {
            lambda,
            mu,
            method,
            emit_puzzles,
        } => commands::lr_cmd(
            &partition(lambda)?,
            &partition(mu)?,
            *method,
            exec,
            diagrams,
            emit_puzzles.as_deref(),
        ),
        Command::Selftest { level, only } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            commands::selftest(level, *only, cli.seed, exec)
        }
    }
}

fn exit_code(e: &anyhow::Error) -> u8 {
    match e.downcast_ref::<vertexlab::Error>() {
        Some(vertexlab::Error::SizeTooLarge { .. } | vertexlab::Error::CapExceeded { .. }) => 2,
        _ => 3,
    }
}

#[cfg(feature = "parallel")]
fn run_with_jobs(cli: &Cli) -> Result<Report> {
    if cli.jobs == 1 {
        return run(cli, Exec::Sequential);
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs)
        .build()
        .context("building thread pool")?;
    pool.install(|| run(cli, Exec::Parallel))
}

#[cfg(not(feature = "parallel"))]
fn run_with_jobs(cli: &Cli) -> Result<Report> {
    run(cli, Exec::Sequential)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run_with_jobs(&cli) {
        Ok(report) => {
            let mut out = std::io::stdout().lock();
            let _ = out.write_all(report.render(cli.format, cli.seed).as_bytes());
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
