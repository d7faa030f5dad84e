//! Command-line interface: `fit`, `sample`, `svg`, `bench` and `grid-stats`.
//!
//! Exit status: 0 success, 2 bad arguments, 3 coincident endpoints, 4 excluded
//! angle configuration, 5 no convergence, 1 anything else.

pub mod bench;
pub mod output;

use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::fitter::{build_clothoid, FitConfig, FitResult, GuessVariant, HermiteData};

pub const EXIT_OTHER: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_DEGENERATE: u8 = 3;
pub const EXIT_EXCLUDED: u8 = 4;
pub const EXIT_NO_CONVERGENCE: u8 = 5;

/// Fit a single clothoid segment to two points with tangent angles.
#[derive(Debug, Parser)]
#[command(name = "clothoid-fit", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fit and print kappa, kappa_prime, L, A, iterations and residuals.
    Fit {
        #[command(flatten)]
        data: EndpointArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit and print `n` equally spaced points of the curve.
    Sample {
        #[command(flatten)]
        data: EndpointArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Fit and render the curve as an SVG polyline.
    Svg {
        #[command(flatten)]
        data: EndpointArgs,
        #[command(flatten)]
        solver: SolverArgs,
        #[arg(long, default_value_t = 200)]
        n: usize,
        #[arg(long, default_value_t = 800.0, value_parser = positive)]
        width: f64,
        #[arg(long, default_value_t = 600.0, value_parser = positive)]
        height: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the reference fitting problems and report iterations and errors.
    Bench {
        #[command(flatten)]
        solver: SolverArgs,
        /// Also run the iteration-count experiment on the full 1024×1024 grid.
        #[arg(long)]
        full_grid: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Histogram of Newton iterations over a grid of chord-relative angles.
    GridStats {
        #[arg(long, default_value_t = 64)]
        grid_n: usize,
        #[arg(long, default_value_t = 1e-10, value_parser = finite)]
        tol: f64,
        #[arg(long, default_value_t = 100)]
        max_iter: usize,
        #[arg(long, default_value = "quintic", value_parser = guess)]
        guess: GuessVariant,
        /// Solve the cells on all cores.
        #[arg(long)]
        parallel: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct EndpointArgs {
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    pub x0: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    pub y0: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    pub theta0: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    pub x1: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    pub y1: f64,
    #[arg(long, allow_hyphen_values = true, value_parser = finite)]
    pub theta1: f64,
}

impl EndpointArgs {
    pub fn data(&self) -> HermiteData {
        HermiteData::new(self.x0, self.y0, self.theta0, self.x1, self.y1, self.theta1)
    }
}

#[derive(Debug, Clone, Copy, Args)]
pub struct SolverArgs {
    #[arg(long, default_value_t = 1e-12, value_parser = finite)]
    pub tol: f64,
    #[arg(long, default_value_t = 100)]
    pub max_iter: usize,
    #[arg(long, default_value = "quintic", value_parser = guess)]
    pub guess: GuessVariant,
}

impl SolverArgs {
    pub fn config(&self) -> FitConfig {
        FitConfig {
            tol: self.tol,
            max_iter: self.max_iter,
            guess_variant: self.guess,
            ..FitConfig::default()
        }
    }
}

fn finite(s: &str) -> Result<f64, String> {
    let v: f64 = s.trim().parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(format!("'{s}' is not a finite number"))
    }
}

fn positive(s: &str) -> Result<f64, String> {
    let v = finite(s)?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("'{s}' must be positive"))
    }
}

fn guess(s: &str) -> Result<GuessVariant, String> {
    s.parse()
}

/// A failed command: exit status plus message for standard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::DegenerateInput => EXIT_DEGENERATE,
            Error::ExcludedAngles { .. } => EXIT_EXCLUDED,
            Error::NoConvergence { .. } | Error::SingularDerivative { .. } => EXIT_NO_CONVERGENCE,
            Error::InvalidConfig(_) | Error::TooFewSamples(_) | Error::NonFinite(_) => EXIT_USAGE,
            _ => EXIT_OTHER,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Self {
            code: EXIT_OTHER,
            message: e.to_string(),
        }
    }
}

/// Parses `args` (program name first), runs the command and reports the exit status.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(&cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => std::fs::write(path, text)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

fn fit(data: &EndpointArgs, solver: &SolverArgs) -> Result<FitResult, Failure> {
    Ok(build_clothoid(&data.data(), &solver.config())?)
}

/// Runs a parsed command, writing its output to `--out` or standard output.
pub fn execute(command: &Command) -> Result<(), Failure> {
    match command {
        Command::Fit {
            data,
            solver,
            format,
            out,
        } => {
            let fit = fit(data, solver)?;
            let text = match format {
                Format::Json => output::fit_json(&fit),
                Format::Csv => output::fit_csv(&fit),
            };
            emit(out, &text)
        }
        Command::Sample {
            data,
            solver,
            n,
            format,
            out,
        } => {
            if *n < 2 {
                return Err(Error::TooFewSamples(*n).into());
            }
            let rows = fit(data, solver)?.curve.sample(*n)?;
            let text = match format {
                Format::Csv => output::samples_csv(&rows),
                Format::Json => output::samples_json(&rows),
            };
            emit(out, &text)
        }
        Command::Svg {
            data,
            solver,
            n,
            width,
            height,
            out,
        } => {
            if *n < 2 {
                return Err(Error::TooFewSamples(*n).into());
            }
            let rows = fit(data, solver)?.curve.sample(*n)?;
            emit(out, &output::samples_svg(&rows, *width, *height))
        }
        Command::Bench {
            solver,
            full_grid,
            out,
        } => {
            let cfg = solver.config();
            cfg.validate()?;
            let mut text = bench_report(&bench::run_bench(&cfg));
            if *full_grid {
                let grid_cfg = FitConfig { tol: 1e-10, ..cfg };
                let stats = bench::grid_stats(1024, &grid_cfg, true)?;
                text.push('\n');
                text.push_str(&grid_report(&stats, grid_cfg.guess_variant));
            }
            emit(out, &text)
        }
        Command::GridStats {
            grid_n,
            tol,
            max_iter,
            guess,
            parallel,
            out,
        } => {
            let cfg = FitConfig {
                tol: *tol,
                max_iter: *max_iter,
                guess_variant: *guess,
                ..FitConfig::default()
            };
            let stats = bench::grid_stats(*grid_n, &cfg, *parallel)?;
            emit(out, &grid_report(&stats, *guess))
        }
    }
}

/// One line per case: name, iterations, endpoint error, time, PASS/FAIL.
pub fn bench_report(rows: &[bench::BenchRow]) -> String {
    let mut text = format!(
        "{:<12} {:>5} {:>24} {:>12} {}\n",
        "case", "iter", "endpoint_error", "time_us", "status"
    );
    for r in rows {
        let iter = r.iterations.map_or("-".to_string(), |i| i.to_string());
        let err = r.endpoint_error.map_or("-".to_string(), output::num);
        let status = if r.pass { "PASS" } else { "FAIL" };
        write!(
            text,
            "{:<12} {:>5} {:>24} {:>12.1} {}",
            r.name,
            iter,
            err,
            r.elapsed.as_secs_f64() * 1e6,
            status
        )
        .unwrap();
        if let Some(e) = &r.error {
            write!(text, " ({e})").unwrap();
        }
        text.push('\n');
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    writeln!(text, "{} cases, {} failed", rows.len(), failed).unwrap();
    text
}

/// Iteration histogram with counts and percentages.
pub fn grid_report(stats: &bench::GridStats, guess: GuessVariant) -> String {
    let total = stats.total();
    let mut text = format!(
        "grid {n}x{n}, guess {guess}, {total} cells, {f} failures\n",
        n = stats.grid_n,
        f = stats.failures
    );
    text.push_str("iterations,count,percent\n");
    for (it, &count) in stats.histogram.iter().enumerate() {
        writeln!(text, "{it},{count},{:.2}", 100.0 * count as f64 / total as f64).unwrap();
    }
    match stats.max_iterations() {
        Some(m) => writeln!(text, "max iterations: {m}").unwrap(),
        None => writeln!(text, "max iterations: -").unwrap(),
    }
    text
}
