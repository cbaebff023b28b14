//! The `steerbh` command line: `point`, `sweep`, `transitions` and `verify`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 numerical failure, 4 I/O failure.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analytic::transition_temperature;
use crate::error::Error;
use crate::output::{json_num, oracle_json, point_json, sweep_json, write_csv, SCHEMA_VERSION};
use crate::sweep::{
    asymmetry_peak, evaluate_point, find_transition, run_sweep, verify_oracle, SweepAxis, SweepConfig, TransitionKind,
    ORACLE_TOL,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Points in the local sweep used to locate the asymmetry peak.
const PEAK_POINTS: usize = 2001;

#[derive(Debug, Parser)]
#[command(name = "steerbh", version, about = "Gaussian steering monogamy under the Hawking effect")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Full steering report at one (s, omega, T).
    Point(PointArgs),
    /// Steering reports over a Hawking-temperature grid.
    Sweep(SweepArgs),
    /// Locate the A->B sudden death and Bbar->B sudden birth.
    Transitions(TransitionArgs),
    /// Compare the numeric pipeline with the closed forms over a grid.
    Verify(SweepArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, Args)]
struct Common {
    /// Initial two-mode squeezing.
    #[arg(long = "s", default_value_t = 1.0, allow_negative_numbers = true)]
    s: f64,
    /// Field-mode frequency.
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    omega: f64,
    /// Output file; standard output when absent.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct PointArgs {
    #[command(flatten)]
    common: Common,
    /// Hawking temperature (0 allowed).
    #[arg(long, allow_negative_numbers = true)]
    temp: f64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 0.05, allow_negative_numbers = true)]
    tmin: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    tmax: f64,
    #[arg(long, default_value_t = 60)]
    points: usize,
    /// Space grid points uniformly in channel squeezing instead of temperature.
    #[arg(long)]
    squeezing_axis: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    #[arg(long, default_value_t = ORACLE_TOL)]
    tolerance: f64,
    /// Also run the closed-form check; exit 1 if it fails.
    #[arg(long)]
    check: bool,
}

impl SweepArgs {
    fn config(&self) -> SweepConfig {
        SweepConfig {
            s: self.common.s,
            omega: self.common.omega,
            t_min: self.tmin,
            t_max: self.tmax,
            n_points: self.points,
            tolerance: self.tolerance,
            axis: if self.squeezing_axis { SweepAxis::Squeezing } else { SweepAxis::Temperature },
        }
    }
}

#[derive(Debug, Args)]
struct TransitionArgs {
    #[command(flatten)]
    common: Common,
}

enum Failure {
    Usage(String),
    Numeric(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) => Failure::Usage(e.to_string()),
            _ => Failure::Numeric(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn open_output<'a>(path: &Option<PathBuf>, stdout: &'a mut dyn Write) -> Result<Box<dyn Write + 'a>, Failure> {
    match path {
        Some(p) => {
            let file = File::create(p).map_err(|e| Failure::Io(format!("{}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(file)))
        }
        None => Ok(Box::new(stdout)),
    }
}

fn write_json(out: &mut dyn Write, value: &Value) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut *out, value).map_err(|e| Failure::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn cmd_point(args: &PointArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let Common { s, omega, ref output } = args.common;
    let row = evaluate_point(s, omega, args.temp)?;
    let mut out = open_output(output, stdout)?;
    match args.format {
        Format::Csv => write_csv(&mut out, std::slice::from_ref(&row))?,
        Format::Json => write_json(&mut out, &point_json(s, omega, &row))?,
    }
    out.flush()?;
    Ok(EXIT_OK)
}

fn cmd_sweep(args: &SweepArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, Failure> {
    let config = args.config();
    let rows = run_sweep(&config)?;
    let mut out = open_output(&args.common.output, stdout)?;
    match args.format {
        Format::Csv => write_csv(&mut out, &rows)?,
        Format::Json => write_json(&mut out, &sweep_json(config.s, config.omega, &rows))?,
    }
    out.flush()?;
    drop(out);
    if args.check {
        let report = verify_oracle(&config)?;
        if !report.pass {
            writeln!(stderr, "closed-form check failed:")?;
            write_json(stderr, &oracle_json(config.s, config.omega, &report))?;
            return Ok(EXIT_VERIFY);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_transitions(args: &TransitionArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let Common { s, omega, ref output } = args.common;
    if !(s > 0.0) {
        return Err(Failure::Usage(format!("transitions need --s > 0, got {s}")));
    }
    let closed = transition_temperature(s, omega)?;
    let death = find_transition(s, omega, TransitionKind::AToBDeath)?;
    let birth = find_transition(s, omega, TransitionKind::BbarToBBirth)?;
    let local =
        SweepConfig { s, omega, t_min: 0.9 * closed, t_max: 1.1 * closed, n_points: PEAK_POINTS, ..Default::default() };
    let rows = run_sweep(&local)?;
    let (peak_t, peak) = asymmetry_peak(&rows, 0).expect("nonempty sweep");
    let value = json!({
        "schema": SCHEMA_VERSION,
        "params": { "s": json_num(s), "omega": json_num(omega) },
        "T_death_A_to_B": json_num(death),
        "T_birth_Bbar_to_B": json_num(birth),
        "difference": json_num(death - birth),
        "T_closed_form": json_num(closed),
        "T_asymmetry_peak": json_num(peak_t),
        "Dasym_AB_Bbar_peak": json_num(peak),
        "asymmetry_grid_step": json_num(local.step()),
    });
    let mut out = open_output(output, stdout)?;
    write_json(&mut out, &value)?;
    out.flush()?;
    Ok(EXIT_OK)
}

fn cmd_verify(args: &SweepArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let config = args.config();
    let report = verify_oracle(&config)?;
    let mut out = open_output(&args.common.output, stdout)?;
    write_json(&mut out, &oracle_json(config.s, config.omega, &report))?;
    out.flush()?;
    Ok(if report.pass { EXIT_OK } else { EXIT_VERIFY })
}

/// Parse `args` (including the program name) and run the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let result = match &cli.command {
        Command::Point(a) => cmd_point(a, stdout),
        Command::Sweep(a) => cmd_sweep(a, stdout, stderr),
        Command::Transitions(a) => cmd_transitions(a, stdout),
        Command::Verify(a) => cmd_verify(a, stdout),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}\n\nRun `steerbh --help` for usage.");
            EXIT_USAGE
        }
        Err(Failure::Numeric(msg)) => {
            let _ = writeln!(stderr, "numerical failure: {msg}");
            EXIT_NUMERIC
        }
        Err(Failure::Io(msg)) => {
            let _ = writeln!(stderr, "i/o failure: {msg}");
            EXIT_IO
        }
    }
}
