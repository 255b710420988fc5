//! `plasmon-casimir`: parameter sweeps over the plasmonic Casimir model.
//!
//! Exit status is 0 on success, 1 when a computation or validation check
//! fails and 2 for malformed invocations.

mod commands;
mod table;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use plasmon_casimir::energy::SplitScheme;
use plasmon_casimir::{QuadratureSpec, ScaledParams};

use table::{OutputFormat, Table};

#[derive(Debug, Parser)]
#[command(
    name = "plasmon-casimir",
    version,
    about = "Plasmon dispersion and Casimir energy between plasma mirrors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Branch dispersion Omega(K) with light line and bulk edge.
    Dispersion(Common),
    /// Correction factor of the chosen splitting scheme over L/lambda_p.
    Eta(Common),
    /// Change of the mode density of both coupled branches.
    Dos(Common),
    /// Plasmonic, photonic and total energy over L/lambda_p.
    Energy(Common),
    /// Short- and large-distance constants.
    Asymptotics(Common),
    /// Recompute the published constants and report pass/fail.
    Validate(Common),
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Scaled plasma frequency Omega_p = omega_p L / c.
    #[arg(long, conflicts_with = "distance_ratio", allow_negative_numbers = true)]
    pub omega_p: Option<f64>,
    /// Mirror separation in units of the plasma wavelength, L/lambda_p.
    #[arg(long, allow_negative_numbers = true)]
    pub distance_ratio: Option<f64>,
    /// Number of grid points.
    #[arg(long)]
    pub grid: Option<usize>,
    /// Lower end of the grid (L/lambda_p for eta and energy, omega/omega_p for dos, z for dispersion).
    #[arg(long, allow_negative_numbers = true)]
    pub grid_min: Option<f64>,
    /// Upper end of the grid, in the same units as --grid-min.
    #[arg(long, allow_negative_numbers = true)]
    pub grid_max: Option<f64>,
    #[arg(long, default_value = "adiabatic")]
    pub scheme: SplitScheme,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,
    /// Absolute quadrature tolerance.
    #[arg(long, default_value_t = QuadratureSpec::default().abs_tol)]
    pub abs_tol: f64,
    /// Relative quadrature tolerance.
    #[arg(long, default_value_t = QuadratureSpec::default().rel_tol)]
    pub rel_tol: f64,
    /// Output file, or `-` for standard output.
    #[arg(long, default_value = "-")]
    pub output: PathBuf,
    /// Scale factor applied to g_+ inside the Gamma computation (test hook).
    #[arg(long, hide = true, default_value_t = 1.0)]
    pub corrupt_g_plus: f64,
}

impl Common {
    pub fn spec(&self) -> Result<QuadratureSpec, AppError> {
        QuadratureSpec::new(
            self.abs_tol,
            self.rel_tol,
            QuadratureSpec::default().max_subdivisions,
        )
        .map_err(|e| AppError::Usage(e.to_string()))
    }

    /// Single-point parameters from `--omega-p`/`--distance-ratio`, if given.
    pub fn point(&self) -> Result<Option<ScaledParams>, AppError> {
        let p = match (self.omega_p, self.distance_ratio) {
            (Some(w), _) => ScaledParams::new(w),
            (None, Some(r)) => ScaledParams::from_distance_ratio(r),
            (None, None) => return Ok(None),
        };
        p.map(Some).map_err(|e| AppError::Usage(e.to_string()))
    }

    pub fn point_or(&self, default_ratio: f64) -> Result<ScaledParams, AppError> {
        match self.point()? {
            Some(p) => Ok(p),
            None => ScaledParams::from_distance_ratio(default_ratio)
                .map_err(|e| AppError::Failure(e.into())),
        }
    }
}

#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Failure(anyhow::Error),
}

impl From<plasmon_casimir::Error> for AppError {
    fn from(e: plasmon_casimir::Error) -> Self {
        AppError::Failure(e.into())
    }
}

impl From<anyhow::Error> for AppError {
    fn from(e: anyhow::Error) -> Self {
        AppError::Failure(e)
    }
}

fn emit(table: &Table, common: &Common) -> Result<(), AppError> {
    let mut out: Box<dyn Write> = if common.output.as_os_str() == "-" {
        Box::new(BufWriter::new(io::stdout().lock()))
    } else {
        let file = File::create(&common.output).map_err(|e| {
            AppError::Usage(format!("cannot create {}: {e}", common.output.display()))
        })?;
        Box::new(BufWriter::new(file))
    };
    table.write(common.format, &mut out)?;
    out.flush().map_err(|e| AppError::Failure(e.into()))
}

fn run(cli: Cli) -> Result<bool, AppError> {
    let (table, passed, common) = match &cli.command {
        Command::Dispersion(c) => (commands::dispersion(c)?, true, c),
        Command::Eta(c) => (commands::eta(c)?, true, c),
        Command::Dos(c) => (commands::dos(c)?, true, c),
        Command::Energy(c) => (commands::energy(c)?, true, c),
        Command::Asymptotics(c) => (commands::asymptotics(c)?, true, c),
        Command::Validate(c) => {
            let (table, passed) = commands::validate(c)?;
            (table, passed, c)
        }
    };
    if let Some(warning) = common.scheme.warning() {
        eprintln!("warning: {warning}");
    }
    emit(&table, common)?;
    Ok(passed)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("validation failed");
            ExitCode::from(1)
        }
        Err(AppError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Failure(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
