use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use wienerlab_cli::table::{check_writable, emit};
use wienerlab_cli::{
    moments, settings::DbRange, simulate, sweep, with_threads, CliError, Settings,
};

#[derive(Parser)]
#[command(
    name = "wienerlab",
    version,
    about = "Rate bounds and fade statistics for the Wiener phase-noise channel"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct Common {
    /// JSON file with defaults for any of the flags (flags win)
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(flatten)]
    settings: Settings,
}

impl Common {
    fn resolve(self) -> Result<Settings, CliError> {
        match &self.config {
            Some(path) => Ok(self.settings.over(Settings::from_json_file(path)?)),
            None => Ok(self.settings),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Analytic (and optionally Monte Carlo) bounds over an SNR grid
    Sweep(Common),
    /// Fade moments against their small-delta limit and a Monte Carlo oracle
    Moments(Common),
    /// Both bounds at a single SNR
    Bound(Common),
    /// Dump the received samples and latents of a few symbols
    Simulate(Common),
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Sweep(c) => {
            let spec = c.resolve()?.sweep_spec(0, DbRange::new(40.0, 80.0, 5.0)?)?;
            check_writable(spec.output_path.as_deref())?;
            let report = with_threads(spec.threads, || sweep::run_sweep(&spec, true))??;
            eprintln!("{}", report.slope.describe());
            let table = sweep::sweep_table(&spec, &report, "sweep");
            emit(spec.output_path.as_deref(), |w| table.write(spec.format, w))
        }
        Command::Bound(c) => {
            let spec = c.resolve()?.sweep_spec(100_000, DbRange::single(30.0)?)?;
            if spec.grid.points().len() != 1 {
                return Err(CliError::Spec("`bound` takes a single --snr-db".into()));
            }
            check_writable(spec.output_path.as_deref())?;
            let report = with_threads(spec.threads, || sweep::run_sweep(&spec, false))??;
            let row = &report.rows[0];
            eprintln!(
                "snr {} dB, L = {}: analytic {} nats, monte carlo {} nats",
                row.snr_db,
                row.samples_per_symbol,
                row.analytic_lb_nats,
                match (row.mc_lb_nats, row.mc_stderr) {
                    (Some(v), Some(se)) => format!("{v} +- {se}"),
                    _ => "skipped".into(),
                }
            );
            let table = sweep::sweep_table(&spec, &report, "bound");
            emit(spec.output_path.as_deref(), |w| table.write(spec.format, w))
        }
        Command::Moments(c) => {
            let spec = c.resolve()?.moments_spec()?;
            check_writable(spec.output_path.as_deref())?;
            let rows = with_threads(spec.threads, || moments::run_moments(&spec, true))??;
            let table = moments::moments_table(&spec, &rows);
            emit(spec.output_path.as_deref(), |w| table.write(spec.format, w))
        }
        Command::Simulate(c) => {
            let settings = c.resolve()?;
            let spec = settings.simulate_spec()?;
            with_threads(settings.threads, || {
                emit(spec.output_path.as_deref(), |w| {
                    simulate::run_simulate(&spec, w)
                        .map_err(|e| std::io::Error::other(e.to_string()))
                })
            })?
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
