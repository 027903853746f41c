//! Library side of the `wienerlab` command-line tool: settings resolution,
//! sweeps, moment tables and output encoding. The binary is a thin wrapper.

use std::path::PathBuf;

pub mod moments;
pub mod settings;
pub mod simulate;
pub mod sweep;
pub mod table;

pub use moments::{moments_table, run_moments, MomentRow};
pub use settings::{DbRange, Format, LRule, MomentsSpec, Settings, SimulateSpec, SweepSpec, Units};
pub use sweep::{run_sweep, sweep_table, SlopeSummary, SweepReport, SweepRow};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("invalid settings: {0}")]
    Spec(String),
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("config file {}: {source}", path.display())]
    Config {
        path: PathBuf,
        source: serde_json::Error,
    },
    #[error(transparent)]
    Model(#[from] wienerlab::Error),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    fn stdout(source: std::io::Error) -> Self {
        CliError::io("<output>", source)
    }
}

/// Runs `f` on a pool of `threads` workers, or on the global pool.
pub fn with_threads<R: Send>(
    threads: Option<usize>,
    f: impl FnOnce() -> R + Send,
) -> Result<R, CliError> {
    match threads {
        Some(0) => Err(CliError::Spec("--threads must be at least 1".into())),
        Some(n) => Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()?
            .install(f)),
        None => Ok(f()),
    }
}
