//! Flag and config-file settings, and their resolution into run specs.
//!
//! Every setting can come from a command-line flag or from a JSON config file
//! with the same keys (`snr_db_range`, `L`, `L_rule`, `J`, ...). Flags win over
//! the file, the file wins over built-in defaults.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum LRuleKind {
    /// `L = ceil(beta sqrt(snr))`
    Sqrt,
    /// `L` given by `--L`
    Fixed,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Units {
    #[default]
    Nats,
    Bits,
}

impl Units {
    pub fn suffix(self) -> &'static str {
        match self {
            Units::Nats => "nats",
            Units::Bits => "bits",
        }
    }

    /// Converts a value in nats.
    pub fn scale(self, nats: f64) -> f64 {
        match self {
            Units::Nats => nats,
            Units::Bits => nats / std::f64::consts::LN_2,
        }
    }
}

/// An SNR grid `start:stop:step` in dB, inclusive of both ends.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct DbRange {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl DbRange {
    pub fn new(start: f64, stop: f64, step: f64) -> Result<Self, CliError> {
        if !(start.is_finite() && stop.is_finite() && step.is_finite()) {
            return Err(CliError::Spec(format!(
                "non-finite SNR range {start}:{stop}:{step}"
            )));
        }
        if start > stop {
            return Err(CliError::Spec(format!(
                "SNR range start {start} dB exceeds stop {stop} dB"
            )));
        }
        if step <= 0.0 {
            return Err(CliError::Spec(format!(
                "SNR range step must be positive, got {step}"
            )));
        }
        Ok(Self { start, stop, step })
    }

    pub fn single(db: f64) -> Result<Self, CliError> {
        Self::new(db, db, 1.0)
    }

    /// Grid points, computed as `start + i * step` so no error accumulates.
    pub fn points(&self) -> Vec<f64> {
        let n = ((self.stop - self.start) / self.step * (1.0 + 1e-12)).floor() as usize + 1;
        (0..n).map(|i| self.start + i as f64 * self.step).collect()
    }
}

impl FromStr for DbRange {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(CliError::Spec(format!("expected A:B:S, got {s:?}")));
        };
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| CliError::Spec(format!("bad number {t:?} in SNR range {s:?}")))
        };
        Self::new(num(a)?, num(b)?, num(c)?)
    }
}

impl TryFrom<String> for DbRange {
    type Error = CliError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<DbRange> for String {
    fn from(r: DbRange) -> String {
        r.to_string()
    }
}

impl fmt::Display for DbRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.start, self.stop, self.step)
    }
}

/// Settings shared by every subcommand. Unset fields fall through to the
/// config file and then to defaults.
#[derive(Debug, Clone, Default, PartialEq, clap::Args, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Settings {
    /// Laser linewidth (FWHM) in units of 1/Ts
    #[arg(long)]
    pub beta: Option<f64>,
    /// Noise variance sigma2_N
    #[arg(long)]
    pub sigma2: Option<f64>,
    /// Single SNR point in dB
    #[arg(long = "snr-db", allow_negative_numbers = true)]
    pub snr_db: Option<f64>,
    /// SNR grid A:B:S in dB
    #[arg(long = "snr-db-range", allow_hyphen_values = true)]
    pub snr_db_range: Option<DbRange>,
    /// Samples per symbol (implies --L-rule fixed unless a rule is given)
    #[arg(long = "L")]
    #[serde(rename = "L")]
    pub l: Option<usize>,
    /// How the samples per symbol follow the SNR
    #[arg(long = "L-rule", value_enum)]
    #[serde(rename = "L_rule")]
    pub l_rule: Option<LRuleKind>,
    /// Phase sub-steps per sample interval
    #[arg(long = "J")]
    #[serde(rename = "J")]
    pub j: Option<usize>,
    /// Monte Carlo trials (0 = analytic only)
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Worker threads (default: all cores)
    #[arg(long)]
    pub threads: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Output file (default: standard output)
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub units: Option<Units>,
    /// Fraction of the grid (from the top) used for the pre-log fit
    #[arg(long = "fit-fraction")]
    pub fit_fraction: Option<f64>,
    /// P_min as a fraction of P in the Monte Carlo input law
    #[arg(long = "pmin-fraction")]
    pub pmin_fraction: Option<f64>,
    /// Comma-separated sample intervals for `moments`
    #[arg(long, value_delimiter = ',')]
    pub delta: Option<Vec<f64>>,
    /// Number of symbols for `simulate`
    #[arg(long)]
    pub symbols: Option<usize>,
}

impl Settings {
    pub fn from_json_file(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        serde_json::from_str(&text).map_err(|source| CliError::Config {
            path: path.to_owned(),
            source,
        })
    }

    /// Fields set here win; the rest come from `lower`.
    pub fn over(self, lower: Settings) -> Settings {
        Settings {
            beta: self.beta.or(lower.beta),
            sigma2: self.sigma2.or(lower.sigma2),
            snr_db: self.snr_db.or(lower.snr_db),
            snr_db_range: self.snr_db_range.or(lower.snr_db_range),
            l: self.l.or(lower.l),
            l_rule: self.l_rule.or(lower.l_rule),
            j: self.j.or(lower.j),
            trials: self.trials.or(lower.trials),
            seed: self.seed.or(lower.seed),
            threads: self.threads.or(lower.threads),
            format: self.format.or(lower.format),
            out: self.out.or(lower.out),
            units: self.units.or(lower.units),
            fit_fraction: self.fit_fraction.or(lower.fit_fraction),
            pmin_fraction: self.pmin_fraction.or(lower.pmin_fraction),
            delta: self.delta.or(lower.delta),
            symbols: self.symbols.or(lower.symbols),
        }
    }

    fn reject(&self, command: &str, unused: &[(&str, bool)]) -> Result<(), CliError> {
        match unused.iter().find(|(_, set)| *set) {
            Some((flag, _)) => Err(CliError::Spec(format!("{flag} is not used by `{command}`"))),
            None => Ok(()),
        }
    }

    fn l_rule(&self) -> Result<LRule, CliError> {
        match (self.l_rule, self.l) {
            (Some(LRuleKind::Fixed), None) => {
                Err(CliError::Spec("--L-rule fixed needs --L".into()))
            }
            (Some(LRuleKind::Sqrt), Some(_)) => {
                Err(CliError::Spec("--L conflicts with --L-rule sqrt".into()))
            }
            (_, Some(0)) => Err(CliError::Spec("--L must be at least 1".into())),
            (_, Some(l)) => Ok(LRule::Fixed(l)),
            (_, None) => Ok(LRule::Sqrt),
        }
    }

    fn grid(&self, default: DbRange) -> Result<DbRange, CliError> {
        match (self.snr_db, self.snr_db_range) {
            (Some(_), Some(_)) => Err(CliError::Spec(
                "give either --snr-db or --snr-db-range".into(),
            )),
            (Some(db), None) => DbRange::single(db),
            (None, Some(r)) => Ok(r),
            (None, None) => Ok(default),
        }
    }

    /// Resolves the settings of `sweep` (and of `bound`, which is a one-point sweep).
    pub fn sweep_spec(
        &self,
        default_trials: usize,
        default_grid: DbRange,
    ) -> Result<SweepSpec, CliError> {
        self.reject(
            "sweep",
            &[
                ("--delta", self.delta.is_some()),
                ("--symbols", self.symbols.is_some()),
            ],
        )?;
        let spec = SweepSpec {
            grid: self.grid(default_grid)?,
            beta: self.beta.unwrap_or(1.0),
            sigma2_n: self.sigma2.unwrap_or(1.0),
            l_rule: self.l_rule()?,
            substeps: self.j.unwrap_or(DEFAULT_SUBSTEPS),
            trials: self.trials.unwrap_or(default_trials),
            seed: self.seed.unwrap_or(DEFAULT_SEED),
            pmin_fraction: self.pmin_fraction.unwrap_or(0.5),
            fit_fraction: self.fit_fraction.unwrap_or(0.5),
            format: self.format.unwrap_or_default(),
            units: self.units.unwrap_or_default(),
            threads: self.threads,
            output_path: self.out.clone(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn moments_spec(&self) -> Result<MomentsSpec, CliError> {
        self.reject(
            "moments",
            &[
                ("--snr-db", self.snr_db.is_some()),
                ("--snr-db-range", self.snr_db_range.is_some()),
                ("--L", self.l.is_some()),
                ("--L-rule", self.l_rule.is_some()),
                ("--units", self.units.is_some()),
                ("--fit-fraction", self.fit_fraction.is_some()),
                ("--pmin-fraction", self.pmin_fraction.is_some()),
                ("--symbols", self.symbols.is_some()),
            ],
        )?;
        let spec = MomentsSpec {
            beta: self.beta.unwrap_or(1.0),
            deltas: self.delta.clone().unwrap_or_else(|| vec![1e-1, 1e-2, 1e-3]),
            substeps: self.j.unwrap_or(512),
            trials: self.trials.unwrap_or(0),
            seed: self.seed.unwrap_or(DEFAULT_SEED),
            format: self.format.unwrap_or_default(),
            threads: self.threads,
            output_path: self.out.clone(),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn simulate_spec(&self) -> Result<SimulateSpec, CliError> {
        self.reject(
            "simulate",
            &[
                ("--snr-db-range", self.snr_db_range.is_some()),
                ("--trials", self.trials.is_some()),
                ("--units", self.units.is_some()),
                ("--fit-fraction", self.fit_fraction.is_some()),
                ("--pmin-fraction", self.pmin_fraction.is_some()),
                ("--delta", self.delta.is_some()),
            ],
        )?;
        if self.format == Some(Format::Json) {
            return Err(CliError::Spec("`simulate` writes CSV only".into()));
        }
        let spec = SimulateSpec {
            snr_db: self.snr_db.unwrap_or(20.0),
            beta: self.beta.unwrap_or(1.0),
            sigma2_n: self.sigma2.unwrap_or(1.0),
            l_rule: self.l_rule()?,
            substeps: self.j.unwrap_or(DEFAULT_SUBSTEPS),
            symbols: self.symbols.unwrap_or(4),
            seed: self.seed.unwrap_or(DEFAULT_SEED),
            output_path: self.out.clone(),
        };
        if spec.symbols == 0 {
            return Err(CliError::Spec("--symbols must be at least 1".into()));
        }
        Ok(spec)
    }
}

pub const DEFAULT_SEED: u64 = 1;
pub const DEFAULT_SUBSTEPS: usize = 64;

/// Samples per symbol as a function of the SNR.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum LRule {
    Fixed(usize),
    Sqrt,
}

impl LRule {
    pub fn samples(&self, beta: f64, snr: f64) -> usize {
        match *self {
            LRule::Fixed(l) => l,
            LRule::Sqrt => wienerlab::channel::sqrt_rule_samples(beta, snr),
        }
    }
}

/// A resolved `sweep` run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepSpec {
    #[serde(rename = "snr_db_range")]
    pub grid: DbRange,
    pub beta: f64,
    pub sigma2_n: f64,
    #[serde(rename = "L_rule")]
    pub l_rule: LRule,
    #[serde(rename = "J")]
    pub substeps: usize,
    pub trials: usize,
    pub seed: u64,
    pub pmin_fraction: f64,
    pub fit_fraction: f64,
    pub format: Format,
    pub units: Units,
    pub threads: Option<usize>,
    /// Not echoed, so the same run written to two paths gives identical files.
    #[serde(skip)]
    pub output_path: Option<PathBuf>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        DbRange::new(self.grid.start, self.grid.stop, self.grid.step)?;
        positive("--beta", self.beta)?;
        positive("--sigma2", self.sigma2_n)?;
        if self.substeps == 0 {
            return Err(CliError::Spec("--J must be at least 1".into()));
        }
        if self.trials > 0 && self.trials < wienerlab::bounds::MIN_BOUND_TRIALS {
            return Err(CliError::Spec(format!(
                "--trials must be 0 or at least {}",
                wienerlab::bounds::MIN_BOUND_TRIALS
            )));
        }
        if !(self.pmin_fraction > 0.0 && self.pmin_fraction < 1.0) {
            return Err(CliError::Spec("--pmin-fraction must lie in (0, 1)".into()));
        }
        if !(self.fit_fraction > 0.0 && self.fit_fraction <= 1.0) {
            return Err(CliError::Spec("--fit-fraction must lie in (0, 1]".into()));
        }
        Ok(())
    }
}

/// A resolved `moments` run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentsSpec {
    pub beta: f64,
    pub deltas: Vec<f64>,
    #[serde(rename = "J")]
    pub substeps: usize,
    pub trials: usize,
    pub seed: u64,
    pub format: Format,
    pub threads: Option<usize>,
    #[serde(skip)]
    pub output_path: Option<PathBuf>,
}

impl MomentsSpec {
    pub fn validate(&self) -> Result<(), CliError> {
        positive("--beta", self.beta)?;
        if self.deltas.is_empty() {
            return Err(CliError::Spec("--delta needs at least one value".into()));
        }
        for &d in &self.deltas {
            positive("--delta", d)?;
        }
        if self.substeps == 0 {
            return Err(CliError::Spec("--J must be at least 1".into()));
        }
        if self.trials > 0 && self.trials < wienerlab::fade::MIN_ORACLE_TRIALS {
            return Err(CliError::Spec(format!(
                "--trials must be 0 or at least {}",
                wienerlab::fade::MIN_ORACLE_TRIALS
            )));
        }
        Ok(())
    }
}

/// A resolved `simulate` run.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulateSpec {
    pub snr_db: f64,
    pub beta: f64,
    pub sigma2_n: f64,
    #[serde(rename = "L_rule")]
    pub l_rule: LRule,
    #[serde(rename = "J")]
    pub substeps: usize,
    pub symbols: usize,
    pub seed: u64,
    #[serde(skip)]
    pub output_path: Option<PathBuf>,
}

fn positive(flag: &str, v: f64) -> Result<(), CliError> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(CliError::Spec(format!(
            "{flag} must be positive and finite, got {v}"
        )))
    }
}
