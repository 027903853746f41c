//! Fade-moment tables: closed forms next to Monte Carlo estimates.

use rayon::prelude::*;
use wienerlab::channel::ChannelConfig;
use wienerlab::fade::{mc_fade_oracle, ms_g_limit_ratio, FadeMoments, FadeOracle};
use wienerlab::rng::StreamSeed;

use crate::settings::MomentsSpec;
use crate::table::{Cell, Table};
use crate::CliError;

pub const MOMENT_COLUMNS: [&str; 16] = [
    "beta",
    "delta",
    "a",
    "m2",
    "m4",
    "msG",
    "msG_per_delta2",
    "limit",
    "m2_branch",
    "m4_branch",
    "m2_mc",
    "m2_mc_stderr",
    "m4_mc",
    "m4_mc_stderr",
    "msG_mc",
    "msG_mc_stderr",
];

#[derive(Debug, Clone, PartialEq)]
pub struct MomentRow {
    pub beta: f64,
    pub delta: f64,
    /// Samples per symbol used for `msG`: `round(1 / delta)`.
    pub samples_per_symbol: usize,
    pub moments: FadeMoments<f64>,
    pub oracle: Option<FadeOracle<f64>>,
}

impl MomentRow {
    pub fn ms_g_per_delta2(&self) -> f64 {
        self.moments.ms_g / (self.delta * self.delta)
    }

    pub fn limit(&self) -> f64 {
        ms_g_limit_ratio(self.beta)
    }

    pub fn cells(&self) -> Vec<Cell> {
        let m = &self.moments;
        let o = self.oracle.as_ref();
        vec![
            Cell::Num(self.beta),
            Cell::Num(self.delta),
            Cell::Num(m.a),
            Cell::Num(m.m2),
            Cell::Num(m.m4),
            Cell::Num(m.ms_g),
            Cell::Num(self.ms_g_per_delta2()),
            Cell::Num(self.limit()),
            Cell::Text(m.m2_branch.as_str().into()),
            Cell::Text(m.m4_branch.as_str().into()),
            Cell::opt(o.map(|o| o.m2.mean)),
            Cell::opt(o.map(|o| o.m2.stderr)),
            Cell::opt(o.map(|o| o.m4.mean)),
            Cell::opt(o.map(|o| o.m4.stderr)),
            Cell::opt(o.map(|o| o.ms_g.mean)),
            Cell::opt(o.map(|o| o.ms_g.stderr)),
        ]
    }
}

/// One row per `delta`, in the order given. Oracle columns are filled when
/// `trials > 0`; each row draws from its own stream.
pub fn run_moments(spec: &MomentsSpec, progress: bool) -> Result<Vec<MomentRow>, CliError> {
    spec.validate()?;
    spec.deltas
        .par_iter()
        .enumerate()
        .map(|(i, &delta)| {
            let cfg = ChannelConfig::from_delta(spec.beta, 1.0, delta, spec.substeps)?;
            let oracle = if spec.trials > 0 {
                let seed = StreamSeed::new(spec.seed).child(i as u64);
                let o = mc_fade_oracle(&cfg, spec.trials, &seed)?;
                if progress {
                    eprintln!("moments: delta {delta} done");
                }
                Some(o)
            } else {
                None
            };
            Ok(MomentRow {
                beta: spec.beta,
                delta: cfg.delta(),
                samples_per_symbol: cfg.samples_per_symbol(),
                moments: FadeMoments::from_config(&cfg),
                oracle,
            })
        })
        .collect()
}

pub fn moments_table(spec: &MomentsSpec, rows: &[MomentRow]) -> Table {
    let mut t = Table::new(MOMENT_COLUMNS.iter().map(|c| c.to_string()).collect());
    t.comments
        .push(format!("wienerlab {} moments", env!("CARGO_PKG_VERSION")));
    t.comments.push(format!(
        "config {}",
        serde_json::to_string(spec).expect("spec serializes")
    ));
    for r in rows {
        t.push(r.cells());
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::settings::Settings;

    fn spec(deltas: Vec<f64>, trials: usize) -> MomentsSpec {
        Settings {
            delta: Some(deltas),
            trials: Some(trials),
            ..Default::default()
        }
        .moments_spec()
        .unwrap()
    }

    #[test]
    fn analytic_only_leaves_oracle_empty() {
        let s = spec(vec![1e-3, 1e-2], 0);
        let rows = run_moments(&s, false).unwrap();
        assert_eq!(rows.len(), 2);
        assert!(rows.iter().all(|r| r.oracle.is_none()));
        let t = moments_table(&s, &rows);
        assert!(t.rows[0][10..].iter().all(|c| *c == Cell::Null));
        assert!((rows[0].ms_g_per_delta2() / 1.09662 - 1.0).abs() < 0.01);
    }

    #[test]
    fn branch_flags_follow_the_crossover() {
        let rows = run_moments(&spec(vec![1e-1, 1e-3], 0), false).unwrap();
        let t = moments_table(&spec(vec![1e-1, 1e-3], 0), &rows);
        assert_eq!(t.rows[0][8], Cell::Text("direct".into()));
        assert_eq!(t.rows[1][8], Cell::Text("series".into()));
    }

    #[test]
    fn oracle_columns_filled() {
        let rows = run_moments(&spec(vec![0.1], 10_000), false).unwrap();
        let o = rows[0].oracle.unwrap();
        assert!(o.m2.within(rows[0].moments.m2, 4.0));
    }
}
