//! SNR sweeps of the analytic and Monte Carlo rate bounds.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;
use wienerlab::bounds::{
    analytic_rate_lower_bound, mc_rate_lower_bound, prelog_fit, InputLaw, RateEstimate,
};
use wienerlab::channel::ChannelConfig;
use wienerlab::fade::mean_square_g_deviation;
use wienerlab::rng::StreamSeed;

use crate::settings::{SweepSpec, Units};
use crate::table::{Cell, Table};
use crate::CliError;

/// One grid point. Monte Carlo fields are `None` when `trials == 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub snr_db: f64,
    pub snr_linear: f64,
    #[serde(rename = "L")]
    pub samples_per_symbol: usize,
    pub delta: f64,
    #[serde(rename = "msG")]
    pub ms_g: f64,
    pub analytic_lb_nats: f64,
    pub analytic_gap_nats: f64,
    pub mc_lb_nats: Option<f64>,
    pub mc_stderr: Option<f64>,
    pub trials: usize,
}

impl SweepRow {
    pub fn columns(units: Units) -> Vec<String> {
        let u = units.suffix();
        vec![
            "snr_db".into(),
            "snr_linear".into(),
            "L".into(),
            "delta".into(),
            "msG".into(),
            format!("analytic_lb_{u}"),
            format!("analytic_gap_{u}"),
            format!("mc_lb_{u}"),
            "mc_stderr".into(),
            "trials".into(),
        ]
    }

    pub fn cells(&self, units: Units) -> Vec<Cell> {
        vec![
            Cell::Num(self.snr_db),
            Cell::Num(self.snr_linear),
            Cell::Int(self.samples_per_symbol as u64),
            Cell::Num(self.delta),
            Cell::Num(self.ms_g),
            Cell::Num(units.scale(self.analytic_lb_nats)),
            Cell::Num(units.scale(self.analytic_gap_nats)),
            Cell::opt(self.mc_lb_nats.map(|v| units.scale(v))),
            Cell::opt(self.mc_stderr.map(|v| units.scale(v))),
            Cell::Int(self.trials as u64),
        ]
    }

    fn analytic_estimate(&self) -> RateEstimate<f64> {
        RateEstimate::analytic(
            self.analytic_lb_nats,
            self.snr_linear,
            self.samples_per_symbol,
        )
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SlopeSummary {
    Fitted {
        slope: f64,
        intercept: f64,
        from_db: f64,
        to_db: f64,
        points: usize,
    },
    NotApplicable(String),
}

impl SlopeSummary {
    pub fn slope(&self) -> Option<f64> {
        match self {
            SlopeSummary::Fitted { slope, .. } => Some(*slope),
            SlopeSummary::NotApplicable(_) => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            SlopeSummary::Fitted { slope, intercept, from_db, to_db, points } => format!(
                "prelog slope {slope} (intercept {intercept} nats) over {from_db}..{to_db} dB, {points} points"
            ),
            SlopeSummary::NotApplicable(why) => format!("prelog slope n/a: {why}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
    pub slope: SlopeSummary,
}

/// Evaluates one grid point. `index` picks the point's random stream.
pub fn sweep_point(spec: &SweepSpec, snr_db: f64, index: usize) -> Result<SweepRow, CliError> {
    let snr = 10f64.powf(snr_db / 10.0);
    let l = spec.l_rule.samples(spec.beta, snr);
    let cfg = ChannelConfig::new(spec.beta, spec.sigma2_n, l, spec.substeps)?;
    let analytic = analytic_rate_lower_bound(snr, &cfg)?;
    let (mc_lb, mc_se) = if spec.trials > 0 {
        let law = InputLaw::with_fraction(snr * spec.sigma2_n, spec.pmin_fraction)?;
        let seed = StreamSeed::new(spec.seed).child(index as u64);
        let est = mc_rate_lower_bound(snr, &cfg, &law, spec.trials, &seed)?;
        (Some(est.value_nats), Some(est.stderr))
    } else {
        (None, None)
    };
    Ok(SweepRow {
        snr_db,
        snr_linear: snr,
        samples_per_symbol: l,
        delta: cfg.delta(),
        ms_g: mean_square_g_deviation(&cfg),
        analytic_lb_nats: analytic.value_nats,
        analytic_gap_nats: analytic.gap_nats,
        mc_lb_nats: mc_lb,
        mc_stderr: mc_se,
        trials: spec.trials,
    })
}

/// Runs every grid point (in parallel on the current rayon pool) and fits the
/// pre-log over the top `fit_fraction` of the grid. Rows come back in grid order.
pub fn run_sweep(spec: &SweepSpec, progress: bool) -> Result<SweepReport, CliError> {
    spec.validate()?;
    let points = spec.grid.points();
    let done = AtomicUsize::new(0);
    let rows = points
        .par_iter()
        .enumerate()
        .map(|(i, &db)| {
            let row = sweep_point(spec, db, i);
            if progress {
                let n = done.fetch_add(1, Ordering::Relaxed) + 1;
                eprintln!("sweep: {n}/{} done ({db} dB)", points.len());
            }
            row
        })
        .collect::<Result<Vec<_>, _>>()?;
    let slope = fit_top(&rows, spec.fit_fraction);
    Ok(SweepReport { rows, slope })
}

fn fit_top(rows: &[SweepRow], fraction: f64) -> SlopeSummary {
    if rows.len() < 2 {
        return SlopeSummary::NotApplicable("single grid point".into());
    }
    let keep = ((rows.len() as f64 * fraction).ceil() as usize).clamp(1, rows.len());
    let top = &rows[rows.len() - keep..];
    let est: Vec<_> = top.iter().map(SweepRow::analytic_estimate).collect();
    match prelog_fit(&est) {
        Ok(fit) => SlopeSummary::Fitted {
            slope: fit.slope,
            intercept: fit.intercept,
            from_db: top[0].snr_db,
            to_db: top[top.len() - 1].snr_db,
            points: top.len(),
        },
        Err(e) => SlopeSummary::NotApplicable(e.to_string()),
    }
}

/// Formats the report with a `#` header echoing the version and the spec.
pub fn sweep_table(spec: &SweepSpec, report: &SweepReport, command: &str) -> Table {
    let mut t = Table::new(SweepRow::columns(spec.units));
    t.comments
        .push(format!("wienerlab {} {command}", env!("CARGO_PKG_VERSION")));
    t.comments.push(format!(
        "config {}",
        serde_json::to_string(spec).expect("spec serializes")
    ));
    t.comments.push(report.slope.describe());
    for row in &report.rows {
        t.push(row.cells(spec.units));
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::settings::{DbRange, LRule, Settings};

    fn spec(range: &str) -> SweepSpec {
        Settings {
            snr_db_range: Some(range.parse().unwrap()),
            ..Default::default()
        }
        .sweep_spec(0, DbRange::single(0.0).unwrap())
        .unwrap()
    }

    #[test]
    fn gap_identity_and_null_mc_fields() {
        let report = run_sweep(&spec("0:60:10"), false).unwrap();
        assert_eq!(report.rows.len(), 7);
        for r in &report.rows {
            assert!(
                (r.analytic_gap_nats - (r.analytic_lb_nats - 0.5 * r.snr_linear.ln())).abs()
                    < 1e-12
            );
            assert!(r.mc_lb_nats.is_none() && r.mc_stderr.is_none() && r.trials == 0);
            let l = r.samples_per_symbol as f64;
            assert!(l >= r.snr_linear.sqrt() && l - 1.0 < r.snr_linear.sqrt() * (1.0 + 1e-12));
            assert!((r.delta * r.samples_per_symbol as f64 - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn single_point_has_no_slope() {
        let report = run_sweep(&spec("30:30:1"), false).unwrap();
        assert_eq!(report.rows.len(), 1);
        assert!(report.slope.slope().is_none());
        assert!(report.slope.describe().contains("n/a"));
    }

    #[test]
    fn short_window_is_not_applicable() {
        // Top half of 3 points is 2 points, below the fit minimum.
        let report = run_sweep(&spec("40:60:10"), false).unwrap();
        assert!(report.slope.slope().is_none());
    }

    #[test]
    fn fixed_rule_and_bits_columns() {
        let mut s = spec("40:80:5");
        s.l_rule = LRule::Fixed(16);
        s.units = Units::Bits;
        let report = run_sweep(&s, false).unwrap();
        assert!(report.rows.iter().all(|r| r.samples_per_symbol == 16));
        let t = sweep_table(&s, &report, "sweep");
        assert_eq!(t.columns[5], "analytic_lb_bits");
        let Cell::Num(v) = t.rows[0][5] else { panic!() };
        assert!((v * std::f64::consts::LN_2 - report.rows[0].analytic_lb_nats).abs() < 1e-12);
    }

    #[test]
    fn grid_points_are_independent_of_neighbours() {
        let full = run_sweep(&spec("20:40:10"), false).unwrap();
        let one = sweep_point(&spec("20:40:10"), 30.0, 1).unwrap();
        assert_eq!(full.rows[1], one);
    }
}
