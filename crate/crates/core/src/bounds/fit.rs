use super::estimate::RateEstimate;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Least-squares line `value_nats ~ intercept + slope * ln(snr)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrelogFit<T> {
    pub slope: T,
    pub intercept: T,
    pub residuals: Vec<T>,
}

impl<T: Scalar> PrelogFit<T> {
    pub fn max_abs_residual(&self) -> T {
        self.residuals.iter().fold(T::zero(), |m, r| m.max(r.abs()))
    }
}

/// Smallest grid the pre-log fit accepts.
pub const MIN_FIT_POINTS: usize = 4;
/// Smallest SNR span (dB) the pre-log fit accepts.
pub const MIN_FIT_SPAN_DB: f64 = 20.0;

/// Fits the pre-log (slope against natural-log SNR) of a set of estimates.
pub fn prelog_fit<T: Scalar>(estimates: &[RateEstimate<T>]) -> Result<PrelogFit<T>> {
    if estimates.len() < MIN_FIT_POINTS {
        return Err(Error::DegenerateGrid(format!(
            "need at least {MIN_FIT_POINTS} points, got {}",
            estimates.len()
        )));
    }
    if estimates
        .iter()
        .any(|e| !(e.snr > T::zero() && e.snr.is_finite() && e.value_nats.is_finite()))
    {
        return Err(Error::DegenerateGrid(
            "non-finite value or non-positive snr".into(),
        ));
    }
    let xs: Vec<T> = estimates.iter().map(|e| e.snr.ln()).collect();
    let ys: Vec<T> = estimates.iter().map(|e| e.value_nats).collect();
    let (lo, hi) = xs
        .iter()
        .fold((T::infinity(), T::neg_infinity()), |(lo, hi), &x| {
            (lo.min(x), hi.max(x))
        });
    let span_db = T::lit(10.0) * (hi - lo) / T::LN_10();
    if span_db < T::lit(MIN_FIT_SPAN_DB) * (T::one() - T::lit(1e-9)) {
        return Err(Error::DegenerateGrid(format!(
            "grid spans {span_db} dB, need {MIN_FIT_SPAN_DB}"
        )));
    }
    let n = T::from_count(xs.len());
    let mx = xs.iter().copied().sum::<T>() / n;
    let my = ys.iter().copied().sum::<T>() / n;
    let sxy = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| (x - mx) * (y - my))
        .sum::<T>();
    let sxx = xs.iter().map(|&x| (x - mx) * (x - mx)).sum::<T>();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residuals = xs
        .iter()
        .zip(&ys)
        .map(|(&x, &y)| y - (intercept + slope * x))
        .collect();
    Ok(PrelogFit {
        slope,
        intercept,
        residuals,
    })
}
