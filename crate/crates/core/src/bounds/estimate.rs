use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    Analytic,
    MonteCarlo,
}

impl BoundKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            BoundKind::Analytic => "analytic",
            BoundKind::MonteCarlo => "monte-carlo",
        }
    }
}

/// A rate-bound value in nats with the metadata of how it was obtained.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateEstimate<T> {
    pub value_nats: T,
    /// Linear SNR `P / sigma2_N`.
    pub snr: T,
    pub samples_per_symbol: usize,
    pub kind: BoundKind,
    pub trials: usize,
    pub stderr: T,
    /// `value_nats - ln(snr) / 2`.
    pub gap_nats: T,
}

impl<T: Scalar> RateEstimate<T> {
    pub fn analytic(value_nats: T, snr: T, samples_per_symbol: usize) -> Self {
        Self::new(
            value_nats,
            snr,
            samples_per_symbol,
            BoundKind::Analytic,
            0,
            T::zero(),
        )
    }

    pub fn monte_carlo(
        value_nats: T,
        snr: T,
        samples_per_symbol: usize,
        trials: usize,
        stderr: T,
    ) -> Self {
        Self::new(
            value_nats,
            snr,
            samples_per_symbol,
            BoundKind::MonteCarlo,
            trials,
            stderr,
        )
    }

    fn new(
        value_nats: T,
        snr: T,
        samples_per_symbol: usize,
        kind: BoundKind,
        trials: usize,
        stderr: T,
    ) -> Self {
        Self {
            value_nats,
            snr,
            samples_per_symbol,
            kind,
            trials,
            stderr: stderr.max(T::zero()),
            gap_nats: value_nats - T::lit(0.5) * snr.ln(),
        }
    }
}
