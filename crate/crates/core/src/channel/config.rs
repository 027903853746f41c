use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Physical and discretization parameters of the oversampled channel.
///
/// `beta` is the FWHM linewidth in the same time unit as the symbol
/// interval `ts`; `sigma2_n` is the white-noise level, so one sample
/// interval of integrated noise has variance `sigma2_n * delta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ChannelConfig<T> {
    beta: T,
    sigma2_n: T,
    ts: T,
    samples_per_symbol: usize,
    substeps: usize,
    delta: T,
    a: T,
    degenerate: bool,
}

impl<T: Scalar> ChannelConfig<T> {
    /// Unit symbol interval, `L` samples per symbol, `J` sub-steps per sample.
    pub fn new(beta: T, sigma2_n: T, samples_per_symbol: usize, substeps: usize) -> Result<Self> {
        Self::with_symbol_time(beta, sigma2_n, T::one(), samples_per_symbol, substeps)
    }

    pub fn with_symbol_time(
        beta: T,
        sigma2_n: T,
        ts: T,
        samples_per_symbol: usize,
        substeps: usize,
    ) -> Result<Self> {
        if !(beta > T::zero() && beta.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "beta must be positive, got {beta}"
            )));
        }
        if !(sigma2_n > T::zero() && sigma2_n.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "sigma2_N must be positive, got {sigma2_n}"
            )));
        }
        Self::build(beta, sigma2_n, ts, samples_per_symbol, substeps, false)
    }

    /// Configuration addressed by sample interval instead of sample count:
    /// `L = max(1, round(1/delta))` and `ts = L * delta`.
    pub fn from_delta(beta: T, sigma2_n: T, delta: T, substeps: usize) -> Result<Self> {
        if !(delta > T::zero() && delta.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "delta must be positive, got {delta}"
            )));
        }
        let l = delta.recip().round().to_usize().unwrap_or(0).max(1);
        Self::with_symbol_time(beta, sigma2_n, delta * T::from_count(l), l, substeps)
    }

    /// Diagnostic mode that also admits `beta = 0` (no phase diffusion) and
    /// `sigma2_n = 0` (noise-free). Not a physical channel; used by tests.
    pub fn degenerate(
        beta: T,
        sigma2_n: T,
        ts: T,
        samples_per_symbol: usize,
        substeps: usize,
    ) -> Result<Self> {
        if !(beta >= T::zero() && beta.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "beta must be non-negative, got {beta}"
            )));
        }
        if !(sigma2_n >= T::zero() && sigma2_n.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "sigma2_N must be non-negative, got {sigma2_n}"
            )));
        }
        Self::build(beta, sigma2_n, ts, samples_per_symbol, substeps, true)
    }

    fn build(beta: T, sigma2_n: T, ts: T, l: usize, j: usize, degenerate: bool) -> Result<Self> {
        if !(ts > T::zero() && ts.is_finite()) {
            return Err(Error::InvalidConfig(format!(
                "symbol time must be positive, got {ts}"
            )));
        }
        if l == 0 {
            return Err(Error::InvalidConfig(
                "L (samples per symbol) must be at least 1".into(),
            ));
        }
        if j == 0 {
            return Err(Error::InvalidConfig(
                "J (sub-steps per sample) must be at least 1".into(),
            ));
        }
        let delta = ts / T::from_count(l);
        let a = (-T::PI() * beta * delta).exp();
        if a.is_nan() || a <= T::zero() {
            return Err(Error::InvalidConfig(format!(
                "beta * delta = {} underflows a",
                beta * delta
            )));
        }
        Ok(Self {
            beta,
            sigma2_n,
            ts,
            samples_per_symbol: l,
            substeps: j,
            delta,
            a,
            degenerate,
        })
    }

    /// Same channel with a different number of samples per symbol.
    pub fn with_samples_per_symbol(&self, l: usize) -> Result<Self> {
        Self::build(
            self.beta,
            self.sigma2_n,
            self.ts,
            l,
            self.substeps,
            self.degenerate,
        )
    }

    pub fn with_substeps(&self, j: usize) -> Result<Self> {
        Self::build(
            self.beta,
            self.sigma2_n,
            self.ts,
            self.samples_per_symbol,
            j,
            self.degenerate,
        )
    }

    pub fn with_sigma2_n(&self, sigma2_n: T) -> Result<Self> {
        if self.degenerate {
            Self::degenerate(
                self.beta,
                sigma2_n,
                self.ts,
                self.samples_per_symbol,
                self.substeps,
            )
        } else {
            Self::with_symbol_time(
                self.beta,
                sigma2_n,
                self.ts,
                self.samples_per_symbol,
                self.substeps,
            )
        }
    }

    pub fn beta(&self) -> T {
        self.beta
    }

    pub fn sigma2_n(&self) -> T {
        self.sigma2_n
    }

    pub fn symbol_time(&self) -> T {
        self.ts
    }

    /// `L`.
    pub fn samples_per_symbol(&self) -> usize {
        self.samples_per_symbol
    }

    /// `J`.
    pub fn substeps(&self) -> usize {
        self.substeps
    }

    /// Sample interval `ts / L`.
    pub fn delta(&self) -> T {
        self.delta
    }

    /// `exp(-pi * beta * delta)`.
    pub fn a(&self) -> T {
        self.a
    }

    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Variance of the phase increment over one sample interval, `2 pi beta delta`.
    pub fn increment_variance(&self) -> T {
        T::TAU() * self.beta * self.delta
    }

    /// Variance of one sub-step increment, `2 pi beta delta / J`.
    pub fn substep_variance(&self) -> T {
        self.increment_variance() / T::from_count(self.substeps)
    }

    /// `E|N_k|^2 = sigma2_n * delta`.
    pub fn noise_variance(&self) -> T {
        self.sigma2_n * self.delta
    }
}

/// Samples per symbol under the square-root rule, `ceil(beta * sqrt(snr))`, at least 1.
pub fn sqrt_rule_samples<T: Scalar>(beta: T, snr: T) -> usize {
    (beta * snr.sqrt())
        .ceil()
        .to_usize()
        .unwrap_or(usize::MAX)
        .max(1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_quantities() {
        let cfg = ChannelConfig::new(1.0f64, 2.0, 4, 8).unwrap();
        assert_eq!(cfg.delta(), 0.25);
        assert!((cfg.a() - (-std::f64::consts::PI * 0.25).exp()).abs() < 1e-15);
        assert!((cfg.substep_variance() - std::f64::consts::TAU / 32.0).abs() < 1e-15);
        assert_eq!(cfg.noise_variance(), 0.5);
        assert!(cfg.a() > 0.0 && cfg.a() < 1.0);
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(ChannelConfig::new(0.0f64, 1.0, 4, 8).is_err());
        assert!(ChannelConfig::new(-1.0f64, 1.0, 4, 8).is_err());
        assert!(ChannelConfig::new(1.0f64, 0.0, 4, 8).is_err());
        assert!(ChannelConfig::new(1.0f64, 1.0, 0, 8).is_err());
        assert!(ChannelConfig::new(1.0f64, 1.0, 4, 0).is_err());
        assert!(ChannelConfig::new(f64::NAN, 1.0, 4, 8).is_err());
    }

    #[test]
    fn degenerate_mode_admits_zero_diffusion() {
        let cfg = ChannelConfig::degenerate(0.0f64, 0.0, 1.0, 4, 8).unwrap();
        assert_eq!(cfg.a(), 1.0);
        assert_eq!(cfg.substep_variance(), 0.0);
        assert!(ChannelConfig::degenerate(-1.0f64, 0.0, 1.0, 4, 8).is_err());
    }

    #[test]
    fn from_delta_rounds_to_integer_samples() {
        let cfg = ChannelConfig::from_delta(1.0f64, 1.0, 1e-3, 4).unwrap();
        assert_eq!(cfg.samples_per_symbol(), 1000);
        assert!((cfg.delta() - 1e-3).abs() < 1e-18);
        let cfg = ChannelConfig::from_delta(1.0f64, 1.0, 5.0, 4).unwrap();
        assert_eq!(cfg.samples_per_symbol(), 1);
        assert_eq!(cfg.delta(), 5.0);
    }

    #[test]
    fn sqrt_rule() {
        assert_eq!(sqrt_rule_samples(1.0f64, 1e4), 100);
        assert_eq!(sqrt_rule_samples(1.0f64, 1e3), 32);
        assert_eq!(sqrt_rule_samples(1.0f64, 1e5), 317);
        assert_eq!(sqrt_rule_samples(0.01f64, 1.0), 1);
    }
}
