use rand::Rng;

use super::config::ChannelConfig;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// How the initial phase `Theta(0)` is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub enum PhaseStart<T> {
    /// Uniform on [-pi, pi), one draw per block.
    #[default]
    Uniform,
    Fixed(T),
}

/// A Wiener phase path on the fine grid of `n * L * J` sub-steps.
///
/// `fine[i]` is the phase at time `i * delta / J`; the sample phase
/// `Theta_k` (1-based) is `fine[(k - 1) * J]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PhasePath<T> {
    fine: Vec<T>,
    substeps: usize,
}

impl<T: Scalar> PhasePath<T> {
    pub fn fine(&self) -> &[T] {
        &self.fine
    }

    pub fn substeps(&self) -> usize {
        self.substeps
    }

    /// Number of sample intervals covered.
    pub fn samples(&self) -> usize {
        self.fine.len() / self.substeps
    }

    /// `Theta_k` for every sample interval, left edges.
    pub fn coarse(&self) -> Vec<T> {
        self.fine.iter().step_by(self.substeps).copied().collect()
    }

    /// The `J` fine-grid phases inside sample interval `k` (0-based).
    pub fn interval(&self, k: usize) -> &[T] {
        &self.fine[k * self.substeps..(k + 1) * self.substeps]
    }
}

/// Simulates the phase path for `n_symbols` symbols with a uniform `Theta(0)`.
pub fn simulate_phase_path<T: Scalar, R: Rng + ?Sized>(
    cfg: &ChannelConfig<T>,
    n_symbols: usize,
    rng: &mut R,
) -> Result<PhasePath<T>> {
    simulate_phase_path_from(cfg, n_symbols, PhaseStart::Uniform, rng)
}

/// Draw order: `Theta(0)` (if uniform), then one N(0,1) per sub-step.
pub fn simulate_phase_path_from<T: Scalar, R: Rng + ?Sized>(
    cfg: &ChannelConfig<T>,
    n_symbols: usize,
    start: PhaseStart<T>,
    rng: &mut R,
) -> Result<PhasePath<T>> {
    if n_symbols == 0 {
        return Err(Error::EmptyBlock);
    }
    let len = n_symbols * cfg.samples_per_symbol() * cfg.substeps();
    let theta0 = match start {
        PhaseStart::Uniform => T::TAU() * T::unit_uniform(rng) - T::PI(),
        PhaseStart::Fixed(t) => t,
    };
    let std = cfg.substep_variance().sqrt();
    let mut fine = Vec::with_capacity(len);
    let mut theta = theta0;
    for _ in 0..len {
        fine.push(theta);
        theta = theta + std * T::standard_normal(rng);
    }
    Ok(PhasePath {
        fine,
        substeps: cfg.substeps(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::StreamSeed;

    #[test]
    fn zero_diffusion_path_is_constant() {
        let cfg = ChannelConfig::degenerate(0.0f64, 1.0, 1.0, 4, 8).unwrap();
        let path = simulate_phase_path(&cfg, 3, &mut StreamSeed::new(1).stream(0)).unwrap();
        let t0 = path.fine()[0];
        assert!((-std::f64::consts::PI..std::f64::consts::PI).contains(&t0));
        assert!(path.fine().iter().all(|&t| t == t0));
        assert_eq!(path.coarse(), vec![t0; 12]);
    }

    #[test]
    fn coarse_sequence_is_left_edges() {
        let cfg = ChannelConfig::new(1.0f64, 1.0, 4, 8).unwrap();
        let path = simulate_phase_path(&cfg, 2, &mut StreamSeed::new(2).stream(0)).unwrap();
        assert_eq!(path.fine().len(), 2 * 4 * 8);
        assert_eq!(path.samples(), 8);
        let coarse = path.coarse();
        for (k, &t) in coarse.iter().enumerate() {
            assert_eq!(t, path.fine()[k * 8]);
            assert_eq!(path.interval(k)[0], t);
        }
    }

    #[test]
    fn fixed_start_is_respected() {
        let cfg = ChannelConfig::new(1.0f64, 1.0, 2, 2).unwrap();
        let path = simulate_phase_path_from(
            &cfg,
            1,
            PhaseStart::Fixed(0.25),
            &mut StreamSeed::new(0).stream(0),
        )
        .unwrap();
        assert_eq!(path.fine()[0], 0.25);
    }

    #[test]
    fn zero_symbols_rejected() {
        let cfg = ChannelConfig::new(1.0f64, 1.0, 2, 2).unwrap();
        assert!(simulate_phase_path(&cfg, 0, &mut StreamSeed::new(0).stream(0)).is_err());
    }
}
