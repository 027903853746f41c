use num_complex::Complex;

use super::density::{log_aux_density, log_fv};
use super::estimate::RateEstimate;
use super::input_law::{sample_input_power, InputLaw};
use crate::channel::{channel_transmit_with, ChannelConfig, SimOptions, SymbolBlock};
use crate::error::{Error, Result};
use crate::fade::energy_statistic;
use crate::rng::StreamSeed;
use crate::scalar::Scalar;
use crate::stats::{run_trials, RunningStats};

/// Minimum trial count for the Monte Carlo bound.
pub const MIN_BOUND_TRIALS: usize = 10_000;

/// Phase of the transmitted symbol in each trial. `V` ignores it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SymbolPhase {
    #[default]
    Zero,
    Uniform,
}

#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct McBoundOptions<T> {
    pub symbol_phase: SymbolPhase,
    pub sim: SimOptions<T>,
}

/// Monte Carlo estimate of the auxiliary-channel lower bound on `I(X_A; V)`.
///
/// Each trial draws `X_P` from `law`, sends one symbol through the channel,
/// and scores `log Q(V | X_A) - P_min/lambda - log F_V(V)`. Since
/// `Q_V <= exp(P_min/lambda) F_V`, the mean is a lower bound on the
/// auxiliary-channel bound and therefore on `I(X_A; V)`.
pub fn mc_rate_lower_bound<T: Scalar>(
    snr: T,
    cfg: &ChannelConfig<T>,
    law: &InputLaw<T>,
    trials: usize,
    seed: &StreamSeed,
) -> Result<RateEstimate<T>> {
    mc_rate_lower_bound_with(snr, cfg, law, trials, seed, &McBoundOptions::default())
}

pub fn mc_rate_lower_bound_with<T: Scalar>(
    snr: T,
    cfg: &ChannelConfig<T>,
    law: &InputLaw<T>,
    trials: usize,
    seed: &StreamSeed,
    opts: &McBoundOptions<T>,
) -> Result<RateEstimate<T>> {
    if !(snr > T::zero() && snr.is_finite()) {
        return Err(Error::InvalidSnr(snr.to_f64().unwrap_or(f64::NAN)));
    }
    if trials < MIN_BOUND_TRIALS {
        return Err(Error::TooFewTrials {
            min: MIN_BOUND_TRIALS,
            actual: trials,
        });
    }
    let expected = snr * cfg.sigma2_n();
    if (law.power() - expected).abs() > T::lit(1e-9) * expected {
        return Err(Error::PowerMismatch {
            law: law.power().to_f64().unwrap_or(f64::NAN),
            expected: expected.to_f64().unwrap_or(f64::NAN),
        });
    }
    let shift = law.p_min() / law.lambda();
    let stats = run_trials(trials, seed, RunningStats::<T>::new, |acc, rng, _| {
        let x_p = sample_input_power(law, rng);
        let x_a = x_p.sqrt();
        let phase = match opts.symbol_phase {
            SymbolPhase::Zero => T::zero(),
            SymbolPhase::Uniform => T::TAU() * T::unit_uniform(rng),
        };
        let block = SymbolBlock::new(vec![Complex::from_polar(x_a, phase)]).expect("finite symbol");
        let frames =
            channel_transmit_with(&block, cfg, &opts.sim, rng).expect("valid one-symbol block");
        let v = energy_statistic(&frames[0]);
        let score = log_aux_density(v, x_a, cfg).expect("x_a >= sqrt(P_min) > 0")
            - shift
            - log_fv(v, law, cfg);
        acc.push(score);
    });
    let est = stats.estimate();
    Ok(RateEstimate::monte_carlo(
        est.mean,
        snr,
        cfg.samples_per_symbol(),
        trials,
        est.stderr,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validates_inputs() {
        let cfg = ChannelConfig::new(1.0f64, 1.0, 10, 8).unwrap();
        let law = InputLaw::half(100.0).unwrap();
        let seed = StreamSeed::new(0);
        assert!(matches!(
            mc_rate_lower_bound(100.0, &cfg, &law, 10, &seed),
            Err(Error::TooFewTrials { .. })
        ));
        assert!(matches!(
            mc_rate_lower_bound(50.0, &cfg, &law, 10_000, &seed),
            Err(Error::PowerMismatch { .. })
        ));
        assert!(mc_rate_lower_bound(-1.0, &cfg, &law, 10_000, &seed).is_err());
    }
}
