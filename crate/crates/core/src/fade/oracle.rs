//! Monte Carlo estimates of the fade moments, computed only from simulated
//! fades and never from the closed forms.

use crate::channel::{ChannelConfig, FadeSampler};
use crate::error::{Error, Result};
use crate::rng::StreamSeed;
use crate::scalar::Scalar;
use crate::stats::{run_trials, Estimate, PairStats, RunningStats};

/// Minimum trial count for the oracles.
pub const MIN_ORACLE_TRIALS: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadeOracle<T> {
    pub m2: Estimate<T>,
    pub m4: Estimate<T>,
    /// `E[(G-1)^2]` assembled from the sampled moments; stderr by the delta method.
    pub ms_g: Estimate<T>,
    pub substeps: usize,
}

/// Samples `trials` independent fades `F_1` and estimates `E|F|^2`, `E|F|^4`
/// and `E[(G-1)^2]` for the configuration's `L`.
pub fn mc_fade_oracle<T: Scalar>(
    cfg: &ChannelConfig<T>,
    trials: usize,
    seed: &StreamSeed,
) -> Result<FadeOracle<T>> {
    if trials < MIN_ORACLE_TRIALS {
        return Err(Error::TooFewTrials {
            min: MIN_ORACLE_TRIALS,
            actual: trials,
        });
    }
    let sampler = FadeSampler::new(cfg);
    let stats = run_trials(trials, seed, PairStats::<T>::default, |acc, rng, _| {
        let p = sampler.sample(rng).fade.norm_sqr();
        acc.push(p, p * p);
    });
    let (m2, m4) = (stats.x.estimate(), stats.y.estimate());
    let l = T::from_count(cfg.samples_per_symbol());
    let dev = m2.mean - T::one();
    let ms_g = (m4.mean - m2.mean * m2.mean) / l + dev * dev;
    let g2 = T::lit(-2.0) * m2.mean / l + T::lit(2.0) * dev;
    let g4 = l.recip();
    let n = T::from_count(trials);
    let var = (g2 * g2 * stats.x.variance()
        + g4 * g4 * stats.y.variance()
        + T::lit(2.0) * g2 * g4 * stats.covariance())
        / n;
    Ok(FadeOracle {
        m2,
        m4,
        ms_g: Estimate {
            mean: ms_g,
            stderr: var.max(T::zero()).sqrt(),
            count: trials,
        },
        substeps: cfg.substeps(),
    })
}

/// Paired difference between fades computed with `J / factor` and `J`
/// sub-steps on the same paths. Estimates the discretization bias of the
/// coarser rule; the finer rule's bias is smaller still.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadeRefinement<T> {
    pub coarse_substeps: usize,
    pub fine_substeps: usize,
    /// `E|F_coarse|^2 - E|F_fine|^2`.
    pub d_m2: Estimate<T>,
    /// `E|F_coarse|^4 - E|F_fine|^4`.
    pub d_m4: Estimate<T>,
}

pub fn mc_fade_refinement<T: Scalar>(
    cfg: &ChannelConfig<T>,
    factor: usize,
    trials: usize,
    seed: &StreamSeed,
) -> Result<FadeRefinement<T>> {
    if trials < MIN_ORACLE_TRIALS {
        return Err(Error::TooFewTrials {
            min: MIN_ORACLE_TRIALS,
            actual: trials,
        });
    }
    if factor == 0 || cfg.substeps() % factor != 0 {
        return Err(Error::InvalidConfig(format!(
            "refinement factor {factor} must divide J = {}",
            cfg.substeps()
        )));
    }
    let sampler = FadeSampler::new(cfg);
    let stats = run_trials(
        trials,
        seed,
        || [RunningStats::<T>::new(); 2],
        |acc, rng, _| {
            let (fine, coarse) = sampler.sample_nested(rng, factor);
            let (pf, pc) = (fine.norm_sqr(), coarse.norm_sqr());
            acc[0].push(pc - pf);
            acc[1].push(pc * pc - pf * pf);
        },
    );
    Ok(FadeRefinement {
        coarse_substeps: cfg.substeps() / factor,
        fine_substeps: cfg.substeps(),
        d_m2: stats[0].estimate(),
        d_m4: stats[1].estimate(),
    })
}
