use num_complex::Complex;
use rand::Rng;

use super::config::ChannelConfig;
use super::fade::filtered_fade;
use super::phase::{simulate_phase_path_from, PhaseStart};
use super::symbols::SymbolBlock;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Receiver samples of one symbol, optionally with the latent phase and fade.
#[derive(Debug, Clone, PartialEq)]
pub struct OversampledFrame<T> {
    /// `Y_k` for the `L` samples of the symbol.
    pub y: Vec<Complex<T>>,
    /// `Theta_k` at the left edge of each sample interval.
    pub theta: Option<Vec<T>>,
    /// `F_k` for each sample interval.
    pub fade: Option<Vec<Complex<T>>>,
    /// `sigma2_n * delta`.
    pub noise_scale: T,
    pub delta: T,
}

impl<T: Scalar> OversampledFrame<T> {
    /// Frame without latents, e.g. built from captured samples.
    pub fn from_samples(y: Vec<Complex<T>>, noise_scale: T, delta: T) -> Self {
        Self {
            y,
            theta: None,
            fade: None,
            noise_scale,
            delta,
        }
    }

    pub fn len(&self) -> usize {
        self.y.len()
    }

    pub fn is_empty(&self) -> bool {
        self.y.is_empty()
    }
}

/// Simulation knobs that are not part of the physical channel.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct SimOptions<T> {
    pub phase_start: PhaseStart<T>,
    /// Replace every `F_k` by 1 (the path is still drawn, so streams stay aligned).
    pub unit_fade: bool,
}

/// Sends `block` through the channel with default options.
pub fn channel_transmit<T: Scalar, R: Rng + ?Sized>(
    block: &SymbolBlock<T>,
    cfg: &ChannelConfig<T>,
    rng: &mut R,
) -> Result<Vec<OversampledFrame<T>>> {
    channel_transmit_with(block, cfg, &SimOptions::default(), rng)
}

/// `Y_k = X_{ceil(k/L)} delta e^{j Theta_k} F_k + N_k` over one continuous phase path.
///
/// Draw order: the phase path (see [`simulate_phase_path_from`]), then the
/// real and imaginary noise parts of every sample in time order.
pub fn channel_transmit_with<T: Scalar, R: Rng + ?Sized>(
    block: &SymbolBlock<T>,
    cfg: &ChannelConfig<T>,
    opts: &SimOptions<T>,
    rng: &mut R,
) -> Result<Vec<OversampledFrame<T>>> {
    if block.is_empty() {
        return Err(Error::EmptyBlock);
    }
    let l = cfg.samples_per_symbol();
    let j = cfg.substeps();
    let delta = cfg.delta();
    let path = simulate_phase_path_from(cfg, block.len(), opts.phase_start, rng)?;
    let noise_std = (cfg.noise_variance() / (T::one() + T::one())).sqrt();
    let one = Complex::new(T::one(), T::zero());

    let mut frames = Vec::with_capacity(block.len());
    for (m, &x) in block.symbols().iter().enumerate() {
        let mut y = Vec::with_capacity(l);
        let mut theta = Vec::with_capacity(l);
        let mut fade = Vec::with_capacity(l);
        for ell in 0..l {
            let k = m * l + ell;
            let theta_k = path.fine()[k * j];
            let f_k = if opts.unit_fade {
                one
            } else {
                filtered_fade(path.interval(k), theta_k, j)?
            };
            theta.push(theta_k);
            fade.push(f_k);
            y.push(x.scale(delta) * Complex::from_polar(T::one(), theta_k) * f_k);
        }
        frames.push(OversampledFrame {
            y,
            theta: Some(theta),
            fade: Some(fade),
            noise_scale: cfg.noise_variance(),
            delta,
        });
    }
    for frame in &mut frames {
        for y in &mut frame.y {
            let n = Complex::new(
                noise_std * T::standard_normal(rng),
                noise_std * T::standard_normal(rng),
            );
            *y = *y + n;
        }
    }
    Ok(frames)
}
