//! Simulation and analysis of the oversampled Wiener phase-noise channel.
//!
//! The transmitter sends rectangular pulses; the receiver integrates over
//! `L` sub-intervals per symbol. The sampled output is
//!
//! ```text
//! Y_k = X_{ceil(k/L)} delta e^{j Theta_k} F_k + N_k
//! ```
//!
//! where `Theta_k` is a Gaussian random walk and `F_k` is the phase
//! factor averaged over one sample interval. The crate provides:
//!
//! * [`channel`]: the simulator (phase path, filtered fade, noise).
//! * [`fade`]: the energy statistic `V`, its decomposition, and the fade
//!   moments `E|F|^2`, `E|F|^4`, `E[(G-1)^2]` in closed form and by Monte Carlo.
//! * [`bounds`]: the input law, auxiliary-channel densities, the analytic
//!   lower bound on `I(X_A; V)`, its Monte Carlo counterpart and the pre-log fit.
//!
//! All numerics are generic over [`Scalar`] (`f32`, `f64`); the aliases
//! below fix `f64`.

pub mod bounds;
pub mod channel;
mod error;
pub mod fade;
pub mod rng;
mod scalar;
pub mod stats;

pub use error::{Error, Result};
pub use scalar::Scalar;

pub type ChannelConfig64 = channel::ChannelConfig<f64>;
pub type SymbolBlock64 = channel::SymbolBlock<f64>;
pub type OversampledFrame64 = channel::OversampledFrame<f64>;
pub type FadeMoments64 = fade::FadeMoments<f64>;
pub type InputLaw64 = bounds::InputLaw<f64>;
pub type RateEstimate64 = bounds::RateEstimate<f64>;

pub type ChannelConfig32 = channel::ChannelConfig<f32>;
pub type FadeMoments32 = fade::FadeMoments<f32>;
