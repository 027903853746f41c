//! Discrete-time model of the oversampled Wiener phase-noise channel.

mod config;
mod dump;
mod fade;
mod phase;
mod symbols;
mod transmit;

pub use config::{sqrt_rule_samples, ChannelConfig};
pub use dump::{write_frame_dump, DUMP_HEADER};
pub use fade::{filtered_fade, FadeDraw, FadeSampler};
pub use phase::{simulate_phase_path, simulate_phase_path_from, PhasePath, PhaseStart};
pub use symbols::SymbolBlock;
pub use transmit::{channel_transmit, channel_transmit_with, OversampledFrame, SimOptions};
