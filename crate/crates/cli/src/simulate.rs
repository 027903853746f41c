//! Debug frame dumps.

use std::io::Write;

use wienerlab::channel::{channel_transmit, write_frame_dump, ChannelConfig, SymbolBlock};
use wienerlab::rng::StreamSeed;

use crate::settings::SimulateSpec;
use crate::CliError;

/// Sends `symbols` constant-amplitude symbols at the requested SNR and writes
/// one CSV row per received sample, latents included.
pub fn run_simulate<W: Write>(spec: &SimulateSpec, mut out: W) -> Result<(), CliError> {
    let snr = 10f64.powf(spec.snr_db / 10.0);
    let l = spec.l_rule.samples(spec.beta, snr);
    let cfg = ChannelConfig::new(spec.beta, spec.sigma2_n, l, spec.substeps)?;
    let block = SymbolBlock::constant((snr * spec.sigma2_n).sqrt(), spec.symbols)?;
    let mut rng = StreamSeed::new(spec.seed).stream(0);
    let frames = channel_transmit(&block, &cfg, &mut rng)?;
    writeln!(out, "# wienerlab {} simulate", env!("CARGO_PKG_VERSION"))
        .map_err(CliError::stdout)?;
    writeln!(
        out,
        "# config {}",
        serde_json::to_string(spec).expect("spec serializes")
    )
    .map_err(CliError::stdout)?;
    write_frame_dump(&frames, out).map_err(CliError::stdout)
}
