use std::io::{self, Write};

use super::transmit::OversampledFrame;
use crate::scalar::Scalar;

/// Column header of the frame dump.
pub const DUMP_HEADER: &str = "k,re_y,im_y,theta,re_f,im_f";

/// Writes one CSV row per sample: global 1-based index `k`, `Y_k`, `Theta_k`, `F_k`.
/// Latent columns are left empty for frames without latents.
pub fn write_frame_dump<T: Scalar, W: Write>(
    frames: &[OversampledFrame<T>],
    mut out: W,
) -> io::Result<()> {
    writeln!(out, "{DUMP_HEADER}")?;
    let mut k = 0usize;
    for frame in frames {
        for (i, y) in frame.y.iter().enumerate() {
            k += 1;
            write!(out, "{k},{},{}", y.re, y.im)?;
            match &frame.theta {
                Some(t) => write!(out, ",{}", t[i])?,
                None => write!(out, ",")?,
            }
            match &frame.fade {
                Some(f) => writeln!(out, ",{},{}", f[i].re, f[i].im)?,
                None => writeln!(out, ",,")?,
            }
        }
    }
    Ok(())
}
