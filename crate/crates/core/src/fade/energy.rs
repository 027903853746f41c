use num_complex::Complex;

use crate::channel::OversampledFrame;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Receiver energy over one symbol, `V = sum |Y_l|^2`.
pub fn energy_statistic<T: Scalar>(frame: &OversampledFrame<T>) -> T {
    frame.y.iter().map(|y| y.norm_sqr()).sum()
}

/// Split of `V` into fade, cross and noise terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyDecomposition<T> {
    pub v: T,
    /// `G = (1/L) sum |F_l|^2`.
    pub g: T,
    /// `Z1 = sum Re[e^{j X_Phi} e^{j Theta_l} F_l N_l^*]`.
    pub z1: T,
    /// `Z0 = sum |N_l|^2`.
    pub z0: T,
    pub samples: usize,
}

impl<T: Scalar> EnergyDecomposition<T> {
    /// `X_A^2 delta^2 L G + 2 X_A delta Z1 + Z0`, i.e. `X_A^2 delta G + ...` for unit symbol time.
    pub fn reassemble(&self, x_a: T, delta: T) -> T {
        let two = T::lit(2.0);
        x_a * x_a * delta * delta * T::from_count(self.samples) * self.g
            + two * x_a * delta * self.z1
            + self.z0
    }
}

/// Decomposes a frame that carries its latent phases and fades.
/// The noise is recovered as `N_l = y_l - x delta e^{j Theta_l} F_l`.
pub fn decompose<T: Scalar>(
    frame: &OversampledFrame<T>,
    x: Complex<T>,
) -> Result<EnergyDecomposition<T>> {
    let (theta, fade) = match (&frame.theta, &frame.fade) {
        (Some(t), Some(f)) => (t, f),
        _ => return Err(Error::MissingLatents),
    };
    let l = frame.y.len();
    if theta.len() != l || fade.len() != l {
        return Err(Error::LengthMismatch {
            expected: l,
            actual: theta.len().min(fade.len()),
        });
    }
    let x_a = x.norm();
    let unit_x = if x_a > T::zero() {
        x.unscale(x_a)
    } else {
        Complex::new(T::one(), T::zero())
    };
    let (mut g, mut z1, mut z0) = (T::zero(), T::zero(), T::zero());
    for ((&y, &t), &f) in frame.y.iter().zip(theta).zip(fade) {
        let rot = Complex::from_polar(T::one(), t) * f;
        let n = y - x.scale(frame.delta) * rot;
        g = g + f.norm_sqr();
        z1 = z1 + (unit_x * rot * n.conj()).re;
        z0 = z0 + n.norm_sqr();
    }
    Ok(EnergyDecomposition {
        v: energy_statistic(frame),
        g: g / T::from_count(l),
        z1,
        z0,
        samples: l,
    })
}
