use super::input_law::InputLaw;
use crate::channel::ChannelConfig;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Log of the auxiliary channel density: `V | X_A` Gaussian with mean
/// `x_A^2 delta + sigma2_N` and variance `2 x_A^2 delta^2 sigma2_N`.
pub fn log_aux_density<T: Scalar>(v: T, x_a: T, cfg: &ChannelConfig<T>) -> Result<T> {
    if x_a.is_nan() || x_a <= T::zero() {
        return Err(Error::ZeroAmplitude(x_a.to_f64().unwrap_or(f64::NAN)));
    }
    let delta = cfg.delta();
    let s2 = cfg.sigma2_n();
    let four = T::lit(4.0);
    let scale = four * x_a * x_a * delta * delta * s2;
    let d = v - x_a * x_a * delta - s2;
    Ok(-d * d / scale - T::lit(0.5) * (T::PI() * scale).ln())
}

/// Log of `F_V(v)`, the closed-form mixture of the auxiliary channel over an
/// unshifted exponential power law with mean `lambda`.
pub fn log_fv<T: Scalar>(v: T, law: &InputLaw<T>, cfg: &ChannelConfig<T>) -> T {
    let delta = cfg.delta();
    let s2 = cfg.sigma2_n();
    let lambda = law.lambda();
    let four = T::lit(4.0);
    let ld = lambda * delta;
    let b = four * delta * s2;
    let u = v - s2;
    let root = (T::one() + four * s2 / lambda).sqrt();
    -T::lit(0.5) * (ld * (ld + b)).ln() + (T::lit(2.0) / b) * (u - u.abs() * root)
}
