use super::estimate::RateEstimate;
use crate::channel::ChannelConfig;
use crate::error::{Error, Result};
use crate::fade::mean_square_g_deviation;
use crate::scalar::Scalar;

/// `-2 - ln(8 pi) / 2`, the SNR- and delta-free part of the bound.
pub fn bound_constant<T: Scalar>() -> T {
    -T::lit(2.0) - T::lit(0.5) * (T::lit(8.0) * T::PI()).ln()
}

/// High-SNR limit of the gap under `L = ceil(beta sqrt(snr))`:
/// `-2 - ln(8 pi) / 2 - pi^2 / 36` (about -3.8862 nats).
pub fn asymptotic_gap<T: Scalar>() -> T {
    bound_constant::<T>() - T::PI() * T::PI() / T::lit(36.0)
}

/// Closed-form lower bound on `I(X_A; V)` with `P_min = P / 2`:
///
/// `ln(snr)/2 - 2 - ln(8 pi)/2 - 1/(2 snr delta) - (snr/4) E[(G-1)^2]`.
///
/// Only `snr`, `delta`, `beta` and `L` enter, so it is unchanged by a joint
/// rescaling of `P` and `sigma2_N`.
pub fn analytic_rate_lower_bound<T: Scalar>(
    snr: T,
    cfg: &ChannelConfig<T>,
) -> Result<RateEstimate<T>> {
    if !(snr > T::zero() && snr.is_finite()) {
        return Err(Error::InvalidSnr(snr.to_f64().unwrap_or(f64::NAN)));
    }
    let half = T::lit(0.5);
    let value = half * snr.ln() + bound_constant::<T>()
        - (T::lit(2.0) * snr * cfg.delta()).recip()
        - snr / T::lit(4.0) * mean_square_g_deviation(cfg);
    Ok(RateEstimate::analytic(value, snr, cfg.samples_per_symbol()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fade::{moment_f2, moment_f4};

    #[test]
    fn limit_constant_value() {
        let g: f64 = asymptotic_gap();
        assert!((g - (-3.886_241_391_572_656)).abs() < 1e-12);
    }

    #[test]
    fn composes_from_parts() {
        let cfg = ChannelConfig::new(1.0f64, 1.0, 100, 64).unwrap();
        let snr = 1e4;
        let est = analytic_rate_lower_bound(snr, &cfg).unwrap();
        let (m2, m4) = (moment_f2(cfg.a()).unwrap(), moment_f4(cfg.a()).unwrap());
        let ms_g = (m4 - m2 * m2) / 100.0 + (m2 - 1.0).powi(2);
        let expect = 0.5 * snr.ln()
            - 2.0
            - 0.5 * (8.0 * std::f64::consts::PI).ln()
            - 1.0 / (2.0 * snr * 0.01)
            - snr / 4.0 * ms_g;
        assert!((est.value_nats - expect).abs() <= 1e-12 * expect.abs());
        assert_eq!(est.gap_nats, est.value_nats - 0.5 * snr.ln());
        assert_eq!(est.trials, 0);
        assert_eq!(est.stderr, 0.0);
    }

    #[test]
    fn rejects_bad_snr() {
        let cfg = ChannelConfig::new(1.0f64, 1.0, 100, 64).unwrap();
        assert!(analytic_rate_lower_bound(0.0, &cfg).is_err());
        assert!(analytic_rate_lower_bound(f64::NAN, &cfg).is_err());
    }

    #[test]
    fn invariant_to_joint_power_scaling() {
        let c1 = ChannelConfig::new(1.0f64, 1.0, 32, 64).unwrap();
        let c2 = c1.with_sigma2_n(37.5).unwrap();
        let a = analytic_rate_lower_bound(1e3, &c1).unwrap().value_nats;
        let b = analytic_rate_lower_bound(1e3, &c2).unwrap().value_nats;
        assert!((a - b).abs() <= 1e-10 * a.abs());
    }
}
