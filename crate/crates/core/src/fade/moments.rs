//! Closed-form moments of the filtered fade `F` as functions of
//! `a = exp(-pi beta delta)`.
//!
//! With `x = ln a`:
//!
//! ```text
//! E|F|^2 = 2 (a - 1 - x) / x^2
//! E|F|^4 = (783 - 784 a + a^4 + 540 x + 240 a x + 144 x^2) / (18 x^4)
//! ```
//!
//! Both numerators vanish as `x -> 0` (to second and fourth order), so near
//! `a = 1` the formulas are replaced by their Maclaurin series in `x`. The
//! series coefficients are exact rationals rounded once to `f64`:
//! `2 / (k+2)!` and `(4^(k+4) - 784 + 240 (k+4)) / (18 (k+4)!)`.

use crate::channel::ChannelConfig;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// `|ln a|` below which `E|F|^2` uses its series.
pub const M2_SERIES_CROSSOVER: f64 = 1e-2;

/// `|ln a|` below which `E|F|^4` uses its series. The fourth-order
/// cancellation costs about `1e-15 / (18 x^4)` relative in the closed form,
/// which is below 1e-14 only from `|x| ~ 0.5`.
pub const M4_SERIES_CROSSOVER: f64 = 0.5;

// Printed to 18 significant digits, which round-trips exactly.
#[allow(clippy::excessive_precision)]
const M2_SERIES: [f64; 10] = [
    1.00000000000000000e+00,
    3.33333333333333315e-01,
    8.33333333333333287e-02,
    1.66666666666666664e-02,
    2.77777777777777788e-03,
    3.96825396825396825e-04,
    4.96031746031746031e-05,
    5.51146384479717850e-06,
    5.51146384479717766e-07,
    5.01042167708834404e-08,
];

#[allow(clippy::excessive_precision)]
const M4_SERIES: [f64; 28] = [
    1.00000000000000000e+00,
    6.66666666666666630e-01,
    3.66666666666666641e-01,
    1.90476190476190466e-01,
    9.18650793650793718e-02,
    4.03439153439153417e-02,
    1.60780423280423267e-02,
    5.84014750681417349e-03,
    1.94609788359788359e-03,
    5.98745390412057095e-04,
    1.71065798545957281e-04,
    4.56172281569106961e-05,
    1.14042852448110388e-05,
    2.68335983959038717e-06,
    5.96302102856692313e-07,
    1.25537280076849318e-07,
    2.51074557621742986e-08,
    4.78237251328858858e-09,
    8.69522274524163022e-10,
    1.51221265106167309e-10,
    2.52035441831105114e-11,
    4.03256706924507424e-12,
    6.20394933727888959e-13,
    9.19103605521975546e-14,
    1.31300515074537244e-14,
    1.81104158723488599e-15,
    2.41472211631314312e-16,
    3.11577047266210708e-17,
];

/// Which evaluation path produced a moment.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Series,
    ClosedForm,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Series => "series",
            Branch::ClosedForm => "direct",
        }
    }
}

fn horner<T: Scalar>(coeffs: &[f64], x: T) -> T {
    coeffs
        .iter()
        .rev()
        .fold(T::zero(), |acc, &c| acc * x + T::lit(c))
}

fn log_a<T: Scalar>(a: T) -> Result<T> {
    if !(a > T::zero() && a <= T::one()) {
        return Err(Error::MomentDomain(a.to_f64().unwrap_or(f64::NAN)));
    }
    Ok(a.ln())
}

/// Series of `E|F|^2` in `x = ln a`.
pub fn moment_f2_series<T: Scalar>(x: T) -> T {
    horner(&M2_SERIES, x)
}

/// Closed form of `E|F|^2` in `x = ln a`, written with `expm1`.
pub fn moment_f2_closed<T: Scalar>(x: T) -> T {
    let two = T::lit(2.0);
    two * (x.exp_m1() - x) / (x * x)
}

/// Series of `E|F|^4` in `x = ln a`.
pub fn moment_f4_series<T: Scalar>(x: T) -> T {
    horner(&M4_SERIES, x)
}

/// Closed form of `E|F|^4` in `x = ln a`. Uses `a - 1 = expm1(x)` and
/// `a^4 - 1 = expm1(4x)`, which removes the constant-term cancellation.
pub fn moment_f4_closed<T: Scalar>(x: T) -> T {
    let e1 = x.exp_m1();
    let e4 = (T::lit(4.0) * x).exp_m1();
    let num = e4 - T::lit(784.0) * e1
        + T::lit(780.0) * x
        + T::lit(240.0) * x * e1
        + T::lit(144.0) * x * x;
    let x2 = x * x;
    num / (T::lit(18.0) * x2 * x2)
}

/// `E|F_1|^2` with the evaluation branch used.
pub fn moment_f2_branch<T: Scalar>(a: T) -> Result<(T, Branch)> {
    let x = log_a(a)?;
    Ok(if x.abs() < T::lit(M2_SERIES_CROSSOVER) {
        (moment_f2_series(x), Branch::Series)
    } else {
        (moment_f2_closed(x), Branch::ClosedForm)
    })
}

/// `E|F_1|^4` with the evaluation branch used.
pub fn moment_f4_branch<T: Scalar>(a: T) -> Result<(T, Branch)> {
    let x = log_a(a)?;
    Ok(if x.abs() < T::lit(M4_SERIES_CROSSOVER) {
        (moment_f4_series(x), Branch::Series)
    } else {
        (moment_f4_closed(x), Branch::ClosedForm)
    })
}

/// `E|F_1|^2` for `a` in (0, 1]; `a = 1` gives the limit 1.
pub fn moment_f2<T: Scalar>(a: T) -> Result<T> {
    moment_f2_branch(a).map(|(v, _)| v)
}

/// `E|F_1|^4` for `a` in (0, 1]; `a = 1` gives the limit 1.
pub fn moment_f4<T: Scalar>(a: T) -> Result<T> {
    moment_f4_branch(a).map(|(v, _)| v)
}

/// All fade moments for one configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadeMoments<T> {
    pub a: T,
    pub m2: T,
    pub m4: T,
    /// `Var |F_1|^2 = m4 - m2^2`.
    pub var_f2: T,
    /// `E[(G - 1)^2]` for the configuration's `L`.
    pub ms_g: T,
    pub m2_branch: Branch,
    pub m4_branch: Branch,
}

impl<T: Scalar> FadeMoments<T> {
    pub fn from_config(cfg: &ChannelConfig<T>) -> Self {
        // a is in (0, 1] by construction of the config.
        let (m2, m2_branch) = moment_f2_branch(cfg.a()).expect("config keeps a in (0, 1]");
        let (m4, m4_branch) = moment_f4_branch(cfg.a()).expect("config keeps a in (0, 1]");
        let var_f2 = (m4 - m2 * m2).max(T::zero());
        let dev = m2 - T::one();
        let ms_g = var_f2 / T::from_count(cfg.samples_per_symbol()) + dev * dev;
        Self {
            a: cfg.a(),
            m2,
            m4,
            var_f2,
            ms_g,
            m2_branch,
            m4_branch,
        }
    }
}

/// `E[(G - 1)^2] = Var(|F_1|^2) / L + (E|F_1|^2 - 1)^2`.
pub fn mean_square_g_deviation<T: Scalar>(cfg: &ChannelConfig<T>) -> T {
    FadeMoments::from_config(cfg).ms_g
}

/// The small-delta limit of `E[(G - 1)^2] / delta^2`, `(pi beta)^2 / 9`.
pub fn ms_g_limit_ratio<T: Scalar>(beta: T) -> T {
    let pb = T::PI() * beta;
    pb * pb / T::lit(9.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn factorial(n: u32) -> u128 {
        (1..=n as u128).product()
    }

    #[test]
    fn series_coefficients_match_their_formulas() {
        for (k, &c) in M2_SERIES.iter().enumerate() {
            let want = 2.0 / factorial(k as u32 + 2) as f64;
            assert!((c - want).abs() <= 2e-16 * want, "m2 c_{k}");
        }
        for (k, &c) in M4_SERIES.iter().enumerate() {
            let n = k as u32 + 4;
            let num = 4u128.pow(n) + 240 * n as u128 - 784;
            let want = num as f64 / (18 * factorial(n)) as f64;
            assert!((c - want).abs() <= 4e-16 * want, "m4 c_{k}: {c:e} vs {want:e}");
        }
    }

    #[test]
    fn limit_at_a_equal_one() {
        assert_eq!(moment_f2(1.0f64).unwrap(), 1.0);
        assert_eq!(moment_f4(1.0f64).unwrap(), 1.0);
    }

    #[test]
    fn rejects_out_of_domain() {
        assert!(moment_f2(0.0f64).is_err());
        assert!(moment_f2(1.5f64).is_err());
        assert!(moment_f4(-0.1f64).is_err());
        assert!(moment_f4(f64::NAN).is_err());
    }

    #[test]
    fn first_order_slope_is_one_third() {
        let x = -1e-6f64;
        let slope = (moment_f2(x.exp()).unwrap() - 1.0) / x;
        assert!((slope - 1.0 / 3.0).abs() / (1.0 / 3.0) < 1e-4);
    }

    #[test]
    fn large_diffusion_values() {
        // x = -1: 2 (e^-1 - 1 + 1) = 2/e.
        let m2 = moment_f2((-1.0f64).exp()).unwrap();
        assert!((m2 - 2.0 / std::f64::consts::E).abs() < 1e-15);
        // Far from a = 1 the fade washes out: E|F|^2 ~ 2/|x|.
        let m2 = moment_f2((-700.0f64).exp()).unwrap();
        assert!((m2 - 2.0 * 699.0 / 490_000.0).abs() < 1e-16);
    }

    #[test]
    fn branches_switch_at_crossovers() {
        let inside = (-0.5 * M2_SERIES_CROSSOVER).exp();
        let outside = (-2.0 * M2_SERIES_CROSSOVER).exp();
        assert_eq!(moment_f2_branch(inside).unwrap().1, Branch::Series);
        assert_eq!(moment_f2_branch(outside).unwrap().1, Branch::ClosedForm);
        assert_eq!(moment_f4_branch((-0.4f64).exp()).unwrap().1, Branch::Series);
        assert_eq!(
            moment_f4_branch((-0.6f64).exp()).unwrap().1,
            Branch::ClosedForm
        );
    }

    #[test]
    fn series_and_closed_form_agree_at_crossovers() {
        let x = -M2_SERIES_CROSSOVER;
        let r2 = (moment_f2_series(x) - moment_f2_closed(x)).abs() / moment_f2_closed(x);
        assert!(r2 < 1e-12, "m2: {r2}");
        let x = -M4_SERIES_CROSSOVER;
        let r4 = (moment_f4_series(x) - moment_f4_closed(x)).abs() / moment_f4_closed(x);
        assert!(r4 < 1e-13, "m4: {r4}");
    }

    #[test]
    fn zero_diffusion_ms_g_vanishes() {
        let cfg = ChannelConfig::degenerate(0.0f64, 1.0, 1.0, 8, 4).unwrap();
        assert_eq!(mean_square_g_deviation(&cfg), 0.0);
    }

    #[test]
    fn f32_is_supported() {
        let m2 = moment_f2((-0.1f32).exp()).unwrap();
        let m2d = moment_f2((-0.1f64).exp()).unwrap();
        assert!((f64::from(m2) - m2d).abs() < 1e-6);
    }

    proptest! {
        #[test]
        fn moment_invariants(x in -50.0f64..0.0) {
            let a = x.exp();
            let m2 = moment_f2(a).unwrap();
            let m4 = moment_f4(a).unwrap();
            prop_assert!(m2 > 0.0 && m2 <= 1.0);
            prop_assert!(m4 <= m2 * (1.0 + 1e-12));
            prop_assert!(m4 - m2 * m2 >= -1e-12);
        }

        #[test]
        fn m2_decreases_with_delta(beta in 0.1f64..5.0, d in 1e-4f64..0.5) {
            let a1 = (-std::f64::consts::PI * beta * d).exp();
            let a2 = (-std::f64::consts::PI * beta * d * 1.1).exp();
            prop_assert!(moment_f2(a2).unwrap() < moment_f2(a1).unwrap());
        }
    }
}
