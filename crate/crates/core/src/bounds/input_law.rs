use rand::Rng;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Shifted-exponential law of the symbol power `X_P = X_A^2`:
/// `X_P = P_min + Exp(mean lambda)` with `lambda = P - P_min`, so `E[X_P] = P`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InputLaw<T> {
    p: T,
    p_min: T,
    lambda: T,
}

impl<T: Scalar> InputLaw<T> {
    pub fn new(p: T, p_min: T) -> Result<Self> {
        if !(p.is_finite() && p_min > T::zero() && p_min < p) {
            return Err(Error::InvalidLaw(format!(
                "need 0 < P_min < P, got P = {p}, P_min = {p_min}"
            )));
        }
        Ok(Self {
            p,
            p_min,
            lambda: p - p_min,
        })
    }

    /// `P_min = P / 2`.
    pub fn half(p: T) -> Result<Self> {
        Self::new(p, p / T::lit(2.0))
    }

    /// `P_min = fraction * P`.
    pub fn with_fraction(p: T, fraction: T) -> Result<Self> {
        Self::new(p, p * fraction)
    }

    pub fn power(&self) -> T {
        self.p
    }

    pub fn p_min(&self) -> T {
        self.p_min
    }

    pub fn lambda(&self) -> T {
        self.lambda
    }

    /// Density of `X_P` at `x_p`.
    pub fn density(&self, x_p: T) -> T {
        if x_p < self.p_min {
            T::zero()
        } else {
            (-(x_p - self.p_min) / self.lambda).exp() / self.lambda
        }
    }
}

/// One draw of `X_P`; always at least `P_min`.
pub fn sample_input_power<T: Scalar, R: Rng + ?Sized>(law: &InputLaw<T>, rng: &mut R) -> T {
    law.p_min + law.lambda * T::unit_exponential(rng)
}
