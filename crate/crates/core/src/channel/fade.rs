use num_complex::Complex;
use rand::Rng;

use super::config::ChannelConfig;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Left-Riemann approximation of the filtered fade over one sample interval:
/// `(1/J) sum_{i<J} exp(j (sub_path[i] - theta_k))`.
///
/// `sub_path` must hold exactly `substeps` phases and start at `theta_k`.
pub fn filtered_fade<T: Scalar>(sub_path: &[T], theta_k: T, substeps: usize) -> Result<Complex<T>> {
    if sub_path.len() != substeps || substeps == 0 {
        return Err(Error::LengthMismatch {
            expected: substeps,
            actual: sub_path.len(),
        });
    }
    if sub_path[0] != theta_k {
        return Err(Error::LeftEdgeMismatch);
    }
    let sum = sub_path
        .iter()
        .fold(Complex::new(T::zero(), T::zero()), |acc, &t| {
            let (s, c) = (t - theta_k).sin_cos();
            Complex::new(acc.re + c, acc.im + s)
        });
    Ok(sum.unscale(T::from_count(substeps)))
}

/// Draws filtered fades one sample interval at a time without storing the
/// phase path. Uses the same sub-step law as the path simulator.
#[derive(Debug, Clone, Copy)]
pub struct FadeSampler<T> {
    substeps: usize,
    step_std: T,
}

/// One sampled interval: the fade and the total phase increment `W_k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FadeDraw<T> {
    pub fade: Complex<T>,
    pub increment: T,
}

impl<T: Scalar> FadeSampler<T> {
    pub fn new(cfg: &ChannelConfig<T>) -> Self {
        Self {
            substeps: cfg.substeps(),
            step_std: cfg.substep_variance().sqrt(),
        }
    }

    #[inline]
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> FadeDraw<T> {
        let mut phi = T::zero();
        let (mut re, mut im) = (T::zero(), T::zero());
        for _ in 0..self.substeps {
            let (s, c) = phi.sin_cos();
            re = re + c;
            im = im + s;
            phi = phi + self.step_std * T::standard_normal(rng);
        }
        FadeDraw {
            fade: Complex::new(re, im).unscale(T::from_count(self.substeps)),
            increment: phi,
        }
    }

    /// Fades of the same path at `J` and at `J / factor` sub-steps
    /// (every `factor`-th fine point). `factor` must divide `J`.
    #[inline]
    pub fn sample_nested<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        factor: usize,
    ) -> (Complex<T>, Complex<T>) {
        debug_assert!(factor > 0 && self.substeps % factor == 0);
        let mut phi = T::zero();
        let mut fine = Complex::new(T::zero(), T::zero());
        let mut coarse = fine;
        for i in 0..self.substeps {
            let (s, c) = phi.sin_cos();
            fine.re = fine.re + c;
            fine.im = fine.im + s;
            if i % factor == 0 {
                coarse.re = coarse.re + c;
                coarse.im = coarse.im + s;
            }
            phi = phi + self.step_std * T::standard_normal(rng);
        }
        (
            fine.unscale(T::from_count(self.substeps)),
            coarse.unscale(T::from_count(self.substeps / factor)),
        )
    }
}
