use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Input symbols `X_1..X_n` of one transmitted block.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolBlock<T> {
    symbols: Vec<Complex<T>>,
}

impl<T: Scalar> SymbolBlock<T> {
    pub fn new(symbols: Vec<Complex<T>>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::EmptyBlock);
        }
        if let Some(i) = symbols
            .iter()
            .position(|x| !(x.re.is_finite() && x.im.is_finite()))
        {
            return Err(Error::NonFiniteSymbol(i));
        }
        Ok(Self { symbols })
    }

    /// Builds symbols `X_A e^{j X_Phi}` from amplitude and phase sequences.
    pub fn from_polar(amplitudes: &[T], phases: &[T]) -> Result<Self> {
        if amplitudes.len() != phases.len() {
            return Err(Error::LengthMismatch {
                expected: amplitudes.len(),
                actual: phases.len(),
            });
        }
        Self::new(
            amplitudes
                .iter()
                .zip(phases)
                .map(|(&r, &p)| Complex::from_polar(r, p))
                .collect(),
        )
    }

    /// `n` copies of the real symbol `amplitude`.
    pub fn constant(amplitude: T, n: usize) -> Result<Self> {
        Self::new(vec![Complex::new(amplitude, T::zero()); n])
    }

    pub fn symbols(&self) -> &[Complex<T>] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// `X_A = |X_m|`.
    pub fn amplitude(&self, m: usize) -> T {
        self.symbols[m].norm()
    }

    /// `X_Phi = arg X_m` in (-pi, pi].
    pub fn phase(&self, m: usize) -> T {
        self.symbols[m].arg()
    }

    /// `(1/n) sum |X_m|^2`.
    pub fn empirical_power(&self) -> T {
        self.symbols.iter().map(|x| x.norm_sqr()).sum::<T>() / T::from_count(self.symbols.len())
    }
}
