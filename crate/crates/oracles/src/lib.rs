//! Independent numerical oracles for the wienerlab test suites.
//!
//! Nothing here shares code with the library under test: quadrature is
//! adaptive Gauss-Legendre, and the "extended precision" evaluations are
//! exact rational arithmetic with a truncated exponential series whose
//! remainder is far below `f64` resolution.

pub mod exact;
pub mod fade;
pub mod quad;
