//! Fade moments from their defining integrals.

use crate::quad;
use std::f64::consts::PI;

/// `E|F|^2 = Delta^-2 int_0^Delta int_0^Delta e^{-pi beta |t1 - t2|} dt2 dt1`,
/// folded onto the triangle `t2 < t1`.
pub fn second_moment(beta: f64, delta: f64) -> f64 {
    let c = PI * beta;
    let inner = |t1: f64| quad::integrate(|t2| (-c * (t1 - t2)).exp(), 0.0, t1, 1e-14, 0.0);
    2.0 * quad::integrate(inner, 0.0, delta, 1e-13, 0.0) / (delta * delta)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_kernel_gives_one() {
        assert!((second_moment(0.0, 0.3) - 1.0).abs() < 1e-13);
    }
}
