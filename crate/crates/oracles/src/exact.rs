//! Exact rational evaluation of the fade-moment closed forms at a binary
//! floating-point argument.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, One, Signed, ToPrimitive, Zero};

/// Terms of the exponential series. For `|x| <= 4` the remainder is below 1e-90.
const EXP_TERMS: u32 = 110;

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// The exact value of an `f64`.
pub fn rational(x: f64) -> BigRational {
    BigRational::from_f64(x).expect("finite float")
}

/// `exp(x)` by the truncated Maclaurin series; intended for `|x| <= 4`.
pub fn exp(x: &BigRational) -> BigRational {
    let mut sum = BigRational::one();
    let mut term = BigRational::one();
    for k in 1..=EXP_TERMS {
        term = term * x / int(i64::from(k));
        sum += &term;
    }
    sum
}

/// `2 (e^x - 1 - x) / x^2` evaluated exactly at the `f64` argument `x != 0`.
pub fn moment_f2(x: f64) -> BigRational {
    assert!(x != 0.0);
    let x = rational(x);
    let num = (exp(&x) - BigRational::one() - &x) * int(2);
    num / (&x * &x)
}

/// `(783 - 784 a + a^4 + 540 x + 240 a x + 144 x^2) / (18 x^4)` with `a = e^x`,
/// evaluated exactly at the `f64` argument `x != 0`.
pub fn moment_f4(x: f64) -> BigRational {
    assert!(x != 0.0);
    let x = rational(x);
    let a = exp(&x);
    let a2 = &a * &a;
    let a4 = &a2 * &a2;
    let x2 = &x * &x;
    let num = int(783) - int(784) * &a + a4 + int(540) * &x + int(240) * &a * &x + int(144) * &x2;
    num / (int(18) * &x2 * &x2)
}

/// `|approx - exact| / |exact|`, computed in rational arithmetic.
pub fn relative_error(approx: f64, exact: &BigRational) -> f64 {
    if exact.is_zero() {
        return approx.abs();
    }
    ((rational(approx) - exact).abs() / exact.abs())
        .to_f64()
        .unwrap_or(f64::INFINITY)
}
