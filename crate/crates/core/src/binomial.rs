//! Binomial coefficients, integer and polynomial.

use num_bigint::BigUint;
use num_traits::One;

use crate::scalar::Scalar;

/// `C(top, n)` with the multichoose convention: zero whenever `top < n`,
/// including negative `top`.
pub fn binomial(top: i64, n: usize) -> BigUint {
    if top < n as i64 {
        return BigUint::ZERO;
    }
    let top = top as u64;
    let n = n as u64;
    // C(top, n) = C(top, top - n); iterate the shorter side.
    let k = n.min(top - n);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= top - i;
        acc /= i + 1;
    }
    acc
}

/// Multichoose `((a over b))`: multisets of size `b` from `a` elements.
pub fn multichoose(a: i64, b: usize) -> BigUint {
    if b == 0 {
        return BigUint::one();
    }
    binomial(a + b as i64 - 1, b)
}

/// `y (y-1) ... (y-n+1) / n!` evaluated in any scalar type.
///
/// Agrees with [`binomial`] at every integer `y >= 0`.
pub fn binomial_at<S: Scalar>(y: &S, n: usize) -> S {
    let mut acc = S::one();
    for m in 0..n {
        acc = acc * (y.clone() - S::from_i64(m as i64)) / S::from_i64(m as i64 + 1);
    }
    acc
}
