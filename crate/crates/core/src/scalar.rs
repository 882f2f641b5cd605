//! Coefficient types for group-algebra elements and polynomials.
//!
//! Everything in [`crate::algebra`] is generic over [`Scalar`]. The exact
//! instantiation ([`crate::Rational`]) is the one every identity is checked
//! in; the floating-point instantiations exist for quick numerical
//! exploration and are only ever compared approximately.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{Num, Signed, Zero};

/// A field-like coefficient type.
pub trait Scalar: Num + Neg<Output = Self> + Clone + Debug + Display + Send + Sync {
    /// Whether arithmetic in this type is exact.
    const EXACT: bool;

    fn from_i64(v: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Exact equality for exact types, a relative tolerance otherwise.
    fn approx_eq(&self, other: &Self) -> bool;
}

impl Scalar for BigRational {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
}

impl Scalar for Ratio<i64> {
    const EXACT: bool = true;

    fn from_i64(v: i64) -> Self {
        Ratio::from_integer(v)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Ratio::new(num, den)
    }

    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
}

macro_rules! float_scalar {
    ($($t:ty => $eps:expr),*) => ($(
        impl Scalar for $t {
            const EXACT: bool = false;

            fn from_i64(v: i64) -> Self {
                v as $t
            }

            fn approx_eq(&self, other: &Self) -> bool {
                let scale = self.abs().max(other.abs()).max(1.0);
                (self - other).abs() <= $eps * scale
            }
        }
    )*)
}

float_scalar!(f32 => 1e-4, f64 => 1e-9);

/// Parses `a`, `-a`, `a/b` into an exact rational.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((num, den)) => {
            let num: BigInt = num.trim().parse().ok()?;
            let den: BigInt = den.trim().parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(BigRational::new(num, den))
        }
        None => s.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}

/// Renders a rational as `num/den`, or just `num` when integral.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}
