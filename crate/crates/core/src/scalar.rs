//! Scalar abstractions.
//!
//! [`Scalar`] is anything a polynomial family can be evaluated in: `f32`,
//! `f64` and [`BigRational`]. [`Real`] narrows that to binary floating point
//! for the summation engine.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, Num, ToPrimitive};

pub trait Scalar: Clone + Debug + Num + Neg<Output = Self> {
    fn from_rational(r: &BigRational) -> Self;

    fn from_bigint(i: &BigInt) -> Self {
        Self::from_rational(&BigRational::from_integer(i.clone()))
    }
}

impl Scalar for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }
}

impl Scalar for f64 {
    fn from_rational(r: &BigRational) -> Self {
        rational_to_f64(r)
    }
}

impl Scalar for f32 {
    fn from_rational(r: &BigRational) -> Self {
        rational_to_f64(r) as f32
    }
}

pub trait Real:
    Scalar + Float + FloatConst + FromPrimitive + ToPrimitive + Display + Send + Sync + 'static
{
    /// Lossless-enough conversion from an `f64` literal.
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("finite literal")
    }

    fn from_usize_(n: usize) -> Self {
        Self::from_usize(n).expect("index fits")
    }
}

impl Real for f64 {}
impl Real for f32 {}

/// Correctly scaled conversion of a rational of any size; keeps the top 64
/// bits of numerator and denominator.
pub fn rational_to_f64(r: &BigRational) -> f64 {
    let (m, e) = rational_mantissa(r);
    if m == 0.0 {
        return 0.0;
    }
    if e > 2000 {
        return m.signum() * f64::INFINITY;
    }
    if e < -2200 {
        return 0.0;
    }
    // two steps keep the intermediate power finite
    let half = e / 2;
    m * 2f64.powi(half as i32) * 2f64.powi((e - half) as i32)
}

/// Returns `(m, e)` with `r ≈ m·2^e` and `|m|` of order one.
pub(crate) fn rational_mantissa(r: &BigRational) -> (f64, i64) {
    let (n, en) = top_bits(r.numer());
    let (d, ed) = top_bits(r.denom());
    if n == 0.0 {
        return (0.0, 0);
    }
    (n / d, en - ed)
}

fn top_bits(i: &BigInt) -> (f64, i64) {
    let bits = i.bits() as i64;
    if bits <= 64 {
        return (i.to_f64().unwrap_or(0.0), 0);
    }
    let shift = bits - 64;
    let top: BigInt = i >> (shift as usize);
    (top.to_f64().unwrap_or(0.0), shift)
}
