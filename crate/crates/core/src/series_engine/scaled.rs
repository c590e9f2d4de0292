use std::ops::{Div, Mul, Neg};

use num_rational::BigRational;

use crate::scalar::{rational_mantissa, Real};

/// Float mantissa with a separate binary exponent, `mant·2^exp`.
///
/// Factorially growing coefficients and denominator products stay finite in
/// this form; only their ratio is brought back to `T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Scaled<T> {
    mant: T,
    exp: i64,
}

impl<T: Real> Scaled<T> {
    pub fn new(v: T) -> Self {
        Scaled { mant: v, exp: 0 }.normalized()
    }

    pub fn zero() -> Self {
        Scaled {
            mant: T::zero(),
            exp: 0,
        }
    }

    pub fn one() -> Self {
        Self::new(T::one())
    }

    /// `2^e` exactly.
    pub fn pow2(e: i64) -> Self {
        Scaled {
            mant: T::one(),
            exp: e,
        }
    }

    pub fn from_rational(r: &BigRational) -> Self {
        let (m, e) = rational_mantissa(r);
        Scaled {
            mant: T::lit(m),
            exp: e,
        }
        .normalized()
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn mantissa(&self) -> T {
        self.mant
    }

    pub fn exponent(&self) -> i64 {
        self.exp
    }

    pub fn abs(self) -> Self {
        Scaled {
            mant: self.mant.abs(),
            exp: self.exp,
        }
    }

    /// Natural logarithm of the magnitude.
    pub fn ln_abs(&self) -> T {
        self.mant.abs().ln() + T::from_i64(self.exp).expect("exponent") * T::LN_2()
    }

    pub fn to_real(self) -> T {
        if self.mant.is_zero() {
            return self.mant;
        }
        let limit = max_exp::<T>();
        if self.exp > 2 * limit {
            return self.mant.signum() * T::infinity();
        }
        if self.exp < -3 * limit {
            return T::zero() * self.mant.signum();
        }
        let half = self.exp / 2;
        let two = T::lit(2.0);
        self.mant * two.powi(half as i32) * two.powi((self.exp - half) as i32)
    }

    fn normalized(mut self) -> Self {
        if self.mant.is_zero() || !self.mant.is_finite() {
            self.exp = if self.mant.is_zero() { 0 } else { self.exp };
            return self;
        }
        let (hi, lo, step) = bounds::<T>();
        while self.mant.abs() > hi {
            self.mant = self.mant * lo;
            self.exp += step;
        }
        while self.mant.abs() < lo {
            self.mant = self.mant * hi;
            self.exp -= step;
        }
        self
    }
}

fn max_exp<T: Real>() -> i64 {
    T::max_value().log2().to_i64().unwrap_or(1024)
}

/// Renormalisation window `[2^−s, 2^s]`, small enough that a product of two
/// mantissas cannot overflow `T`.
fn bounds<T: Real>() -> (T, T, i64) {
    let step = max_exp::<T>() / 4;
    let hi = T::lit(2.0).powi(step as i32);
    (hi, hi.recip(), step)
}

impl<T: Real> Mul for Scaled<T> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Scaled {
            mant: self.mant * o.mant,
            exp: self.exp + o.exp,
        }
        .normalized()
    }
}

impl<T: Real> Div for Scaled<T> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        Scaled {
            mant: self.mant / o.mant,
            exp: self.exp - o.exp,
        }
        .normalized()
    }
}

impl<T: Real> Mul<T> for Scaled<T> {
    type Output = Self;
    fn mul(self, o: T) -> Self {
        Scaled {
            mant: self.mant * o,
            exp: self.exp,
        }
        .normalized()
    }
}

impl<T: Real> Div<T> for Scaled<T> {
    type Output = Self;
    fn div(self, o: T) -> Self {
        Scaled {
            mant: self.mant / o,
            exp: self.exp,
        }
        .normalized()
    }
}

impl<T: Real> Neg for Scaled<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Scaled {
            mant: -self.mant,
            exp: self.exp,
        }
    }
}
