use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};

use super::stirling::{stirling1_row, stirling1_signed};

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, j| acc * j)
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

/// Generalised harmonic number `∑_{j=1}^{n} j^{−order}`.
///
/// # Example
/// ```
/// use invfac::exact_core::harmonic;
/// use num_rational::BigRational;
/// assert_eq!(harmonic(3, 1), BigRational::new(11.into(), 6.into()));
/// ```
pub fn harmonic(n: usize, order: u32) -> BigRational {
    (1..=n).fold(BigRational::zero(), |acc, j| {
        acc + BigRational::new(BigInt::one(), BigInt::from(j).pow(order))
    })
}

fn bernoulli_cache() -> &'static Mutex<Vec<BigRational>> {
    static C: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();
    C.get_or_init(|| Mutex::new(vec![BigRational::one()]))
}

/// Bernoulli number with `B_1 = −1/2`.
pub fn bernoulli(n: usize) -> BigRational {
    let mut cache = bernoulli_cache().lock().expect("bernoulli lock");
    while cache.len() <= n {
        let m = cache.len();
        if m > 1 && m % 2 == 1 {
            cache.push(BigRational::zero());
            continue;
        }
        let mut s = BigRational::zero();
        let mut c = BigInt::one();
        for (j, b) in cache.iter().enumerate() {
            if !b.is_zero() {
                s += BigRational::from_integer(c.clone()) * b;
            }
            c = c * (m + 1 - j) / (j + 1);
        }
        cache.push(-s / BigRational::from_integer(BigInt::from(m + 1)));
    }
    cache[n].clone()
}

/// Cauchy number of the first kind, `∫₀¹ x(x−1)…(x−n+1) dx`.
pub fn cauchy_first(n: usize) -> BigRational {
    (0..=n)
        .map(|k| BigRational::new(stirling1_signed(n, k), BigInt::from(k + 1)))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Cauchy number of the second kind, `∫₀¹ x(x+1)…(x+n−1) dx`.
pub fn cauchy_second(n: usize) -> BigRational {
    stirling1_row(n)
        .iter()
        .enumerate()
        .map(|(k, s)| BigRational::new(s.clone(), BigInt::from(k + 1)))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Euler polynomial at zero, `2(1 − 2^{n+1})B_{n+1}/(n+1)`.
pub fn euler_poly_at_zero(n: usize) -> BigRational {
    let two_pow = BigInt::one() << (n + 1);
    let factor = BigRational::from_integer((BigInt::one() - two_pow) * 2);
    factor * bernoulli(n + 1) / BigRational::from_integer(BigInt::from(n + 1))
}
