use num_bigint::BigInt;

use super::numbers::factorial;
use super::stirling::stirling2_row;
use crate::scalar::Scalar;

/// Coefficients of `x(x+1)…(x+n−1)` in ascending powers, by direct
/// polynomial multiplication.
pub fn rising_factorial_coeffs(n: usize) -> Vec<BigInt> {
    let mut p = vec![BigInt::from(1)];
    for j in 0..n {
        // multiply by (x + j)
        let mut next = vec![BigInt::from(0); p.len() + 1];
        for (i, c) in p.iter().enumerate() {
            next[i] += c * j;
            next[i + 1] += c;
        }
        p = next;
    }
    p
}

fn horner<S: Scalar>(coeffs: impl DoubleEndedIterator<Item = S>, x: &S) -> S {
    coeffs.rev().fold(S::zero(), |acc, c| acc * x.clone() + c)
}

/// Geometric polynomial `ω_n(x) = ∑ S(n,k)·k!·x^k`.
///
/// # Example
/// ```
/// use invfac::exact_core::geometric_poly;
/// assert_eq!(geometric_poly(2, &1.0f64), 3.0);
/// ```
pub fn geometric_poly<S: Scalar>(n: usize, x: &S) -> S {
    let row = stirling2_row(n);
    let coeffs: Vec<S> = row
        .iter()
        .enumerate()
        .map(|(k, s)| S::from_bigint(&(s * factorial(k))))
        .collect();
    horner(coeffs.into_iter(), x)
}

/// Exponential (Touchard) polynomial `φ_n(x) = ∑ S(n,k)·x^k`.
pub fn exponential_poly<S: Scalar>(n: usize, x: &S) -> S {
    let row = stirling2_row(n);
    horner(row.iter().map(S::from_bigint), x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{euler_poly_at_zero, stirling1_row};
    use num_rational::BigRational;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn rising_factorial_examples() {
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(rising_factorial_coeffs(4), ints(&[0, 6, 11, 6, 1]));
        assert_eq!(rising_factorial_coeffs(0), ints(&[1]));
        assert_eq!(rising_factorial_coeffs(1), ints(&[0, 1]));
    }

    #[test]
    fn rising_factorial_equals_stirling_rows() {
        for n in 0..=30 {
            assert_eq!(rising_factorial_coeffs(n), stirling1_row(n).to_vec());
        }
    }

    #[test]
    fn geometric_examples() {
        assert_eq!(geometric_poly(0, &q(7, 3)), q(1, 1));
        assert_eq!(geometric_poly(2, &q(1, 1)), q(3, 1));
        assert_eq!(geometric_poly(2, &q(-1, 2)), q(0, 1));
        assert_eq!(geometric_poly(2, &q(-1, 2)), euler_poly_at_zero(2));
    }

    #[test]
    fn geometric_at_minus_half_gives_euler_zero() {
        for n in 0..25 {
            assert_eq!(geometric_poly(n, &q(-1, 2)), euler_poly_at_zero(n), "n={n}");
        }
    }

    #[test]
    fn exponential_examples() {
        assert_eq!(exponential_poly(0, &q(5, 1)), q(1, 1));
        assert_eq!(exponential_poly(2, &q(1, 1)), q(2, 1));
        assert_eq!(exponential_poly(3, &q(1, 1)), q(5, 1));
        assert_eq!(exponential_poly(3, &2.0f64), 22.0);
        assert_eq!(exponential_poly(3, &2.0f32), 22.0);
    }
}
