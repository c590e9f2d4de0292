use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::streams::ElementarySymmetric;
use crate::exact_core::{binomial, factorial, stirling1_column};
use crate::scalar::Real;
use crate::series_engine::{eval_series, EvalOptions, EvalResult};

/// Both sides of `∑_{j=0}^{m} C(m,j)(−1)^j/(j+p)^{k+1} =
/// (p−1)!·∑_{n≥0} ⎡n k⎤/(n!·(n+m+1)…(n+m+p))`, the right side truncated at
/// `n = N`. Returns `(lhs, rhs_partial)`, both exact.
///
/// # Example
/// ```
/// use invfac::representations::binomial_identity;
/// use num_rational::BigRational;
/// let (lhs, rhs) = binomial_identity(2, 1, 0, 0);
/// assert_eq!(lhs, BigRational::new(1.into(), 6.into()));
/// assert_eq!(rhs, lhs);
/// ```
pub fn binomial_identity(p: usize, m: usize, k: usize, n_max: usize) -> (BigRational, BigRational) {
    assert!(p >= 1, "p must be positive");
    let mut lhs = BigRational::zero();
    for j in 0..=m {
        let c = BigRational::from_integer(binomial(m, j));
        let d = BigRational::from_integer(BigInt::from(j + p).pow(k as u32 + 1));
        if j % 2 == 0 {
            lhs += c / d;
        } else {
            lhs -= c / d;
        }
    }

    // common denominator N!·L^p with L = lcm(1..=N+m+p)
    let top = n_max + m + p;
    let l = (2..=top).fold(BigInt::one(), |acc, i| acc.lcm(&BigInt::from(i)));
    let column = stirling1_column(k, n_max);
    let mut tail_fact = BigInt::one();
    let mut numer = BigInt::zero();
    for n in (0..=n_max).rev() {
        if n < n_max {
            tail_fact *= n + 1;
        }
        let s = &column[n];
        if s.is_zero() {
            continue;
        }
        let mut t = s * &tail_fact;
        for i in 1..=p {
            t *= &l / BigInt::from(n + m + i);
        }
        numer += t;
    }
    let denom = factorial(n_max) * l.pow(p as u32);
    let rhs = BigRational::new(numer * factorial(p - 1), denom);
    debug_assert!(!rhs.is_negative());
    (lhs, rhs)
}

/// The full right side `(p−1)!·∑_{n≥0} ⎡n k⎤/(n!·(n+m+1)…(n+m+p))` summed
/// by the engine.
pub fn binomial_rhs_series<T: Real>(
    p: usize,
    m: usize,
    k: usize,
    opts: &EvalOptions<T>,
) -> EvalResult<T> {
    assert!(p >= 1, "p must be positive");
    let scale = (1..p).fold(T::one(), |acc, i| acc * T::from_usize_(i));
    let mut es = ElementarySymmetric::<T>::new(k.max(1) - 1);
    let terms = (0..).map(move |n: usize| {
        let denom = (1..=p).fold(T::one(), |acc, i| acc * T::from_usize_(n + m + i));
        if n == 0 {
            return if k == 0 { scale / denom } else { T::zero() };
        }
        if n > 1 {
            es.advance();
        }
        if k == 0 {
            return T::zero();
        }
        // ⎡n k⎤/n! = e_{k−1}/n
        scale * es.get(k - 1) / (T::from_usize_(n) * denom)
    });
    eval_series(terms, opts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::stirling1_unsigned;
    use crate::scalar::rational_to_f64;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn naive_rhs(p: usize, m: usize, k: usize, n_max: usize) -> BigRational {
        let mut s = BigRational::zero();
        for n in 0..=n_max {
            let mut d = BigRational::from_integer(factorial(n));
            for i in 1..=p {
                d *= BigRational::from_integer((n + m + i).into());
            }
            s += BigRational::from_integer(stirling1_unsigned(n, k)) / d;
        }
        s * BigRational::from_integer(factorial(p - 1))
    }

    #[test]
    fn examples() {
        let (lhs, _) = binomial_identity(1, 0, 2, 10);
        assert_eq!(lhs, q(1, 1));
        let (lhs, _) = binomial_identity(1, 1, 1, 10);
        assert_eq!(lhs, q(3, 4));
        let (lhs, rhs) = binomial_identity(2, 1, 0, 5);
        assert_eq!((lhs.clone(), rhs), (q(1, 6), q(1, 6)));
    }

    #[test]
    fn matches_naive_sum() {
        for p in 1..=3 {
            for m in 0..=2 {
                for k in 0..=3 {
                    let (_, rhs) = binomial_identity(p, m, k, 25);
                    assert_eq!(rhs, naive_rhs(p, m, k, 25), "p={p} m={m} k={k}");
                }
            }
        }
    }

    #[test]
    fn engine_sum_reaches_lhs() {
        let opts = EvalOptions::new(1e-11, 200_000);
        for (p, m, k) in [(1, 0, 1), (1, 2, 3), (2, 1, 2), (3, 0, 0)] {
            let (lhs, _) = binomial_identity(p, m, k, 0);
            let r = binomial_rhs_series::<f64>(p, m, k, &opts);
            assert!(
                (r.value - rational_to_f64(&lhs)).abs() < 1e-8,
                "p={p} m={m} k={k} {r:?}"
            );
        }
    }

    #[test]
    fn partial_sums_approach_lhs() {
        for (p, m, k) in [(2, 1, 1), (3, 2, 2), (2, 0, 3)] {
            let (lhs, rhs) = binomial_identity(p, m, k, 400);
            let gap = rational_to_f64(&(lhs - rhs));
            assert!(gap > 0.0 && gap < 1e-3, "p={p} m={m} k={k} gap={gap}");
        }
    }
}
