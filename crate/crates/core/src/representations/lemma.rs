use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::streams::ElementarySymmetric;
use crate::error::{domain, Result};
use crate::exact_core::{binomial, factorial, harmonic};
use crate::scalar::{Real, Scalar};
use crate::series_engine::{eval_series, EvalOptions, EvalResult};

/// `P_n(x) = ∑ c_j (x−1)^j`, the polynomial part of the `n`-fold
/// antiderivative `f_n` of `−ln(1−x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct PnPolynomial {
    pub n: usize,
    /// `c_0..=c_n` in the shifted basis.
    pub coeffs: Vec<BigRational>,
}

impl PnPolynomial {
    pub fn eval<S: Scalar>(&self, x: &S) -> S {
        let t = x.clone() - S::one();
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * t.clone() + S::from_rational(c))
    }

    /// `P_n(1) = c_0`.
    pub fn at_one(&self) -> &BigRational {
        &self.coeffs[0]
    }
}

/// # Example
/// ```
/// use invfac::representations::pn_polynomial;
/// use num_rational::BigRational;
/// let p2 = pn_polynomial(2).unwrap();
/// let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
/// assert_eq!(p2.coeffs, vec![q(1, 4), q(1, 1), q(3, 4)]);
/// ```
pub fn pn_polynomial(n: usize) -> Result<PnPolynomial> {
    if n == 0 {
        return Err(domain("P_n is defined for n ≥ 1"));
    }
    let nf = BigRational::from_integer(factorial(n));
    let mut coeffs: Vec<BigRational> = (0..n)
        .map(|j| {
            let k = n - j;
            BigRational::from_integer(binomial(n, k)) / (BigRational::from_integer(k.into()) * &nf)
        })
        .collect();
    coeffs.push(harmonic(n, 1) / nf);
    Ok(PnPolynomial { n, coeffs })
}

fn check_x<T: Real>(n: usize, x: T) -> Result<()> {
    if !(x >= -T::one() && x <= T::one()) {
        return Err(domain(format!("f_n needs −1 ≤ x ≤ 1, got {x}")));
    }
    if n == 0 && x == T::one() {
        return Err(domain("f_0 diverges at x = 1"));
    }
    Ok(())
}

/// `∑_{p≥1} x^p/(p(p+1)…(p+n))`, summed until the terms vanish.
fn reduced_series<T: Real>(n: usize, x: T) -> T {
    let mut r = x;
    for j in 1..=n + 1 {
        r = r / T::from_usize_(j);
    }
    let mut s = T::zero();
    let mut p = 1usize;
    while r != T::zero() && r.abs() > T::epsilon() * s.abs() * T::lit(0.25) {
        s = s + r;
        r = r * x * T::from_usize_(p) / T::from_usize_(p + n + 1);
        p += 1;
    }
    s
}

/// Closed form `P_n(x) + (−1)^{n−1}(1−x)^n ln(1−x)/n!`.
pub fn f_antiderivative_closed<T: Real>(n: usize, x: T) -> Result<T> {
    check_x(n, x)?;
    if n == 0 {
        return Ok(-(-x).ln_1p());
    }
    let p = pn_polynomial(n)?.eval(&x);
    if x == T::one() {
        return Ok(p);
    }
    let nf = T::from_rational(&BigRational::from_integer(factorial(n)));
    let sign = if n % 2 == 1 { T::one() } else { -T::one() };
    Ok(p + sign * (T::one() - x).powi(n as i32) * (-x).ln_1p() / nf)
}

/// Direct series `∑_{p≥1} x^{p+n}/(p(p+1)…(p+n))`.
pub fn f_antiderivative_series<T: Real>(n: usize, x: T) -> Result<T> {
    check_x(n, x)?;
    if !(x.abs() < T::one()) {
        return Err(domain("the direct series for f_n needs |x| < 1"));
    }
    Ok(x.powi(n as i32) * reduced_series(n, x))
}

/// `f_n(x)`, the `n`-fold antiderivative of `−ln(1−x)` vanishing to order
/// `n+1` at zero. Uses the direct series for `|x| < 1/2`.
pub fn f_antiderivative<T: Real>(n: usize, x: T) -> Result<T> {
    check_x(n, x)?;
    if x.abs() < T::lit(0.5) {
        f_antiderivative_series(n, x)
    } else {
        f_antiderivative_closed(n, x)
    }
}

/// `n!·f_n(x)/x^n`.
fn normalized_antiderivative<T: Real>(n: usize, x: T) -> T {
    if n <= 8 && x.abs() >= T::lit(0.5) {
        let f = f_antiderivative_closed(n, x).expect("checked domain");
        let nf = T::from_rational(&BigRational::from_integer(factorial(n)));
        return f * nf / x.powi(n as i32);
    }
    // ∑ x^p/(p·C(n+p, p))
    let mut r = x / T::from_usize_(n + 1);
    let mut s = T::zero();
    let mut p = 1usize;
    while r != T::zero() && r.abs() > T::epsilon() * s.abs() * T::lit(0.25) {
        s = s + r;
        r = r * x * T::from_usize_(p) / T::from_usize_(p + n + 1);
        p += 1;
    }
    s
}

/// `Li_{k+1}(x) = ∑_n ⎡n k⎤·f_n(x)/x^n`.
///
/// # Example
/// ```
/// use invfac::representations::polylog_via_stirling;
/// use invfac::series_engine::EvalOptions;
/// let r = polylog_via_stirling(1, 0.5f64, &EvalOptions::default()).unwrap();
/// assert!((r.value - 0.5822405264650125).abs() < 1e-10);
/// ```
pub fn polylog_via_stirling<T: Real>(
    k: usize,
    x: T,
    opts: &EvalOptions<T>,
) -> Result<EvalResult<T>> {
    if !(x.abs() < T::one()) || x.is_zero() {
        return Err(domain(format!("polylog needs 0 < |x| < 1, got {x}")));
    }
    if !(opts.tol > T::zero()) {
        return Err(domain("tolerance must be positive"));
    }
    let mut es = ElementarySymmetric::<T>::new(k.max(1) - 1);
    let terms = (0..).map(move |n: usize| {
        if n == 0 {
            return if k == 0 { -(-x).ln_1p() } else { T::zero() };
        }
        if n > 1 {
            es.advance();
        }
        if k == 0 {
            return T::zero();
        }
        // ⎡n k⎤/n! = e_{k−1}/n
        es.get(k - 1) * normalized_antiderivative(n, x) / T::from_usize_(n)
    });
    Ok(eval_series(terms, opts))
}

/// Exact rational part `(2^n/n!)·∑_{k=1}^{n} 1/(2^k·k)` of the alternating
/// sum `∑_{p≥1} (−1)^p/(p(p+1)…(p+n))`.
pub fn alt_sum_rational_part(n: usize) -> BigRational {
    let mut s = BigRational::zero();
    for k in 1..=n {
        s += BigRational::new(
            BigInt::one(),
            BigInt::from(2u8).pow(k as u32) * BigInt::from(k),
        );
    }
    s * BigRational::new(BigInt::from(2u8).pow(n as u32), factorial(n))
}

/// `(2^n/n!)·(∑_{k=1}^{n} 1/(2^k·k) − ln 2)`.
pub fn alt_sum_closed_form(n: usize) -> f64 {
    let scale = crate::scalar::rational_to_f64(&BigRational::new(
        BigInt::from(2u8).pow(n as u32),
        factorial(n),
    ));
    // s − ln 2 = −∑_{k>n} 1/(2^k k), which avoids cancellation
    let mut tail = 0.0;
    let mut k = n + 1;
    loop {
        let t = 1.0 / (2f64.powi(k as i32) * k as f64);
        tail += t;
        if t < 1e-18 * tail {
            break;
        }
        k += 1;
    }
    -scale * tail
}
