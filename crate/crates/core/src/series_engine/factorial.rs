use num_rational::BigRational;
use num_traits::{One, Zero};

use super::driver::eval_series;
use super::scaled::Scaled;
use super::sum::CompensatedSum;
use super::{EvalOptions, EvalResult};
use crate::error::{domain, Error, Result};
use crate::scalar::Real;

/// Coefficient stream of `∑ a_n / (z(z+1)…(z+n))`.
pub trait FactorialSeries {
    fn description(&self) -> String;

    /// Exact coefficient `a_n`; must be deterministic.
    fn coeff(&self, n: usize) -> BigRational;

    /// Coefficients in scaled floating form, in order from `n = 0`.
    ///
    /// Implementations with a cheaper float recurrence override this.
    fn scaled_coeffs<'a, T: Real>(&'a self) -> Box<dyn Iterator<Item = Scaled<T>> + 'a> {
        Box::new((0..).map(move |n| Scaled::from_rational(&self.coeff(n))))
    }
}

/// A [`FactorialSeries`] backed by a closure.
pub struct FnSeries<F> {
    description: String,
    f: F,
}

impl<F: Fn(usize) -> BigRational> FnSeries<F> {
    pub fn new(description: impl Into<String>, f: F) -> Self {
        FnSeries {
            description: description.into(),
            f,
        }
    }
}

impl<F: Fn(usize) -> BigRational> FactorialSeries for FnSeries<F> {
    fn description(&self) -> String {
        self.description.clone()
    }

    fn coeff(&self, n: usize) -> BigRational {
        (self.f)(n)
    }
}

fn check_z<T: Real>(z: T) -> Result<()> {
    if !(z > T::zero()) || !z.is_finite() {
        return Err(domain(format!("factorial series needs z > 0, got {z}")));
    }
    Ok(())
}

/// Terms `t_n = a_n / (z(z+1)…(z+n))`, the denominator built one factor at a
/// time.
pub fn factorial_terms<'a, T: Real, S: FactorialSeries + ?Sized>(
    fs: &'a S,
    z: T,
) -> impl Iterator<Item = T> + 'a {
    let mut denom = Scaled::<T>::one();
    fs.scaled_coeffs::<T>().enumerate().map(move |(n, a)| {
        denom = denom * (z + T::from_usize_(n));
        (a / denom).to_real()
    })
}

pub fn eval_factorial_series<T: Real, S: FactorialSeries + ?Sized>(
    fs: &S,
    z: T,
    opts: &EvalOptions<T>,
) -> Result<EvalResult<T>> {
    check_z(z)?;
    if !(opts.tol > T::zero()) {
        return Err(domain("tolerance must be positive"));
    }
    Ok(eval_series(factorial_terms(fs, z), opts))
}

/// Float partial sum `∑_{n=0}^{N} t_n`.
pub fn partial_sum<T: Real, S: FactorialSeries + ?Sized>(fs: &S, z: T, n: usize) -> Result<T> {
    check_z(z)?;
    let acc: CompensatedSum<T> = factorial_terms(fs, z).take(n + 1).collect();
    Ok(acc.value())
}

/// Exact partial sum for rational `z`.
///
/// # Example
/// ```
/// use invfac::series_engine::{partial_sum_exact, FnSeries};
/// use invfac::exact_core::factorial;
/// use num_rational::BigRational;
/// let fs = FnSeries::new("n!", |n| BigRational::from_integer(factorial(n)));
/// let z = BigRational::from_integer(2.into());
/// assert_eq!(partial_sum_exact(&fs, &z, 2).unwrap(), BigRational::new(3.into(), 4.into()));
/// ```
pub fn partial_sum_exact<S: FactorialSeries + ?Sized>(
    fs: &S,
    z: &BigRational,
    n_max: usize,
) -> Result<BigRational> {
    let mut denom = BigRational::one();
    let mut sum = BigRational::zero();
    for n in 0..=n_max {
        let factor = z + BigRational::from_integer(n.into());
        if factor.is_zero() {
            return Err(Error::Pole { shift: n });
        }
        denom *= factor;
        let a = fs.coeff(n);
        if !a.is_zero() {
            sum += a / &denom;
        }
    }
    Ok(sum)
}

/// Estimate of `lim n(t_n/t_{n+1} − 1)` from samples on `n_lo..=n_hi`,
/// Richardson-extrapolated in `1/n`. Returns `+∞` for faster than
/// polynomial decay.
pub fn raabe_diagnostic<T: Real, S: FactorialSeries + ?Sized>(
    fs: &S,
    z: T,
    n_lo: usize,
    n_hi: usize,
) -> Result<T> {
    check_z(z)?;
    if n_lo < 1 || n_hi <= n_lo {
        return Err(Error::InvalidParam(format!(
            "need 1 ≤ n_lo < n_hi, got {n_lo}..{n_hi}"
        )));
    }
    let terms: Vec<T> = factorial_terms(fs, z).take(n_hi + 2).collect();
    if let Some(i) = (n_lo..=n_hi + 1).find(|&i| terms[i].is_zero()) {
        return Err(Error::Degenerate(format!("term {i} is zero")));
    }
    let r = |n: usize| T::from_usize_(n) * (terms[n] / terms[n + 1] - T::one());
    if (terms[n_hi + 1] / terms[n_hi]).abs() < T::lit(0.9) {
        return Ok(T::infinity());
    }
    let nc = n_hi;
    let nb = (n_hi / 2).max(n_lo);
    let na = (n_hi / 4).max(n_lo);
    if nb < nc && r(nc) > T::lit(1.5) * r(nb) + T::one() {
        return Ok(T::infinity());
    }
    let inv = |n: usize| T::from_usize_(n).recip();
    let est = if na < nb && nb < nc {
        // ρ + c₁/n + c₂/n² through three samples
        let (xa, xb, xc) = (inv(na), inv(nb), inv(nc));
        let (ya, yb, yc) = (r(na), r(nb), r(nc));
        let la = xb * xc / ((xa - xb) * (xa - xc));
        let lb = xa * xc / ((xb - xa) * (xb - xc));
        let lc = xa * xb / ((xc - xa) * (xc - xb));
        la * ya + lb * yb + lc * yc
    } else if nb < nc {
        let (fb, fc) = (T::from_usize_(nb), T::from_usize_(nc));
        (fc * r(nc) - fb * r(nb)) / (fc - fb)
    } else {
        r(nc)
    };
    Ok(est)
}
