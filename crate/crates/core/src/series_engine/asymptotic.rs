use num_traits::Zero;

use super::{EvalResult, TailKind};
use crate::error::{domain, Result};
use crate::scalar::Real;
use crate::transforms::RationalSequence;

/// Formal series `∑ c_k z^{−(k+1)}`.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticSeries {
    pub coeffs: RationalSequence,
    pub description: String,
    /// The listed coefficients are the whole series, not a truncation.
    pub complete: bool,
}

impl AsymptoticSeries {
    pub fn new(coeffs: RationalSequence, description: impl Into<String>) -> Self {
        AsymptoticSeries {
            coeffs,
            description: description.into(),
            complete: false,
        }
    }

    /// A finite expansion; evaluation sums every coefficient.
    pub fn complete(coeffs: RationalSequence, description: impl Into<String>) -> Self {
        AsymptoticSeries {
            complete: true,
            ..Self::new(coeffs, description)
        }
    }
}

/// Optimal truncation: sums the terms before the smallest nonzero term `k*`
/// and reports `|t_{k*}|` as the error estimate.
///
/// # Example
/// ```
/// use invfac::series_engine::{eval_asymptotic, AsymptoticSeries};
/// let one = AsymptoticSeries::complete("1".parse().unwrap(), "1/z");
/// let r = eval_asymptotic(&one, 4.0f64).unwrap();
/// assert_eq!(r.value, 0.25);
/// assert!(r.converged);
/// ```
pub fn eval_asymptotic<T: Real>(series: &AsymptoticSeries, z: T) -> Result<EvalResult<T>> {
    if !(z > T::zero()) || !z.is_finite() {
        return Err(domain(format!("asymptotic series needs z > 0, got {z}")));
    }
    let inv = z.recip();
    let mut power = T::one();
    let terms: Vec<T> = series
        .coeffs
        .entries()
        .iter()
        .map(|c| {
            power = power * inv;
            if c.is_zero() {
                T::zero()
            } else {
                T::from_rational(c) * power
            }
        })
        .collect();
    let sum_upto = |k: usize| {
        let mut s = T::zero();
        let mut mag = T::zero();
        for t in &terms[..k] {
            s = s + *t;
            mag = mag + t.abs();
        }
        (s, mag)
    };
    let floor = |k: usize, mag: T| T::lit(2.0) * T::from_usize_(k + 1) * T::epsilon() * mag;

    if series.complete {
        let (s, _) = sum_upto(terms.len());
        return Ok(EvalResult {
            value: s,
            terms_used: terms.len(),
            error_estimate: T::zero(),
            converged: true,
            tail: TailKind::Terminated,
        });
    }
    let k_star = terms
        .iter()
        .enumerate()
        .filter(|(_, t)| !t.is_zero())
        .min_by(|a, b| a.1.abs().partial_cmp(&b.1.abs()).expect("finite terms"))
        .map(|(k, _)| k);
    let Some(k_star) = k_star else {
        return Ok(EvalResult {
            value: T::zero(),
            terms_used: terms.len(),
            error_estimate: T::zero(),
            converged: true,
            tail: TailKind::Terminated,
        });
    };
    let (s, mag) = sum_upto(k_star);
    let interior = terms[k_star + 1..].iter().any(|t| !t.is_zero());
    Ok(EvalResult {
        value: s,
        terms_used: k_star.max(1),
        error_estimate: terms[k_star].abs() + floor(k_star, mag),
        converged: interior,
        tail: TailKind::Alternating,
    })
}
