use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::streams::binet_shifted_stream;
use crate::error::{domain, Result};
use crate::exact_core::stirling1_row;
use crate::scalar::Real;
use crate::series_engine::{
    eval_factorial_series, EvalOptions, EvalResult, FactorialSeries, Scaled,
};

/// Binet coefficient `a_n = (1/n)∫₀¹ (t − 1/2)·t(t+1)…(t+n−1) dt`, with
/// `a_0 = 0`.
///
/// # Example
/// ```
/// use invfac::representations::binet_coefficient;
/// use num_rational::BigRational;
/// assert_eq!(binet_coefficient(2), BigRational::new(1.into(), 12.into()));
/// ```
pub fn binet_coefficient(n: usize) -> BigRational {
    if n == 0 {
        return BigRational::zero();
    }
    let row = stirling1_row(n);
    let mut s = BigRational::zero();
    for (k, c) in row.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let w = BigRational::new(1.into(), BigInt::from(k + 2))
            - BigRational::new(1.into(), BigInt::from(2 * (k + 1)));
        s += BigRational::from_integer(c.clone()) * w;
    }
    s / BigRational::from_integer(n.into())
}

/// `∑_{n≥1} a_n/((z+1)…(z+n))` as a factorial series in `z+1`.
#[derive(Debug, Clone, Copy, Default)]
pub struct BinetSeries;

impl FactorialSeries for BinetSeries {
    fn description(&self) -> String {
        "Binet series".into()
    }

    fn coeff(&self, n: usize) -> BigRational {
        binet_coefficient(n + 1)
    }

    fn scaled_coeffs<'a, T: Real>(&'a self) -> Box<dyn Iterator<Item = Scaled<T>> + 'a> {
        Box::new(binet_shifted_stream::<T>())
    }
}

/// `ln Γ(z) = (z − 1/2)ln z − z + ln√(2π) + ∑_{n≥1} a_n/((z+1)…(z+n))`.
///
/// # Example
/// ```
/// use invfac::representations::binet_log_gamma;
/// use invfac::series_engine::EvalOptions;
/// let r = binet_log_gamma(5.0f64, &EvalOptions::default()).unwrap();
/// assert!((r.value - 24f64.ln()).abs() < 1e-10);
/// ```
pub fn binet_log_gamma<T: Real>(z: T, opts: &EvalOptions<T>) -> Result<EvalResult<T>> {
    if !(z > T::zero()) || !z.is_finite() {
        return Err(domain(format!("log-gamma needs z > 0, got {z}")));
    }
    let half = T::lit(0.5);
    let main = (z - half) * z.ln() - z + half * (T::lit(2.0) * T::PI()).ln();
    Ok(eval_factorial_series(&BinetSeries, z + T::one(), opts)?.map_value(|s| main + s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn coefficients() {
        assert_eq!(binet_coefficient(0), q(0, 1));
        assert_eq!(binet_coefficient(1), q(1, 12));
        assert_eq!(binet_coefficient(2), q(1, 12));
        // (1/3)∫(t−1/2)t(t+1)(t+2) dt = 59/360
        assert_eq!(binet_coefficient(3), q(59, 360));
    }

    #[test]
    fn log_gamma_values() {
        let opts = EvalOptions::new(1e-12, 400);
        for (z, exact) in [
            (1.0, 0.0),
            (5.0, 24f64.ln()),
            (10.0, 362_880f64.ln()),
            (2.5, 0.284_682_870_472_919_2),
        ] {
            let r = binet_log_gamma(z, &opts).unwrap();
            assert!((r.value - exact).abs() < 1e-6, "z={z} {r:?}");
        }
        assert!(binet_log_gamma(0.0f64, &opts).is_err());
    }
}
