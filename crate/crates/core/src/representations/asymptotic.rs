use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_core::{bernoulli, euler_poly_at_zero, exponential_poly};
use crate::series_engine::AsymptoticSeries;
use crate::transforms::RationalSequence;

/// Keys accepted by [`asymptotic_series`].
pub const ASYMPTOTIC_KEYS: [&str; 3] = ["beta_asym", "trigamma_asym", "incgamma_asym"];

/// Coefficient count used by [`asymptotic_catalog`].
pub const DEFAULT_ASYMPTOTIC_LEN: usize = 12;

fn alternate(k: usize, v: BigRational) -> BigRational {
    if k % 2 == 0 {
        v
    } else {
        -v
    }
}

/// Asymptotic series `∑ c_k z^{−(k+1)}` by key:
///
/// * `beta_asym`: `c_k = (−1)^k E_k(0)/2`, for Nielsen's `β(z)`;
/// * `trigamma_asym`: `c_k = (−1)^k B_k`, for `ψ′(z)`;
/// * `incgamma_asym`: `c_k = (−1)^k φ_k(−x)`, for `γ(z,x)·x^{−z}e^x`.
pub fn asymptotic_series(
    key: &str,
    x: Option<&BigRational>,
    len: usize,
) -> Result<AsymptoticSeries> {
    let coeffs = |f: &dyn Fn(usize) -> BigRational| RationalSequence::from_fn(len.max(1), f);
    Ok(match key {
        "beta_asym" => AsymptoticSeries::new(
            coeffs(&|k| {
                alternate(
                    k,
                    euler_poly_at_zero(k) / BigRational::from_integer(2.into()),
                )
            }),
            "beta_asym",
        ),
        "trigamma_asym" => {
            AsymptoticSeries::new(coeffs(&|k| alternate(k, bernoulli(k))), "trigamma_asym")
        }
        "incgamma_asym" => {
            let x = x.ok_or_else(|| Error::InvalidParam("incgamma_asym needs x".into()))?;
            let mx = -x.clone();
            AsymptoticSeries::new(
                coeffs(&|k| alternate(k, exponential_poly(k, &mx))),
                format!("incgamma_asym(x={x})"),
            )
        }
        _ => {
            return Err(Error::UnknownKey {
                key: key.to_string(),
                valid: ASYMPTOTIC_KEYS.iter().map(|s| s.to_string()).collect(),
            })
        }
    })
}

/// The three asymptotic series with 12 coefficients, `x = 1`.
pub fn asymptotic_catalog() -> Vec<AsymptoticSeries> {
    let one = BigRational::one();
    ASYMPTOTIC_KEYS
        .iter()
        .map(|k| asymptotic_series(k, Some(&one), DEFAULT_ASYMPTOTIC_LEN).expect("known key"))
        .collect()
}
