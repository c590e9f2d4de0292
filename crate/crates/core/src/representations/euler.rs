use crate::error::{domain, Result};
use crate::oracles::zeta_direct;

/// `∑_{p≥1} H_p/p^{k+1} = ((k+3)/2)·ζ(k+2) − (1/2)·∑_{j=1}^{k−1} ζ(j+1)·ζ(k−j+1)`.
///
/// # Example
/// ```
/// let v = invfac::representations::euler_sum_lhs(2).unwrap();
/// assert!((v - std::f64::consts::PI.powi(4) / 72.0).abs() < 1e-12);
/// ```
pub fn euler_sum_lhs(k: usize) -> Result<f64> {
    if k == 0 {
        return Err(domain("Euler sum needs k ≥ 1"));
    }
    let z = |s: usize| zeta_direct(s as u32).map(|r| r.value);
    let mut cross = 0.0;
    for j in 1..k {
        cross += z(j + 1)? * z(k - j + 1)?;
    }
    Ok((k as f64 + 3.0) / 2.0 * z(k + 2)? - 0.5 * cross)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::euler_sum_direct;
    use crate::representations::Representation;
    use crate::series_engine::EvalOptions;

    #[test]
    fn examples() {
        assert!((euler_sum_lhs(1).unwrap() - 2.404_113_806_319_188_5).abs() < 1e-12);
        assert!((euler_sum_lhs(3).unwrap() - 1.133_478_915_132_813_7).abs() < 1e-12);
        assert!(euler_sum_lhs(0).is_err());
    }

    #[test]
    fn matches_oracle_and_series() {
        let opts = EvalOptions::<f64>::default();
        for k in 1..=2 {
            let lhs = euler_sum_lhs(k).unwrap();
            assert!((lhs - euler_sum_direct(k as u32).unwrap().value).abs() < 1e-6);
            let rhs = Representation::EulerSumRhs { k }
                .evaluate(None, &opts)
                .unwrap();
            assert!((lhs - rhs.value).abs() < 1e-6, "k={k} {rhs:?} vs {lhs}");
        }
    }
}
