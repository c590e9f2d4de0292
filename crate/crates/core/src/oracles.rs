//! Brute-force reference values.
//!
//! Nothing here calls into the series engine or the representations; each
//! oracle is a direct summation or quadrature with a simple tail correction,
//! sized so the omitted part is far below the tolerances it certifies.

use crate::error::{domain, Result};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub value: f64,
    pub terms_or_nodes: usize,
    pub method: &'static str,
    /// Second, independently computed value where the oracle has one.
    pub cross_check: Option<f64>,
}

impl OracleResult {
    fn new(value: f64, terms_or_nodes: usize, method: &'static str) -> Self {
        OracleResult {
            value,
            terms_or_nodes,
            method,
            cross_check: None,
        }
    }
}

/// Kahan–Babuška sum, kept local so the oracles share no code with the
/// engine.
#[derive(Default)]
struct Acc {
    s: f64,
    c: f64,
}

impl Acc {
    fn add(&mut self, x: f64) {
        let t = self.s + x;
        self.c += if self.s.abs() >= x.abs() {
            (self.s - t) + x
        } else {
            (x - t) + self.s
        };
        self.s = t;
    }

    fn get(&self) -> f64 {
        self.s + self.c
    }
}

/// `ζ(s)` for integer `s ≥ 2`: `10⁵` terms plus Euler–Maclaurin tail.
///
/// # Example
/// ```
/// let z2 = invfac::oracles::zeta_direct(2).unwrap().value;
/// assert!((z2 - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-12);
/// ```
pub fn zeta_direct(s: u32) -> Result<OracleResult> {
    if s < 2 {
        return Err(domain(format!("zeta oracle needs s ≥ 2, got {s}")));
    }
    let n = 100_000usize;
    let sf = s as f64;
    let mut acc = Acc::default();
    for j in (1..n).rev() {
        acc.add((j as f64).powi(-(s as i32)));
    }
    let nf = n as f64;
    acc.add(nf.powf(1.0 - sf) / (sf - 1.0));
    acc.add(0.5 * nf.powf(-sf));
    acc.add(sf * nf.powf(-sf - 1.0) / 12.0);
    Ok(OracleResult::new(
        acc.get(),
        n,
        "direct sum + Euler-Maclaurin tail",
    ))
}

/// `ζ(s, a) = ∑_{n≥0} (n+a)^{−s}` for `s ≥ 2`, `a > 0`.
pub fn hurwitz_direct(s: u32, a: f64) -> Result<OracleResult> {
    if s < 2 || !(a > 0.0) {
        return Err(domain(format!(
            "Hurwitz oracle needs s ≥ 2, a > 0 (s={s}, a={a})"
        )));
    }
    let n = 100_000usize;
    let sf = s as f64;
    let mut acc = Acc::default();
    for j in (0..n).rev() {
        acc.add((j as f64 + a).powi(-(s as i32)));
    }
    let w = n as f64 + a;
    acc.add(w.powf(1.0 - sf) / (sf - 1.0));
    acc.add(0.5 * w.powf(-sf));
    acc.add(sf * w.powf(-sf - 1.0) / 12.0);
    Ok(OracleResult::new(
        acc.get(),
        n,
        "direct sum + Euler-Maclaurin tail",
    ))
}

/// `Li_s(x) = ∑ x^n/n^s` summed until the term is below `10^{−16}` of the
/// partial sum.
pub fn polylog_direct(s: u32, x: f64) -> Result<OracleResult> {
    if !(x.abs() < 1.0) {
        return Err(domain(format!("polylog oracle needs |x| < 1, got {x}")));
    }
    let mut acc = Acc::default();
    let mut p = 1.0;
    let mut n = 0usize;
    loop {
        n += 1;
        p *= x;
        let t = p / (n as f64).powi(s as i32);
        acc.add(t);
        if t.abs() < 1e-16 * acc.get().abs() || t == 0.0 {
            break;
        }
    }
    Ok(OracleResult::new(acc.get(), n, "direct power series"))
}

/// Nielsen's `β(z) = ∑ (−1)^n/(n+z)`, summed in pairs.
pub fn beta_direct(z: f64) -> Result<OracleResult> {
    if !(z > 0.0) {
        return Err(domain(format!("beta oracle needs z > 0, got {z}")));
    }
    let m = 1_000_000usize;
    let mut acc = Acc::default();
    for j in (0..m).rev() {
        let w = 2.0 * j as f64 + z;
        acc.add(1.0 / (w * (w + 1.0)));
    }
    // the remainder is β(2M + z) ~ 1/(2w) + 1/(4w²)
    let w = 2.0 * m as f64 + z;
    acc.add(0.5 / w + 0.25 / (w * w));
    Ok(OracleResult::new(acc.get(), m, "paired alternating sum"))
}

/// `ψ′(z) = ∑ (z+n)^{−2}`.
pub fn trigamma_direct(z: f64) -> Result<OracleResult> {
    if !(z > 0.0) {
        return Err(domain(format!("trigamma oracle needs z > 0, got {z}")));
    }
    let n = 1_000_000usize;
    let mut acc = Acc::default();
    for j in (0..n).rev() {
        let w = z + j as f64;
        acc.add(1.0 / (w * w));
    }
    let w = z + n as f64;
    acc.add(1.0 / w + 0.5 / (w * w) + 1.0 / (6.0 * w * w * w));
    Ok(OracleResult::new(
        acc.get(),
        n,
        "direct sum + Euler-Maclaurin tail",
    ))
}

/// Lower incomplete gamma `γ(z, x)` by adaptive Simpson quadrature, with the
/// power series as cross-check.
pub fn gamma_lower_direct(z: f64, x: f64) -> Result<OracleResult> {
    if !(z > 0.0) || !(x > 0.0) {
        return Err(domain(format!(
            "incomplete gamma oracle needs z, x > 0 (z={z}, x={x})"
        )));
    }
    let mut nodes = 0usize;
    let q = if z < 1.0 {
        // u = t^z removes the endpoint singularity
        let f = |u: f64| (-u.powf(1.0 / z)).exp() / z;
        simpson(&f, 0.0, x.powf(z), 1e-13, &mut nodes)
    } else {
        let f = |t: f64| {
            if t == 0.0 {
                if z == 1.0 {
                    1.0
                } else {
                    0.0
                }
            } else {
                t.powf(z - 1.0) * (-t).exp()
            }
        };
        simpson(&f, 0.0, x, 1e-13, &mut nodes)
    };
    let mut res = OracleResult::new(q, nodes, "adaptive Simpson quadrature");
    res.cross_check = Some(gamma_lower_series(z, x));
    Ok(res)
}

fn gamma_lower_series(z: f64, x: f64) -> f64 {
    let mut acc = Acc::default();
    let mut t = 1.0 / z;
    let mut n = 0;
    while n < 10_000 {
        acc.add(t);
        n += 1;
        t *= x / (z + n as f64);
        if t < 1e-17 * acc.get() {
            break;
        }
    }
    acc.get() * x.powf(z) * (-x).exp()
}

fn simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64, nodes: &mut usize) -> f64 {
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(m), f(b));
    *nodes += 3;
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_step(f, a, b, fa, fm, fb, whole, tol, 60, nodes)
}

#[allow(clippy::too_many_arguments)]
fn simpson_step(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
    nodes: &mut usize,
) -> f64 {
    let m = 0.5 * (a + b);
    let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
    let (flm, frm) = (f(lm), f(rm));
    *nodes += 2;
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol {
        return left + right + delta / 15.0;
    }
    simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, nodes)
        + simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, nodes)
}

/// `∑_{p≥1} H_p / p^{k+1}`: `10⁶` terms plus the integral tail.
pub fn euler_sum_direct(k: u32) -> Result<OracleResult> {
    if k < 1 {
        return Err(domain("Euler sum oracle needs k ≥ 1"));
    }
    let n = 1_000_000usize;
    let e = -(k as i32 + 1);
    let mut acc = Acc::default();
    let mut h = Acc::default();
    for p in 1..=n {
        h.add(1.0 / p as f64);
        acc.add(h.get() * (p as f64).powi(e));
    }
    let nf = n as f64;
    let kf = k as f64;
    let nk = nf.powi(-(k as i32));
    let ln = nf.ln() + EULER_GAMMA;
    let tail =
        ln * nk / kf + nk / (kf * kf) + nk / (2.0 * (kf + 1.0) * nf) - h.get() * nk / (2.0 * nf);
    acc.add(tail);
    Ok(OracleResult::new(
        acc.get(),
        n,
        "direct sum + integral tail",
    ))
}

/// `∑_{p≥1} (−1)^p / (p(p+1)…(p+n))`, paired, with an Euler-transform
/// remainder.
pub fn alt_inverse_factorial_direct(n: u32) -> Result<OracleResult> {
    let pairs = 100_000usize;
    let u = |p: usize| {
        let mut d = 1.0;
        for j in 0..=n as usize {
            d *= (p + j) as f64;
        }
        1.0 / d
    };
    let mut acc = Acc::default();
    for m in (0..pairs).rev() {
        acc.add(u(2 * m + 2) - u(2 * m + 1));
    }
    // remainder −∑_j (−1)^j v_j with v_j = u(2P+1+j)
    let v: Vec<f64> = (0..5).map(|j| u(2 * pairs + 1 + j)).collect();
    let mut diffs = v.clone();
    let mut rem = 0.0;
    for i in 0..4 {
        rem += if i % 2 == 0 { diffs[0] } else { -diffs[0] } / 2f64.powi(i + 1);
        diffs = diffs.windows(2).map(|w| w[1] - w[0]).collect();
    }
    acc.add(-rem);
    Ok(OracleResult::new(
        acc.get(),
        2 * pairs,
        "paired alternating sum",
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn zeta_values() {
        assert!((zeta_direct(2).unwrap().value - PI * PI / 6.0).abs() < 1e-11);
        assert!((zeta_direct(4).unwrap().value - PI.powi(4) / 90.0).abs() < 1e-11);
        assert!((zeta_direct(3).unwrap().value - 1.202_056_903_159_594_3).abs() < 1e-12);
        assert!(zeta_direct(1).is_err());
    }

    #[test]
    fn hurwitz_values() {
        let v = hurwitz_direct(2, 0.5).unwrap().value;
        assert!((v - PI * PI / 2.0).abs() < 1e-11);
        let v = hurwitz_direct(3, 1.0).unwrap().value;
        assert!((v - zeta_direct(3).unwrap().value).abs() < 1e-12);
    }

    #[test]
    fn polylog_values() {
        assert!((polylog_direct(1, 0.5).unwrap().value - 2f64.ln()).abs() < 1e-15);
        let li2 = PI * PI / 12.0 - 2f64.ln().powi(2) / 2.0;
        assert!((polylog_direct(2, 0.5).unwrap().value - li2).abs() < 1e-15);
        assert!((polylog_direct(2, -0.5).unwrap().value + 0.448_414_206_923_646_2).abs() < 1e-12);
        assert!(polylog_direct(2, -1.0).is_err());
    }

    #[test]
    fn beta_values() {
        let b = |z| beta_direct(z).unwrap().value;
        assert!((b(1.0) - 2f64.ln()).abs() < 1e-12);
        assert!((b(0.5) - PI / 2.0).abs() < 1e-12);
        assert!((b(2.0) - (1.0 - 2f64.ln())).abs() < 1e-12);
        for z in [0.5, 1.0, 2.0, 3.7] {
            assert!((b(z) + b(z + 1.0) - 1.0 / z).abs() < 1e-10);
        }
    }

    #[test]
    fn trigamma_values() {
        let t = |z| trigamma_direct(z).unwrap().value;
        assert!((t(1.0) - PI * PI / 6.0).abs() < 1e-12);
        assert!((t(2.0) - (PI * PI / 6.0 - 1.0)).abs() < 1e-12);
        let ten = PI * PI / 6.0 - (1..10).map(|j| 1.0 / (j * j) as f64).sum::<f64>();
        assert!((t(10.0) - ten).abs() < 1e-12);
        assert!((t(10.0) - 0.105_166_335_681_685_3).abs() < 1e-12);
        for z in [0.5, 1.0, 2.0, 3.7] {
            assert!((t(z) - t(z + 1.0) - 1.0 / (z * z)).abs() < 1e-10);
        }
    }

    #[test]
    fn incomplete_gamma_values() {
        let g = |z, x| gamma_lower_direct(z, x).unwrap();
        let e = std::f64::consts::E;
        assert!((g(1.0, 1.0).value - (1.0 - 1.0 / e)).abs() < 1e-12);
        assert!((g(2.0, 1.0).value - (1.0 - 2.0 / e)).abs() < 1e-12);
        assert!((g(3.0, 2.0).value - (2.0 - 10.0 / (e * e))).abs() < 1e-12);
        for z in [1.0, 2.0, 3.0] {
            for x in [0.5, 1.0, 2.0] {
                let r = g(z, x);
                assert!((r.value - r.cross_check.unwrap()).abs() < 1e-9);
            }
        }
        // γ(1/2, x) = √π erf(√x)
        let r = g(0.5, 1.0);
        assert!(
            (r.value - 1.493_648_265_624_854).abs() < 1e-11,
            "{}",
            r.value
        );
    }

    #[test]
    fn euler_sums() {
        let e = |k| euler_sum_direct(k).unwrap().value;
        assert!((e(1) - 2.404_113_806_319_188_6).abs() < 1e-9);
        assert!((e(2) - PI.powi(4) / 72.0).abs() < 1e-10);
        assert!((e(3) - 1.133_478_915_132_813_7).abs() < 1e-10);
    }

    #[test]
    fn alternating_inverse_factorials() {
        let a = |n| alt_inverse_factorial_direct(n).unwrap().value;
        let ln2 = 2f64.ln();
        assert!((a(0) + ln2).abs() < 1e-12);
        assert!((a(1) - (1.0 - 2.0 * ln2)).abs() < 1e-12);
        assert!((a(2) - (1.25 - 2.0 * ln2)).abs() < 1e-12);
    }
}
