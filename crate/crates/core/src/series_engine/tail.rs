//! Power-law tail model `|t_n| ≈ C n^{−ρ} (ln n)^β e^{δ/ln n + γ/n}` fitted
//! through five samples and integrated from `N + 1/2` to infinity.

use std::sync::OnceLock;

use crate::scalar::Real;

/// Gauss–Legendre nodes and weights on `[−1, 1]`.
pub(crate) fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

pub(crate) fn gl20() -> &'static [(f64, f64)] {
    static N: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    N.get_or_init(|| gauss_legendre(20))
}

/// 32 nodes mapped to `[0, 1]`.
pub(crate) fn gl32_unit() -> &'static [(f64, f64)] {
    static N: OnceLock<Vec<(f64, f64)>> = OnceLock::new();
    N.get_or_init(|| {
        gauss_legendre(32)
            .into_iter()
            .map(|(x, w)| (0.5 * (x + 1.0), 0.5 * w))
            .collect()
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TailFit<T> {
    pub ln_c: T,
    pub rho: T,
    pub beta: T,
    /// Coefficient of the `1/ln n` correction in `ln t`.
    pub delta: T,
    /// Coefficient of the `1/n` correction in `ln t`.
    pub gamma: T,
}

impl<T: Real> TailFit<T> {
    /// Solves `ln t = ln C − ρ ln n + β ln ln n + δ/ln n + γ/n` through five
    /// samples.
    pub fn through(pts: [(usize, T); 5]) -> Option<Self> {
        let mut m = [[T::zero(); 6]; 5];
        for (row, &(n, t)) in m.iter_mut().zip(&pts) {
            if n < 3 || t.is_zero() || !t.is_finite() {
                return None;
            }
            let nf = T::from_usize_(n);
            let ln_n = nf.ln();
            *row = [
                T::one(),
                -ln_n,
                ln_n.ln(),
                ln_n.recip(),
                nf.recip(),
                t.abs().ln(),
            ];
        }
        let x = solve(m)?;
        let fit = TailFit {
            ln_c: x[0],
            rho: x[1],
            beta: x[2],
            delta: x[3],
            gamma: x[4],
        };
        x.iter().all(|v| v.is_finite()).then_some(fit)
    }

    /// `∑_{n>N} t_n` under the model, approximated by the integral from
    /// `N+1/2`. `None` unless `ρ > 1`.
    pub fn tail_after(&self, n: usize) -> Option<T> {
        let lambda = self.rho - T::one();
        if lambda <= T::lit(1e-3) || self.beta.abs() > T::lit(20.0) {
            return None;
        }
        let x0 = T::from_usize_(n) + T::lit(0.5);
        let u = x0.ln();
        let a = lambda * u;
        let j = shape_integral(a, self.beta, lambda, self.delta * lambda, self.gamma / x0);
        let v = (self.ln_c - a + self.beta * u.ln()).exp() / lambda * j;
        v.is_finite().then_some(v)
    }
}

fn solve<T: Real, const N: usize, const M: usize>(mut m: [[T; M]; N]) -> Option<[T; N]> {
    for col in 0..N {
        let piv = (col..N).max_by(|&a, &b| {
            m[a][col]
                .abs()
                .partial_cmp(&m[b][col].abs())
                .unwrap_or(std::cmp::Ordering::Equal)
        })?;
        if m[piv][col].is_zero() || !m[piv][col].is_finite() {
            return None;
        }
        m.swap(col, piv);
        for r in col + 1..N {
            let f = m[r][col] / m[col][col];
            for c in col..M {
                m[r][c] = m[r][c] - f * m[col][c];
            }
        }
    }
    let mut x = [T::zero(); N];
    for r in (0..N).rev() {
        let mut acc = m[r][N];
        for c in r + 1..N {
            acc = acc - m[r][c] * x[c];
        }
        x[r] = acc / m[r][r];
    }
    Some(x)
}

/// `∫_0^∞ e^{−v} (1 + v/a)^β exp(d/(a+v) + g·e^{−v/λ}) dv` on doubling
/// panels.
fn shape_integral<T: Real>(a: T, beta: T, lambda: T, d: T, g: T) -> T {
    if beta.is_zero() && g.is_zero() && d.is_zero() {
        return T::one();
    }
    let nodes = gl20();
    let half = T::lit(0.5);
    let mut lo = T::zero();
    let mut width = (a * half).min(lambda).min(T::one());
    let mut total = T::zero();
    while lo < T::lit(90.0) {
        let hi = lo + width;
        let mid = (lo + hi) * half;
        let h = (hi - lo) * half;
        for &(x, w) in nodes {
            let v = mid + h * T::lit(x);
            let f = (-v).exp()
                * (T::one() + v / a).powf(beta)
                * (d / (a + v) + g * (-v / lambda).exp()).exp();
            total = total + T::lit(w) * h * f;
        }
        lo = hi;
        width = width + width;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_rules_are_exact_for_polynomials() {
        for n in [5, 20, 32] {
            let nodes = gauss_legendre(n);
            let w: f64 = nodes.iter().map(|p| p.1).sum();
            assert!((w - 2.0).abs() < 1e-14);
            let x8: f64 = nodes.iter().map(|&(x, w)| w * x.powi(8)).sum();
            assert!((x8 - 2.0 / 9.0).abs() < 1e-14);
        }
        let unit: f64 = gl32_unit().iter().map(|&(x, w)| w * x.powi(30)).sum();
        assert!((unit - 1.0 / 31.0).abs() < 1e-15);
    }

    fn pts(f: impl Fn(usize) -> f64) -> [(usize, f64); 5] {
        [125, 250, 500, 1000, 2000].map(|n| (n, f(n)))
    }

    #[test]
    fn recovers_exact_power_law() {
        let f = |n: usize| {
            let x = n as f64;
            3.0 * x.powf(-2.5) * x.ln().powf(1.5) * (0.4 / x.ln() + 0.7 / x).exp()
        };
        let fit = TailFit::through(pts(f)).unwrap();
        assert!((fit.rho - 2.5).abs() < 1e-6, "{fit:?}");
        assert!((fit.beta - 1.5).abs() < 1e-4);
        assert!((fit.delta - 0.4).abs() < 1e-3);
        assert!((fit.gamma - 0.7).abs() < 1e-4);
        assert!((fit.ln_c - 3f64.ln()).abs() < 1e-4);
    }

    #[test]
    fn tail_of_inverse_squares() {
        // shifted index: t_n = 1/(n+1)², tail after 10⁴ is ψ′(10⁴ + 2)
        let f = |n: usize| 1.0 / ((n + 1) as f64).powi(2);
        let p = [625, 1250, 2500, 5000, 10_000].map(|n| (n, f(n)));
        let tail = TailFit::through(p).unwrap().tail_after(10_000).unwrap();
        let x = 10_002.0f64;
        let exact = 1.0 / x + 0.5 / (x * x) + 1.0 / (6.0 * x.powi(3));
        assert!((tail - exact).abs() < 1e-10, "{tail} {exact}");
    }

    #[test]
    fn shape_integral_closed_cases() {
        // β = 1: 1 + 1/a
        let v: f64 = shape_integral(2.0, 1.0, 1.0, 0.0, 0.0);
        assert!((v - 1.5).abs() < 1e-14);
        // β = 2: 1 + 2/a + 2/a²
        let v: f64 = shape_integral(0.5, 2.0, 3.0, 0.0, 0.0);
        assert!((v - (1.0 + 4.0 + 8.0)).abs() < 1e-12);
    }

    #[test]
    fn rejects_divergent_fits() {
        let f = |n: usize| 1.0 / n as f64;
        assert!(TailFit::through(pts(f)).unwrap().tail_after(1000).is_none());
        assert!(
            TailFit::through([(125, 1.0), (250, 0.0), (500, 1.0), (1000, 1.0), (2000, 1.0)])
                .is_none()
        );
    }
}
