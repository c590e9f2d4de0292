//! Floating recurrences for catalog coefficients.
//!
//! Unsigned Stirling numbers enter as `⎡n k⎤ = (n−1)!·e_{k−1}(1, 1/2, …,
//! 1/(n−1))`, with `e_j` the elementary symmetric polynomials. Cauchy and
//! Binet coefficients are moment integrals over `[0, 1]` of running products,
//! taken with a fixed 32-point Gauss–Legendre rule.

use crate::scalar::Real;
use crate::series_engine::tail::gl32_unit;
use crate::series_engine::Scaled;

/// `e_0..=e_K` over `{1, 1/2, …, 1/m}`.
#[derive(Debug, Clone)]
pub(crate) struct ElementarySymmetric<T> {
    e: Vec<T>,
    m: usize,
}

impl<T: Real> ElementarySymmetric<T> {
    pub fn new(max_order: usize) -> Self {
        let mut e = vec![T::zero(); max_order + 1];
        e[0] = T::one();
        ElementarySymmetric { e, m: 0 }
    }

    /// Adds `1/(m+1)` to the set.
    pub fn advance(&mut self) {
        self.m += 1;
        let x = T::from_usize_(self.m).recip();
        for j in (1..self.e.len()).rev() {
            self.e[j] = self.e[j] + self.e[j - 1] * x;
        }
    }

    pub fn get(&self, j: usize) -> T {
        self.e[j]
    }
}

/// `⎡n k⎤` for `n = 0, 1, 2, …`.
pub(crate) fn stirling_column<T: Real>(k: usize) -> impl Iterator<Item = Scaled<T>> {
    let mut fact = Scaled::<T>::one();
    let mut es = ElementarySymmetric::<T>::new(k.max(1) - 1);
    (0..).map(move |n: usize| {
        if n == 0 {
            return if k == 0 {
                Scaled::one()
            } else {
                Scaled::zero()
            };
        }
        if n > 1 {
            es.advance();
            fact = fact * T::from_usize_(n - 1);
        }
        if k == 0 {
            Scaled::zero()
        } else {
            fact * es.get(k - 1)
        }
    })
}

/// `n!` for `n = 0, 1, 2, …`.
pub(crate) fn factorials<T: Real>() -> impl Iterator<Item = Scaled<T>> {
    let mut f = Scaled::<T>::one();
    (0..).map(move |n: usize| {
        if n > 0 {
            f = f * T::from_usize_(n);
        }
        f
    })
}

/// Running products `∏_{j=1}^{m} (1 + s·t_i/j)` at the quadrature nodes.
pub(crate) struct NodeProducts<T> {
    nodes: Vec<(T, T)>,
    prod: Vec<T>,
    sign: T,
    m: usize,
}

impl<T: Real> NodeProducts<T> {
    /// `sign = +1` gives rising, `−1` falling products.
    pub fn new(sign: T) -> Self {
        let nodes: Vec<(T, T)> = gl32_unit()
            .iter()
            .map(|&(x, w)| (T::lit(x), T::lit(w)))
            .collect();
        let prod = vec![T::one(); nodes.len()];
        NodeProducts {
            nodes,
            prod,
            sign,
            m: 0,
        }
    }

    /// `∫₀¹ weight(t)·∏(…) dt` at the current `m`.
    pub fn integrate(&self, weight: impl Fn(T) -> T) -> T {
        self.nodes
            .iter()
            .zip(&self.prod)
            .fold(T::zero(), |acc, (&(t, w), &p)| acc + w * weight(t) * p)
    }

    /// Extends every product by the factor for `m + 1`.
    pub fn advance(&mut self) {
        self.m += 1;
        let inv = T::from_usize_(self.m).recip();
        for (p, &(t, _)) in self.prod.iter_mut().zip(&self.nodes) {
            *p = *p * (T::one() + self.sign * t * inv);
        }
    }
}

/// Cauchy numbers of the second kind `d_n = ∫₀¹ t(t+1)…(t+n−1) dt`.
pub(crate) fn cauchy_second_stream<T: Real>() -> impl Iterator<Item = Scaled<T>> {
    let mut prods = NodeProducts::<T>::new(T::one());
    let mut fact = factorials::<T>();
    (0..).map(move |n: usize| {
        let f = fact.next().expect("infinite");
        if n == 0 {
            return Scaled::one();
        }
        if n > 1 {
            prods.advance();
        }
        let nn = T::from_usize_(n);
        f * prods.integrate(|t| t / nn)
    })
}

/// `(−1)^n c_n` with `c_n = ∫₀¹ t(t−1)…(t−n+1) dt`.
pub(crate) fn alternating_cauchy_first_stream<T: Real>() -> impl Iterator<Item = Scaled<T>> {
    let mut prods = NodeProducts::<T>::new(-T::one());
    let mut fact = factorials::<T>();
    (0..).map(move |n: usize| {
        let f = fact.next().expect("infinite");
        if n == 0 {
            return Scaled::one();
        }
        if n > 1 {
            prods.advance();
        }
        let nn = T::from_usize_(n);
        -(f * prods.integrate(|t| t / nn))
    })
}

/// Binet coefficients shifted by one: item `m` is
/// `a_{m+1} = (1/(m+1)) ∫₀¹ (t − 1/2)·t(t+1)…(t+m) dt`.
pub(crate) fn binet_shifted_stream<T: Real>() -> impl Iterator<Item = Scaled<T>> {
    let mut prods = NodeProducts::<T>::new(T::one());
    let mut fact = factorials::<T>();
    let half = T::lit(0.5);
    (0..).map(move |m: usize| {
        let f = fact.next().expect("infinite");
        if m > 0 {
            prods.advance();
        }
        let inv = T::from_usize_(m + 1).recip();
        f * (prods.integrate(|t| (t - half) * t) * inv)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_core::{cauchy_first, cauchy_second, stirling1_unsigned};
    use crate::representations::binet_coefficient;
    use num_rational::BigRational;

    fn close(a: Scaled<f64>, b: &BigRational, rel: f64) -> bool {
        let exact = Scaled::<f64>::from_rational(b);
        if exact.is_zero() {
            return a.is_zero();
        }
        ((a / exact).to_real() - 1.0).abs() < rel
    }

    #[test]
    fn stirling_columns() {
        for k in 0..5 {
            for (n, v) in stirling_column::<f64>(k).take(120).enumerate() {
                let e = BigRational::from_integer(stirling1_unsigned(n, k));
                assert!(close(v, &e, 1e-12), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn cauchy_streams() {
        for (n, v) in cauchy_second_stream::<f64>().take(150).enumerate() {
            assert!(close(v, &cauchy_second(n), 1e-12), "n={n}");
        }
        for (n, v) in alternating_cauchy_first_stream::<f64>()
            .take(150)
            .enumerate()
        {
            let c = cauchy_first(n);
            let e = if n % 2 == 0 { c } else { -c };
            assert!(close(v, &e, 1e-11), "n={n}");
        }
    }

    #[test]
    fn binet_stream() {
        for (m, v) in binet_shifted_stream::<f64>().take(80).enumerate() {
            assert!(close(v, &binet_coefficient(m + 1), 1e-11), "m={m}");
        }
        let first = binet_shifted_stream::<f64>().next().unwrap().to_real();
        assert!((first - 1.0 / 12.0).abs() < 1e-16);
    }
}
