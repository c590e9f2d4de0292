//! Floating-point summation of inverse factorial series and asymptotic
//! power series.
//!
//! Terms are produced from exact or scaled coefficients and divided by the
//! running product `z(z+1)…(z+n)` one factor at a time. Summation is
//! ascending and compensated, so results are bit-reproducible.

mod asymptotic;
mod driver;
mod factorial;
mod scaled;
mod sum;
pub(crate) mod tail;

pub use asymptotic::{eval_asymptotic, AsymptoticSeries};
pub use driver::eval_series;
pub use factorial::{
    eval_factorial_series, factorial_terms, partial_sum, partial_sum_exact, raabe_diagnostic,
    FactorialSeries, FnSeries,
};
pub use scaled::Scaled;
pub use sum::CompensatedSum;
pub use tail::TailFit;

use crate::scalar::Real;

/// How a power-law tail is treated once the stopping rule has fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TailMode {
    /// Add the fitted tail to the partial sum; keep summing until two
    /// successive extrapolations agree to tolerance.
    #[default]
    Extrapolate,
    /// Report the bare partial sum with the integral-comparison estimate.
    Raw,
}

/// Tail behaviour observed at the last summed term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailKind {
    Terminated,
    Geometric,
    Alternating,
    PowerLaw,
    Unclassified,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalOptions<T> {
    pub tol: T,
    pub max_terms: usize,
    pub tail: TailMode,
}

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_TERMS: usize = 200_000;

impl<T: Real> Default for EvalOptions<T> {
    fn default() -> Self {
        let floor = T::epsilon() * T::lit(100.0);
        EvalOptions {
            tol: T::lit(DEFAULT_TOL).max(floor),
            max_terms: DEFAULT_MAX_TERMS,
            tail: TailMode::Extrapolate,
        }
    }
}

impl<T: Real> EvalOptions<T> {
    pub fn new(tol: T, max_terms: usize) -> Self {
        EvalOptions {
            tol,
            max_terms,
            tail: TailMode::Extrapolate,
        }
    }

    pub fn raw(mut self) -> Self {
        self.tail = TailMode::Raw;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult<T> {
    pub value: T,
    pub terms_used: usize,
    pub error_estimate: T,
    pub converged: bool,
    pub tail: TailKind,
}

impl<T: Real> EvalResult<T> {
    /// Within `10·error_estimate` of `reference`.
    pub fn agrees_with(&self, reference: T) -> bool {
        (self.value - reference).abs() <= T::lit(10.0) * self.error_estimate
    }

    pub fn map_value(self, f: impl FnOnce(T) -> T) -> Self {
        EvalResult {
            value: f(self.value),
            ..self
        }
    }
}
