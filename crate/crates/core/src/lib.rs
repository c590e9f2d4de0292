//! Inverse factorial series, Stirling-number machinery and the special
//! functions they represent.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_core`]: Stirling triangles, harmonic, Bernoulli, Cauchy numbers
//!   and the geometric/exponential polynomial families, all exact.
//! * [`transforms`]: the Stirling sequence transform and the conversions
//!   between power, factorial and asymptotic coefficient sequences.
//! * [`series_engine`]: floating-point summation of factorial and asymptotic
//!   series with stopping rules, tail estimates and diagnostics.
//! * [`representations`]: the catalog of concrete expansions wired to the
//!   engine, plus polylogarithm, log-gamma and binomial identities.
//! * [`oracles`]: independent brute-force reference values.
//! * [`verify`]: the identity battery shared by the CLI and the tests.
//!
//! Floating-point evaluators are generic over [`Real`] (`f32`, `f64`);
//! polynomial families are generic over [`Scalar`], which also covers
//! [`Rational`].

pub mod error;
pub mod exact_core;
pub mod oracles;
pub mod representations;
pub mod scalar;
pub mod series_engine;
pub mod transforms;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::{Real, Scalar};

/// Exact rational over arbitrary-precision integers.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;

pub type EvalResult64 = series_engine::EvalResult<f64>;
pub type EvalResult32 = series_engine::EvalResult<f32>;
pub type EvalOptions64 = series_engine::EvalOptions<f64>;
pub type Scaled64 = series_engine::Scaled<f64>;
