//! Exact combinatorial numbers and polynomial families.
//!
//! Everything here is computed over big integers and rationals; results are
//! always reduced.

mod numbers;
mod polys;
mod stirling;

pub use numbers::{
    bernoulli, binomial, cauchy_first, cauchy_second, euler_poly_at_zero, factorial, harmonic,
};
pub use polys::{exponential_poly, geometric_poly, rising_factorial_coeffs};
pub use stirling::{
    stirling1_column, stirling1_row, stirling1_signed, stirling1_unsigned, stirling2,
    stirling2_row, StirlingKind, StirlingTriangle,
};
