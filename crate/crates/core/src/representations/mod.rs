//! Concrete inverse factorial expansions and the identities built on them.
//!
//! [`catalog`] lists the factorial-series and plain-series entries, each with
//! an exact coefficient rule, a strict domain and a closed form or oracle.
//! The rest of the module covers the polylogarithm through repeated
//! antiderivatives of `−ln(1−x)`, Binet's series for `ln Γ`, the binomial
//! identity for `∑ C(m,j)(−1)^j/(j+p)^{k+1}`, and the asymptotic series
//! obtained from the Stirling transform.

mod asymptotic;
mod binet;
mod binomial;
mod catalog;
mod euler;
mod lemma;
mod streams;

pub use asymptotic::{
    asymptotic_catalog, asymptotic_series, ASYMPTOTIC_KEYS, DEFAULT_ASYMPTOTIC_LEN,
};
pub use binet::{binet_coefficient, binet_log_gamma, BinetSeries};
pub use binomial::{binomial_identity, binomial_rhs_series};
pub use catalog::{catalog, AlternatingLogShift, CatalogSeries, Representation, KEYS};
pub use euler::euler_sum_lhs;
pub use lemma::{
    alt_sum_closed_form, alt_sum_rational_part, f_antiderivative, f_antiderivative_closed,
    f_antiderivative_series, pn_polynomial, polylog_via_stirling, PnPolynomial,
};
