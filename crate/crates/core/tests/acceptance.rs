//! One test per acceptance criterion. Each prints a single PASS/FAIL line
//! (written straight to stderr so it shows even when output is captured),
//! followed by the underlying check rows.

use std::io::Write;

use invfac::representations::{f_antiderivative, f_antiderivative_closed, Representation};
use invfac::series_engine::EvalOptions;
use invfac::verify::{groups, VerifyEntry};

fn report(criterion: &str, entries: &[VerifyEntry]) {
    let pass = !entries.is_empty() && entries.iter().all(|e| e.pass);
    let mut err = std::io::stderr().lock();
    let _ = writeln!(err, "{} {criterion}", if pass { "PASS" } else { "FAIL" });
    for e in entries {
        let _ = writeln!(
            err,
            "    {} {} lhs={} rhs={} diff={:e} tol={:e}",
            if e.pass { "ok  " } else { "FAIL" },
            e.name,
            e.lhs,
            e.rhs,
            e.abs_diff,
            e.tolerance
        );
    }
    drop(err);
    let failed: Vec<&str> = entries
        .iter()
        .filter(|e| !e.pass)
        .map(|e| e.name.as_str())
        .collect();
    assert!(pass, "{criterion}: failing checks {failed:?}");
}

fn group(name: &str) -> Vec<VerifyEntry> {
    groups()
        .into_iter()
        .find(|g| g.name == name)
        .unwrap_or_else(|| panic!("no group {name}"))
        .run(1.0)
}

fn extra(name: &str, lhs: f64, rhs: f64, tolerance: f64) -> VerifyEntry {
    let abs_diff = (lhs - rhs).abs();
    VerifyEntry {
        name: name.to_string(),
        lhs,
        rhs,
        abs_diff,
        tolerance,
        relation: invfac::verify::Relation::Within,
        pass: abs_diff <= tolerance,
    }
}

#[test]
fn stirling_tables_exact() {
    report("stirling_tables_exact", &group("stirling_tables"));
}

#[test]
fn zeta_partial_sums_rate() {
    report("zeta_partial_sums_rate", &group("zeta_partial_sums"));
}

#[test]
fn hurwitz_half() {
    report("hurwitz_half", &group("hurwitz"));
}

#[test]
fn alternating_inverse_factorial_sums() {
    report(
        "alternating_inverse_factorial_sums",
        &group("alternating_sum"),
    );
}

#[test]
fn polylog_at_half() {
    report("polylog_at_half", &group("polylog"));
}

#[test]
fn antiderivative_polynomials() {
    let mut entries = group("antiderivative");
    for x in [0.45f64, 0.55] {
        for n in 1..=4usize {
            let h = f_antiderivative(n, x).unwrap();
            let c = f_antiderivative_closed(n, x).unwrap();
            entries.push(extra(
                &format!("antiderivative_hybrid_vs_closed_x{x}_n{n}"),
                h,
                c,
                1e-10,
            ));
        }
    }
    report("antiderivative_polynomials", &entries);
}

#[test]
fn rational_closed_forms() {
    report("rational_closed_forms", &group("rational_closed_forms"));
}

#[test]
fn trigamma_factorial_series() {
    report("trigamma_factorial_series", &group("trigamma_fac"));
}

#[test]
fn nielsen_beta_geometric() {
    let mut entries = group("nielsen_beta_fac");
    for z in [1.0f64, 2.0] {
        let r = Representation::NielsenBetaFac
            .evaluate(Some(z), &EvalOptions::new(1e-14, 60))
            .unwrap();
        entries.push(extra(
            &format!("nielsen_beta_fac_terms_z{z}"),
            r.terms_used as f64,
            0.0,
            60.0,
        ));
    }
    report("nielsen_beta_geometric", &entries);
}

#[test]
fn incomplete_gamma() {
    report("incomplete_gamma", &group("incgamma"));
}

#[test]
fn binet_log_gamma() {
    report("binet_log_gamma", &group("binet"));
}

#[test]
fn log_shift_minus_sign() {
    report("log_shift_minus_sign", &group("log_shift_minus"));
}

#[test]
fn log_shift_plus() {
    report("log_shift_plus", &group("log_shift_plus"));
}

#[test]
fn euler_sum() {
    report("euler_sum", &group("euler_sum"));
}

#[test]
fn asymptotic_optimal_truncation() {
    report("asymptotic_optimal_truncation", &group("asymptotic"));
}

#[test]
fn incomplete_gamma_asymptotic() {
    report("incomplete_gamma_asymptotic", &group("incgamma_asym"));
}

#[test]
fn binomial_identity_partial_sums() {
    report("binomial_identity_partial_sums", &group("binomial"));
}

#[test]
fn transform_round_trip() {
    report("transform_round_trip", &group("transform_round_trip"));
}
