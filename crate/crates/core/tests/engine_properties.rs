use invfac::representations::Representation;
use invfac::scalar::rational_to_f64;
use invfac::series_engine::{eval_asymptotic, partial_sum, partial_sum_exact, EvalOptions};
use invfac::Rational;
use num_rational::BigRational;
use proptest::prelude::*;

fn entries() -> Vec<Representation> {
    vec![
        Representation::Reciprocal,
        Representation::ReciprocalSq,
        Representation::RationalP { p: 1 },
        Representation::PochhammerRatio {
            w: Rational::new(1.into(), 2.into()),
        },
        Representation::K2Series,
        Representation::TrigammaFac,
        Representation::NielsenBetaFac,
        Representation::IncGamma {
            x: Rational::from_integer(1.into()),
        },
        Representation::LogShiftMinus,
        Representation::LogShiftPlus,
        Representation::StirlingKernel { k: 2 },
    ]
}

fn entry() -> impl Strategy<Value = Representation> {
    (0..entries().len()).prop_map(|i| entries().swap_remove(i))
}

fn interior(rep: &Representation, t: f64) -> f64 {
    rep.domain_lower_bound().unwrap_or(0.0) + 0.5 + 12.0 * t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn closed_form_within_ten_estimates(rep in entry(), t in 0.0f64..1.0) {
        let z = interior(&rep, t);
        let r = rep.evaluate(Some(z), &EvalOptions::default()).unwrap();
        let c = rep.closed_form(Some(z)).unwrap();
        prop_assert!(r.agrees_with(c), "{rep} z={z}: {r:?} vs {c}");
    }

    #[test]
    fn tighter_tolerance_never_stops_sooner(rep in entry(), t in 0.0f64..1.0, e2 in 5i32..9, d in 1i32..3) {
        let z = interior(&rep, t);
        let t2 = 10f64.powi(-e2);
        let t1 = t2 * 10f64.powi(-d);
        let r1 = rep.evaluate(Some(z), &EvalOptions::new(t1, 50_000)).unwrap();
        let r2 = rep.evaluate(Some(z), &EvalOptions::new(t2, 50_000)).unwrap();
        prop_assert!(r1.terms_used >= r2.terms_used, "{rep} z={z}: {} < {}", r1.terms_used, r2.terms_used);
        if r2.converged {
            prop_assert!((r1.value - r2.value).abs() <= 2.0 * t2 * r2.value.abs().max(1.0));
        }
    }

    #[test]
    fn evaluation_is_bit_reproducible(rep in entry(), t in 0.0f64..1.0) {
        let z = interior(&rep, t);
        let o = EvalOptions::new(1e-9, 20_000);
        let a = rep.evaluate(Some(z), &o).unwrap();
        let b = rep.evaluate(Some(z), &o).unwrap();
        prop_assert_eq!(a.value.to_bits(), b.value.to_bits());
        prop_assert_eq!(a.terms_used, b.terms_used);
    }

    #[test]
    fn float_partial_sum_tracks_exact(rep in entry(), num in 3i64..40, n in 0usize..120) {
        let zq = BigRational::new((num + 2 * rep.domain_lower_bound().unwrap_or(0.0).ceil() as i64).into(), 2.into());
        let fs = rep.as_factorial_series().unwrap();
        let exact = rational_to_f64(&partial_sum_exact(&fs, &zq, n).unwrap());
        let float = partial_sum(&fs, rational_to_f64(&zq), n).unwrap();
        let mag = exact.abs().max(f64::MIN_POSITIVE);
        prop_assert!((exact - float).abs() <= 1e3 * f64::EPSILON * mag, "{rep} n={n}: {exact} vs {float}");
    }
}

#[test]
fn trigamma_asymptotic_within_first_omitted_term() {
    let series = invfac::representations::asymptotic_series("trigamma_asym", None, 12).unwrap();
    for z in [5.0f64, 10.0, 20.0] {
        let r = eval_asymptotic(&series, z).unwrap();
        let t = invfac::oracles::trigamma_direct(z).unwrap().value;
        assert!(
            (r.value - t).abs() <= r.error_estimate,
            "z={z}: {r:?} vs {t}"
        );
    }
}
