use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::euler::euler_sum_lhs;
use super::streams::{
    alternating_cauchy_first_stream, cauchy_second_stream, factorials, stirling_column,
    ElementarySymmetric,
};
use crate::error::{domain, Error, Result};
use crate::exact_core::{
    binomial, cauchy_first, cauchy_second, factorial, harmonic, stirling1_unsigned,
};
use crate::oracles;
use crate::scalar::{rational_to_f64, Real};
use crate::series_engine::{
    eval_factorial_series, eval_series, EvalOptions, EvalResult, FactorialSeries, Scaled,
};

/// A catalog entry: either an inverse factorial series in `z` or a plain
/// numeric series with no free variable.
#[derive(Debug, Clone, PartialEq)]
pub enum Representation {
    /// `⎡n k⎤`, summing to `z^{−(k+1)}`.
    StirlingKernel { k: usize },
    /// `ζ(k+1) = ∑_{n≥1} ⎡n k⎤/(n!·n)`.
    Zeta { k: usize },
    /// `ζ(k+1, a) = ∑_{n≥1} ⎡n k⎤/(n·(a)_n)`.
    Hurwitz { k: usize, a: BigRational },
    /// `n!`, summing to `1/(z−1)`.
    Reciprocal,
    /// `n!·H_n`, summing to `1/(z−1)²`.
    ReciprocalSq,
    /// `(w)_n`, summing to `1/(z−w)`.
    PochhammerRatio { w: BigRational },
    /// `n!·C(n,p)/p!`, summing to `1/((z−1)…(z−p−1))`.
    RationalP { p: usize },
    /// `n!/(n+1)`, summing to `ψ′(z)`.
    TrigammaFac,
    /// `n!/2^{n+1}`, summing to `β(z)`.
    NielsenBetaFac,
    /// `x^n`, summing to `γ(z,x)·x^{−z}·e^x`.
    IncGamma { x: BigRational },
    /// Cauchy numbers of the second kind `d_n`, summing to `−ln(1−1/z)`.
    LogShiftMinus,
    /// `(−1)^n c_n`, summing to `ln(1+1/z)`.
    LogShiftPlus,
    /// `n!·(H_n + H_n² − H_n^{(2)})`, summing to `(z+1)/(z−1)³`.
    K2Series,
    /// `∑_{n≥1} ⎡n k⎤·ψ′(n)/n!`, an Euler sum.
    EulerSumRhs { k: usize },
}

/// Keys accepted by [`Representation::from_key`], in catalog order.
pub const KEYS: [&str; 14] = [
    "stirling_kernel",
    "zeta",
    "hurwitz",
    "reciprocal",
    "reciprocal_sq",
    "pochhammer_ratio",
    "rational_p",
    "trigamma_fac",
    "nielsen_beta_fac",
    "incgamma",
    "log_shift_minus",
    "log_shift_plus",
    "k2_series",
    "euler_sum_rhs",
];

/// Every entry with representative parameters.
pub fn catalog() -> Vec<Representation> {
    use Representation::*;
    let half = BigRational::new(1.into(), 2.into());
    vec![
        StirlingKernel { k: 2 },
        Zeta { k: 1 },
        Hurwitz {
            k: 1,
            a: half.clone(),
        },
        Reciprocal,
        ReciprocalSq,
        PochhammerRatio { w: half },
        RationalP { p: 1 },
        TrigammaFac,
        NielsenBetaFac,
        IncGamma {
            x: BigRational::one(),
        },
        LogShiftMinus,
        LogShiftPlus,
        K2Series,
        EulerSumRhs { k: 1 },
    ]
}

fn int_param(params: &BTreeMap<String, BigRational>, name: &str) -> Result<usize> {
    let v = params
        .get(name)
        .ok_or_else(|| Error::InvalidParam(format!("missing parameter {name}")))?;
    if !v.is_integer() || v.is_negative() {
        return Err(Error::InvalidParam(format!(
            "{name} must be a nonnegative integer, got {v}"
        )));
    }
    v.to_integer()
        .to_usize()
        .ok_or_else(|| Error::InvalidParam(format!("{name} too large")))
}

fn rational_param(params: &BTreeMap<String, BigRational>, name: &str) -> Result<BigRational> {
    params
        .get(name)
        .cloned()
        .ok_or_else(|| Error::InvalidParam(format!("missing parameter {name}")))
}

impl Representation {
    /// Builds an entry from its key and named parameters. A `z` entry is
    /// ignored; any other unknown name is rejected.
    pub fn from_key(key: &str, params: &BTreeMap<String, BigRational>) -> Result<Self> {
        use Representation::*;
        let rep = match key {
            "stirling_kernel" => StirlingKernel {
                k: int_param(params, "k")?,
            },
            "zeta" => Zeta {
                k: int_param(params, "k")?,
            },
            "hurwitz" => Hurwitz {
                k: int_param(params, "k")?,
                a: rational_param(params, "a")?,
            },
            "reciprocal" => Reciprocal,
            "reciprocal_sq" => ReciprocalSq,
            "pochhammer_ratio" => PochhammerRatio {
                w: rational_param(params, "w")?,
            },
            "rational_p" => RationalP {
                p: int_param(params, "p")?,
            },
            "trigamma_fac" => TrigammaFac,
            "nielsen_beta_fac" => NielsenBetaFac,
            "incgamma" => IncGamma {
                x: rational_param(params, "x")?,
            },
            "log_shift_minus" => LogShiftMinus,
            "log_shift_plus" => LogShiftPlus,
            "k2_series" => K2Series,
            "euler_sum_rhs" => EulerSumRhs {
                k: int_param(params, "k")?,
            },
            _ => {
                return Err(Error::UnknownKey {
                    key: key.to_string(),
                    valid: KEYS.iter().map(|s| s.to_string()).collect(),
                })
            }
        };
        let schema = rep.param_names();
        if let Some(extra) = params
            .keys()
            .find(|p| *p != "z" && !schema.contains(&p.as_str()))
        {
            return Err(Error::InvalidParam(format!(
                "{key} takes no parameter {extra}"
            )));
        }
        rep.check_params()?;
        Ok(rep)
    }

    pub fn key(&self) -> &'static str {
        use Representation::*;
        match self {
            StirlingKernel { .. } => "stirling_kernel",
            Zeta { .. } => "zeta",
            Hurwitz { .. } => "hurwitz",
            Reciprocal => "reciprocal",
            ReciprocalSq => "reciprocal_sq",
            PochhammerRatio { .. } => "pochhammer_ratio",
            RationalP { .. } => "rational_p",
            TrigammaFac => "trigamma_fac",
            NielsenBetaFac => "nielsen_beta_fac",
            IncGamma { .. } => "incgamma",
            LogShiftMinus => "log_shift_minus",
            LogShiftPlus => "log_shift_plus",
            K2Series => "k2_series",
            EulerSumRhs { .. } => "euler_sum_rhs",
        }
    }

    pub fn param_names(&self) -> &'static [&'static str] {
        use Representation::*;
        match self {
            StirlingKernel { .. } | Zeta { .. } | EulerSumRhs { .. } => &["k"],
            Hurwitz { .. } => &["k", "a"],
            PochhammerRatio { .. } => &["w"],
            RationalP { .. } => &["p"],
            IncGamma { .. } => &["x"],
            _ => &[],
        }
    }

    /// Parameter values as exact strings.
    pub fn params(&self) -> BTreeMap<String, String> {
        use Representation::*;
        let mut m = BTreeMap::new();
        match self {
            StirlingKernel { k } | Zeta { k } | EulerSumRhs { k } => {
                m.insert("k".into(), k.to_string());
            }
            Hurwitz { k, a } => {
                m.insert("k".into(), k.to_string());
                m.insert("a".into(), a.to_string());
            }
            PochhammerRatio { w } => {
                m.insert("w".into(), w.to_string());
            }
            RationalP { p } => {
                m.insert("p".into(), p.to_string());
            }
            IncGamma { x } => {
                m.insert("x".into(), x.to_string());
            }
            _ => {}
        }
        m
    }

    fn check_params(&self) -> Result<()> {
        use Representation::*;
        match self {
            Zeta { k } | EulerSumRhs { k } if *k == 0 => {
                Err(domain(format!("{} needs k ≥ 1", self.key())))
            }
            Hurwitz { k, a } => {
                if *k == 0 {
                    Err(domain("hurwitz needs k ≥ 1"))
                } else if !a.is_positive() {
                    Err(domain(format!("hurwitz needs a > 0, got {a}")))
                } else {
                    Ok(())
                }
            }
            IncGamma { x } if !x.is_positive() => {
                Err(domain(format!("incgamma needs x > 0, got {x}")))
            }
            _ => Ok(()),
        }
    }

    /// True for entries that are series in `z`.
    pub fn needs_z(&self) -> bool {
        !matches!(
            self,
            Representation::Zeta { .. }
                | Representation::Hurwitz { .. }
                | Representation::EulerSumRhs { .. }
        )
    }

    /// Lower bound `z_min` of the open domain `z > z_min`.
    pub fn domain_lower_bound(&self) -> Option<f64> {
        use Representation::*;
        match self {
            Reciprocal | ReciprocalSq | LogShiftMinus | K2Series => Some(1.0),
            PochhammerRatio { w } => Some(rational_to_f64(w).max(0.0)),
            RationalP { p } => Some(*p as f64 + 1.0),
            StirlingKernel { .. }
            | TrigammaFac
            | NielsenBetaFac
            | IncGamma { .. }
            | LogShiftPlus => Some(0.0),
            Zeta { .. } | Hurwitz { .. } | EulerSumRhs { .. } => None,
        }
    }

    pub fn check_domain(&self, z: Option<f64>) -> Result<()> {
        self.check_params()?;
        let Some(lo) = self.domain_lower_bound() else {
            return Ok(());
        };
        let z = z.ok_or_else(|| Error::InvalidParam(format!("{} needs z", self.key())))?;
        if !(z > lo) || !z.is_finite() {
            return Err(domain(format!(
                "{} is defined for z > {lo}, got z = {z}",
                self.key()
            )));
        }
        Ok(())
    }

    /// Exact coefficient. For factorial entries this is `a_n`; for `zeta`
    /// and `hurwitz` the full term; for `euler_sum_rhs` the factor
    /// `⎡n k⎤/n!` multiplying `ψ′(n)`.
    pub fn coeff(&self, n: usize) -> BigRational {
        use Representation::*;
        let int = |i: BigInt| BigRational::from_integer(i);
        let fact = || int(factorial(n));
        match self {
            StirlingKernel { k } => int(stirling1_unsigned(n, *k)),
            Zeta { k } => {
                if n == 0 {
                    return BigRational::zero();
                }
                int(stirling1_unsigned(n, *k)) / (fact() * int(n.into()))
            }
            Hurwitz { k, a } => {
                if n == 0 {
                    return BigRational::zero();
                }
                let mut poch = BigRational::one();
                for j in 0..n {
                    poch *= a + int(j.into());
                }
                int(stirling1_unsigned(n, *k)) / (poch * int(n.into()))
            }
            Reciprocal => fact(),
            ReciprocalSq => fact() * harmonic(n, 1),
            PochhammerRatio { w } => {
                let mut poch = BigRational::one();
                for j in 0..n {
                    poch *= w + int(j.into());
                }
                poch
            }
            RationalP { p } => {
                if n < *p {
                    return BigRational::zero();
                }
                int(factorial(n) * binomial(n, *p)) / int(factorial(*p))
            }
            TrigammaFac => fact() / int((n + 1).into()),
            NielsenBetaFac => fact() / int(BigInt::from(2u8).pow((n + 1) as u32)),
            IncGamma { x } => num_traits::pow(x.clone(), n),
            LogShiftMinus => cauchy_second(n),
            LogShiftPlus => {
                let c = cauchy_first(n);
                if n % 2 == 0 {
                    c
                } else {
                    -c
                }
            }
            K2Series => {
                let h = harmonic(n, 1);
                fact() * (&h + &h * &h - harmonic(n, 2))
            }
            EulerSumRhs { k } => int(stirling1_unsigned(n, *k)) / fact(),
        }
    }

    /// Coefficients `a_n` as scaled floats, by recurrence.
    fn scaled_stream<'a, T: Real>(&'a self) -> Box<dyn Iterator<Item = Scaled<T>> + 'a> {
        use Representation::*;
        match self {
            StirlingKernel { k } => Box::new(stirling_column::<T>(*k)),
            Reciprocal => Box::new(factorials::<T>()),
            ReciprocalSq => {
                let mut h = T::zero();
                Box::new(factorials::<T>().enumerate().map(move |(n, f)| {
                    if n > 0 {
                        h = h + T::from_usize_(n).recip();
                    }
                    f * h
                }))
            }
            PochhammerRatio { w } => {
                let w = T::from_rational(w);
                let mut a = Scaled::<T>::one();
                Box::new((0..).map(move |n: usize| {
                    if n > 0 {
                        a = a * (w + T::from_usize_(n - 1));
                    }
                    a
                }))
            }
            RationalP { p } => {
                let p = *p;
                let inv_pfact =
                    Scaled::<T>::from_rational(&BigRational::new(BigInt::one(), factorial(p)));
                let mut c = Scaled::<T>::one();
                Box::new(factorials::<T>().enumerate().map(move |(n, f)| {
                    if n < p {
                        return Scaled::zero();
                    }
                    if n > p {
                        c = c * (T::from_usize_(n) / T::from_usize_(n - p));
                    }
                    f * c * inv_pfact
                }))
            }
            TrigammaFac => Box::new(
                factorials::<T>()
                    .enumerate()
                    .map(|(n, f)| f / T::from_usize_(n + 1)),
            ),
            NielsenBetaFac => Box::new(
                factorials::<T>()
                    .enumerate()
                    .map(|(n, f)| f * Scaled::pow2(-(n as i64) - 1)),
            ),
            IncGamma { x } => {
                let x = Scaled::<T>::from_rational(x);
                let mut a = Scaled::<T>::one();
                Box::new((0..).map(move |n: usize| {
                    if n > 0 {
                        a = a * x;
                    }
                    a
                }))
            }
            LogShiftMinus => Box::new(cauchy_second_stream::<T>()),
            LogShiftPlus => Box::new(alternating_cauchy_first_stream::<T>()),
            K2Series => {
                let (mut h, mut h2) = (T::zero(), T::zero());
                Box::new(factorials::<T>().enumerate().map(move |(n, f)| {
                    if n > 0 {
                        let inv = T::from_usize_(n).recip();
                        h = h + inv;
                        h2 = h2 + inv * inv;
                    }
                    f * (h + h * h - h2)
                }))
            }
            Zeta { .. } | Hurwitz { .. } | EulerSumRhs { .. } => {
                Box::new((0..).map(move |n| Scaled::from_rational(&self.coeff(n))))
            }
        }
    }

    /// Terms of the plain numeric series, from `n = 0`.
    fn plain_terms<'a, T: Real>(&'a self) -> Box<dyn Iterator<Item = T> + 'a> {
        use Representation::*;
        let (k, kind) = match self {
            Zeta { k } => (*k, 0),
            Hurwitz { k, .. } => (*k, 1),
            EulerSumRhs { k } => (*k, 2),
            _ => unreachable!("factorial entry"),
        };
        let a = match self {
            Hurwitz { a, .. } => T::from_rational(a),
            _ => T::one(),
        };
        let zeta2 = T::PI() * T::PI() / T::lit(6.0);
        let mut es = ElementarySymmetric::<T>::new(k - 1);
        // (n−1)!/(a)_n
        let mut q = T::one();
        let mut h2 = crate::series_engine::CompensatedSum::<T>::new();
        Box::new((0..).map(move |n: usize| {
            if n == 0 {
                return T::zero();
            }
            let nf = T::from_usize_(n);
            if n > 1 {
                es.advance();
                let prev = T::from_usize_(n - 1);
                h2.add((prev * prev).recip());
            }
            let e = es.get(k - 1);
            match kind {
                0 => e / (nf * nf),
                1 => {
                    q = if n == 1 {
                        a.recip()
                    } else {
                        q * (T::from_usize_(n - 1) / (a + T::from_usize_(n - 1)))
                    };
                    e * q / nf
                }
                _ => e * (zeta2 - h2.value()) / nf,
            }
        }))
    }

    /// The entry as a factorial series, or `None` for plain entries.
    pub fn as_factorial_series(&self) -> Option<CatalogSeries<'_>> {
        self.needs_z().then_some(CatalogSeries(self))
    }

    /// Engine evaluation. `z` is required for series in `z` and ignored
    /// otherwise.
    pub fn evaluate<T: Real>(&self, z: Option<T>, opts: &EvalOptions<T>) -> Result<EvalResult<T>> {
        self.check_domain(z.and_then(|v| v.to_f64()))?;
        if !(opts.tol > T::zero()) {
            return Err(domain("tolerance must be positive"));
        }
        match self.as_factorial_series() {
            Some(fs) => eval_factorial_series(&fs, z.expect("checked"), opts),
            None => Ok(eval_series(self.plain_terms::<T>(), opts)),
        }
    }

    /// Closed form or oracle value.
    pub fn closed_form(&self, z: Option<f64>) -> Result<f64> {
        use Representation::*;
        self.check_domain(z)?;
        let z = z.unwrap_or(f64::NAN);
        Ok(match self {
            StirlingKernel { k } => z.powi(-(*k as i32) - 1),
            Zeta { k } => oracles::zeta_direct(*k as u32 + 1)?.value,
            Hurwitz { k, a } => oracles::hurwitz_direct(*k as u32 + 1, rational_to_f64(a))?.value,
            Reciprocal => 1.0 / (z - 1.0),
            ReciprocalSq => (z - 1.0).powi(-2),
            PochhammerRatio { w } => 1.0 / (z - rational_to_f64(w)),
            RationalP { p } => 1.0 / (1..=p + 1).map(|i| z - i as f64).product::<f64>(),
            TrigammaFac => oracles::trigamma_direct(z)?.value,
            NielsenBetaFac => oracles::beta_direct(z)?.value,
            IncGamma { x } => {
                let x = rational_to_f64(x);
                oracles::gamma_lower_direct(z, x)?.value * x.powf(-z) * x.exp()
            }
            LogShiftMinus => -(-1.0 / z).ln_1p(),
            LogShiftPlus => (1.0 / z).ln_1p(),
            K2Series => (z + 1.0) / (z - 1.0).powi(3),
            EulerSumRhs { k } => euler_sum_lhs(*k)?,
        })
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = self.params();
        if params.is_empty() {
            return f.write_str(self.key());
        }
        let list: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({})", self.key(), list.join(", "))
    }
}

/// A catalog entry viewed as a [`FactorialSeries`].
#[derive(Debug, Clone, Copy)]
pub struct CatalogSeries<'a>(&'a Representation);

impl FactorialSeries for CatalogSeries<'_> {
    fn description(&self) -> String {
        self.0.to_string()
    }

    fn coeff(&self, n: usize) -> BigRational {
        self.0.coeff(n)
    }

    fn scaled_coeffs<'a, T: Real>(&'a self) -> Box<dyn Iterator<Item = Scaled<T>> + 'a> {
        self.0.scaled_stream::<T>()
    }
}

/// `∑ (−1)^n d_n/(z(z+1)…(z+n))`, the sign-alternated twin of
/// [`Representation::LogShiftMinus`].
#[derive(Debug, Clone, Copy, Default)]
pub struct AlternatingLogShift;

impl FactorialSeries for AlternatingLogShift {
    fn description(&self) -> String {
        "alternating log_shift_minus".into()
    }

    fn coeff(&self, n: usize) -> BigRational {
        let d = cauchy_second(n);
        if n % 2 == 0 {
            d
        } else {
            -d
        }
    }

    fn scaled_coeffs<'a, T: Real>(&'a self) -> Box<dyn Iterator<Item = Scaled<T>> + 'a> {
        Box::new(
            cauchy_second_stream::<T>()
                .enumerate()
                .map(|(n, d)| if n % 2 == 0 { d } else { -d }),
        )
    }
}
