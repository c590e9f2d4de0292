//! Stirling sequence transform and series conversions.
//!
//! A power-type expansion `∑ a_k z^{−(k+1)}` and a factorial expansion
//! `∑ b_n / (z(z+1)…(z+n))` are related by `b_n = ∑_k ⎡n k⎤ a_k`, inverted by
//! `a_n = ∑_k (−1)^{n−k} S(n,k) b_k`. Everything is exact.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_core::{stirling1_row, stirling2_row};

/// Finite exact sequence indexed from zero; never empty.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalSequence(Vec<BigRational>);

impl RationalSequence {
    pub fn new(entries: Vec<BigRational>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(RationalSequence(entries))
    }

    /// Builds `f(0), …, f(len−1)`.
    pub fn from_fn(len: usize, f: impl FnMut(usize) -> BigRational) -> Self {
        assert!(len > 0, "sequence length must be positive");
        RationalSequence((0..len).map(f).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigRational> {
        self.0
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        self.0.get(n)
    }

    /// Parses the sequence text format: one rational per line, blank lines
    /// and `#` comment lines ignored.
    pub fn parse_text(text: &str) -> Result<Self> {
        let mut out = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let r = parse_rational(line).map_err(|msg| Error::Parse { line: i + 1, msg })?;
            out.push(r);
        }
        if out.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(RationalSequence(out))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for r in &self.0 {
            s.push_str(&r.to_string());
            s.push('\n');
        }
        s
    }
}

impl std::ops::Index<usize> for RationalSequence {
    type Output = BigRational;
    fn index(&self, n: usize) -> &BigRational {
        &self.0[n]
    }
}

impl fmt::Display for RationalSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for RationalSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

/// Parses `p/q`, an integer, or a finite decimal such as `-2.75` or `1e-3`.
pub fn parse_rational(s: &str) -> std::result::Result<BigRational, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p
            .trim()
            .parse()
            .map_err(|_| format!("bad numerator in `{s}`"))?;
        let q: BigInt = q
            .trim()
            .parse()
            .map_err(|_| format!("bad denominator in `{s}`"))?;
        if q.is_zero() {
            return Err(format!("zero denominator in `{s}`"));
        }
        return Ok(BigRational::new(p, q));
    }
    if let Ok(i) = s.parse::<BigInt>() {
        return Ok(BigRational::from_integer(i));
    }
    parse_decimal(s).ok_or_else(|| format!("not a rational: `{s}`"))
}

fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mant) = match mant.strip_prefix('-') {
        Some(m) => (true, m),
        None => (false, mant.strip_prefix('+').unwrap_or(mant)),
    };
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: BigInt = format!("0{int}{frac}").parse().ok()?;
    let scale = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(digits);
    if scale >= 0 {
        r *= BigRational::from_integer(num_traits::pow(ten, scale as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow(ten, (-scale) as usize));
    }
    Some(if neg { -r } else { r })
}

/// `b_n = ∑_{k≤n} ⎡n k⎤ a_k`.
///
/// # Example
/// ```
/// use invfac::transforms::{stirling_transform, RationalSequence};
/// let ones: RationalSequence = "1\n1\n1\n1".parse().unwrap();
/// assert_eq!(stirling_transform(&ones).to_string(), "[1, 1, 2, 6]");
/// ```
pub fn stirling_transform(a: &RationalSequence) -> RationalSequence {
    RationalSequence::from_fn(a.len(), |n| {
        let row = stirling1_row(n);
        row.iter()
            .zip(a.entries())
            .filter(|(s, _)| !s.is_zero())
            .fold(BigRational::zero(), |acc, (s, ak)| {
                acc + BigRational::from_integer(s.clone()) * ak
            })
    })
}

/// `a_n = ∑_{k≤n} (−1)^{n−k} S(n,k) b_k`.
pub fn inverse_stirling_transform(b: &RationalSequence) -> RationalSequence {
    RationalSequence::from_fn(b.len(), |n| {
        let row = stirling2_row(n);
        row.iter()
            .zip(b.entries())
            .enumerate()
            .filter(|(_, (s, _))| !s.is_zero())
            .fold(BigRational::zero(), |acc, (k, (s, bk))| {
                let term = BigRational::from_integer(s.clone()) * bk;
                if (n - k) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
    })
}

/// Power coefficients of `∑ a_k z^{−(k+1)}` to factorial coefficients.
pub fn factorial_series_from_power(a: &RationalSequence) -> RationalSequence {
    stirling_transform(a)
}

/// Factorial coefficients to the coefficients of the formal expansion
/// `∑ a_k z^{−(k+1)}`.
pub fn asymptotic_from_factorial(b: &RationalSequence) -> RationalSequence {
    inverse_stirling_transform(b)
}

/// Transform by the signed numbers `s(n,k)`.
pub fn signed_stirling_transform(a: &RationalSequence) -> RationalSequence {
    RationalSequence::from_fn(a.len(), |n| {
        let row = stirling1_row(n);
        row.iter()
            .zip(a.entries())
            .enumerate()
            .fold(BigRational::zero(), |acc, (k, (s, ak))| {
                let term = BigRational::from_integer(s.clone()) * ak;
                if (n - k) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
    })
}

/// `(−1)^n x_n` elementwise.
pub fn alternate(x: &RationalSequence) -> RationalSequence {
    RationalSequence::from_fn(x.len(), |n| {
        if n % 2 == 0 {
            x[n].clone()
        } else {
            -x[n].clone()
        }
    })
}
