use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact rational scalar. `BigRational` keeps every value in lowest terms
/// with a positive denominator.
pub type Rational = BigRational;

/// Column vector of rationals.
pub type Vector = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {literal:?}: {reason}")]
pub struct ParseRationalError {
    pub literal: String,
    pub reason: &'static str,
}

fn digits(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

/// Parses `-?digits(/digits)?` with a nonzero denominator.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = |reason| ParseRationalError {
        literal: text.to_string(),
        reason,
    };
    let body = text.strip_prefix('-').unwrap_or(text);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    if !digits(num) {
        return Err(err("numerator must be decimal digits"));
    }
    let mut numer: BigInt = num.parse().map_err(|_| err("numerator out of range"))?;
    if text.starts_with('-') {
        numer = -numer;
    }
    let denom: BigInt = match den {
        Some(d) => {
            if !digits(d) {
                return Err(err("denominator must be decimal digits"));
            }
            d.parse().map_err(|_| err("denominator out of range"))?
        }
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(err("denominator must be positive"));
    }
    Ok(Rational::new(numer, denom))
}

/// Canonical text form shared by files and CLI output: `-3/2`, `7`, `0`.
pub fn format_rational(q: &Rational) -> String {
    q.to_string()
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Display adapter for a vector, e.g. `(1, -1/2, 0)`.
pub struct DisplayVector<'a>(pub &'a [Rational]);

impl fmt::Display for DisplayVector<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, q) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{q}")?;
        }
        write!(f, ")")
    }
}

pub fn is_zero_vector(v: &[Rational]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn zero_vector(n: usize) -> Vector {
    vec![Rational::zero(); n]
}

pub fn unit_vector(n: usize, i: usize) -> Vector {
    let mut v = zero_vector(n);
    v[i] = Rational::one();
    v
}
