//! Exact rational scalars and their canonical text form.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{invalid, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `n!` as a rational.
pub fn factorial(n: usize) -> Rational {
    (1..=n).fold(Rational::one(), |acc, k| acc * int(k as i64))
}

/// Smallest integer `>= value`.
pub fn ceil(value: &Rational) -> BigInt {
    value.ceil().to_integer()
}

/// Canonical text form: `"p"` when integral, else `"p/q"` in lowest terms.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Parses `"p"`, `"-p"` or `"p/q"` with `q > 0`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (text, None),
    };
    let numer = BigInt::from_str(num)
        .or_else(|_| invalid(format!("malformed rational {text:?}")))?;
    let denom = match den {
        None => BigInt::one(),
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return invalid(format!("denominator must be a positive integer in {text:?}"));
            }
            BigInt::from_str(d).or_else(|_| invalid(format!("malformed rational {text:?}")))?
        }
    };
    if denom.is_zero() {
        return invalid(format!("zero denominator in {text:?}"));
    }
    Ok(Rational::new(numer, denom))
}

/// Lossy conversion used only by the floating-point oracles and the plotter.
pub fn to_f64(value: &Rational) -> f64 {
    let (n, d) = (value.numer(), value.denom());
    // shift both sides so the quotient survives conversion of huge operands
    let bits = n.bits().max(d.bits());
    if bits < 1000 {
        bigint_to_f64(n) / bigint_to_f64(d)
    } else {
        let shift = bits - 1000;
        bigint_to_f64(&(n >> shift)) / bigint_to_f64(&(d >> shift))
    }
}

fn bigint_to_f64(value: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(value).unwrap_or(if value.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

/// Scales a rational vector to the primitive integer vector on the same ray
/// (coprime coordinates, same signs).
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if gcd.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &gcd).collect()
}

/// A rational extended by `-inf`, the value range of a homogeneous weight
/// on the closed negative orthant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extended {
    NegInfinity,
    Finite(Rational),
}

impl Extended {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Extended::Finite(r) => Some(r),
            Extended::NegInfinity => None,
        }
    }
}

impl PartialOrd for Extended {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Extended {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Extended::NegInfinity, Extended::NegInfinity) => Ordering::Equal,
            (Extended::NegInfinity, _) => Ordering::Less,
            (_, Extended::NegInfinity) => Ordering::Greater,
            (Extended::Finite(a), Extended::Finite(b)) => a.cmp(b),
        }
    }
}

impl From<Rational> for Extended {
    fn from(value: Rational) -> Self {
        Extended::Finite(value)
    }
}

impl fmt::Display for Extended {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Extended::NegInfinity => write!(f, "-inf"),
            Extended::Finite(r) => write!(f, "{r}"),
        }
    }
}
