//! The scalar field: arbitrary-precision rationals with canonical strings.
//!
//! `Ratio<BigInt>` already keeps every value in lowest terms with a positive
//! denominator, which is exactly the representation the rest of the crate
//! relies on. This module adds the canonical string form used by the file
//! formats ("p/q" with q > 1, plain "p" otherwise) and a few small helpers.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rational = num_rational::BigRational;

/// Rational from a machine integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Int::from(n))
}

/// Rational `n/d`; panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Int::from(n), Int::from(d))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParseRationalError {
    Empty,
    InvalidInteger(String),
    ZeroDenominator,
}

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseRationalError::Empty => write!(f, "empty rational literal"),
            ParseRationalError::InvalidInteger(s) => write!(f, "invalid integer `{s}`"),
            ParseRationalError::ZeroDenominator => write!(f, "zero denominator"),
        }
    }
}

/// Parses "p/q" or "n". Whitespace is not accepted; the value is reduced.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let parse_int = |part: &str| -> Result<Int, ParseRationalError> {
        part.parse::<Int>()
            .map_err(|_| ParseRationalError::InvalidInteger(String::from(part)))
    };
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(s)?)),
        Some((num, den)) => {
            let n = parse_int(num)?;
            let d = parse_int(den)?;
            if d.is_zero() {
                return Err(ParseRationalError::ZeroDenominator);
            }
            Ok(Rational::new(n, d))
        }
    }
}

/// Canonical rendering: lowest terms, "p/q" only when the denominator is not 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when the value is an integer.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Least common multiple of the denominators; 1 for an empty iterator.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> Int {
    let mut l = Int::one();
    for v in values {
        l = l.lcm(v.denom());
    }
    l.abs()
}

/// 0-indexed standard basis vector of the given length.
pub fn unit_vector(len: usize, index: usize) -> Vec<Rational> {
    let mut v = vec_zero(len);
    v[index] = Rational::one();
    v
}

/// Zero vector of the given length.
pub fn vec_zero(len: usize) -> Vec<Rational> {
    let mut v = Vec::with_capacity(len);
    v.resize(len, Rational::zero());
    v
}
