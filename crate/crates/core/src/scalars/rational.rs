//! Arbitrary-precision integers and rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Int = BigInt;
pub type Rational = BigRational;

pub fn int(n: i64) -> Int {
    BigInt::from(n)
}

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_from_int(n: Int) -> Rational {
    BigRational::from_integer(n)
}

/// Canonical text form: `a` for integers, `a/b` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `a`, `-a`, `a/b` or `-a/b` (whitespace around the parts is ignored).
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

pub fn factorial(k: usize) -> Int {
    (1..=k).fold(Int::one(), |acc, i| acc * Int::from(i))
}

pub fn binomial(n: usize, k: usize) -> Int {
    if k > n {
        return Int::zero();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

pub fn rat_pow(r: &Rational, k: usize) -> Rational {
    (0..k).fold(Rational::one(), |acc, _| acc * r)
}
