//! Polynomials in `y` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::{format_rational, parse_rational, Rational};
use crate::error::{Error, Result};

/// A polynomial in `y` over the rationals, stored densely in ascending powers
/// with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct YPolynomial {
    coeffs: Vec<Rational>,
}

impl YPolynomial {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        YPolynomial { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        YPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `y`.
    pub fn y() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `(1 + y)^k`.
    pub fn one_plus_y_pow(k: usize) -> Self {
        Self::from_ints(&[1, 1]).pow(k)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        YPolynomial {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn eval(&self, y: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * y + c)
    }

    /// Scales so that the leading coefficient is one. Zero stays zero.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        self.scale(&(Rational::one() / self.leading_coeff()))
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dd = divisor.coeffs.len() - 1;
        let lead_inv = Rational::one() / divisor.leading_coeff();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Divides by `(1+y)^k`, failing if the division is not exact.
    pub fn exact_divide_by_unit_power(&self, k: usize) -> Result<Self> {
        let (q, r) = self.div_rem(&Self::one_plus_y_pow(k));
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NotDivisible { power: k })
        }
    }

    /// Substitutes `y -> c*y`.
    pub fn rescale_variable(&self, c: &Rational) -> Self {
        let mut f = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &f);
            f *= c;
        }
        Self::new(out)
    }
}

impl From<Rational> for YPolynomial {
    fn from(r: Rational) -> Self {
        Self::constant(r)
    }
}

impl Zero for YPolynomial {
    fn zero() -> Self {
        YPolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for YPolynomial {
    fn one() -> Self {
        YPolynomial::one()
    }
}

impl<'a> Add<&'a YPolynomial> for &'a YPolynomial {
    type Output = YPolynomial;
    fn add(self, rhs: &YPolynomial) -> YPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPolynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a YPolynomial> for &'a YPolynomial {
    type Output = YPolynomial;
    fn sub(self, rhs: &YPolynomial) -> YPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        YPolynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a YPolynomial> for &'a YPolynomial {
    type Output = YPolynomial;
    fn mul(self, rhs: &YPolynomial) -> YPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return YPolynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        YPolynomial::new(out)
    }
}

impl Neg for &YPolynomial {
    type Output = YPolynomial;
    fn neg(self) -> YPolynomial {
        YPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

super::forward_ops!(YPolynomial);

impl fmt::Display for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = match (first, c.is_negative()) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mag = c.abs();
            let var = match k {
                0 => String::new(),
                1 => "y".to_string(),
                _ => format!("y^{k}"),
            };
            let body = if k == 0 {
                format_rational(&mag)
            } else if mag.is_one() {
                var
            } else {
                format!("{}*{}", format_rational(&mag), var)
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for YPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YPolynomial({self})")
    }
}

impl FromStr for YPolynomial {
    type Err = Error;

    /// Accepts the canonical form written by `Display`, and also tolerates
    /// missing `*`, arbitrary whitespace and terms in any order.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut out = YPolynomial::zero();
        for term in terms {
            let (neg, body) = match term.as_bytes().first() {
                Some(b'-') => (true, &term[1..]),
                Some(b'+') => (false, &term[1..]),
                _ => (false, term),
            };
            let (coef, power) = match body.find('y') {
                None => (parse_rational(body)?, 0usize),
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let coef = if c.is_empty() {
                        Rational::one()
                    } else {
                        parse_rational(c)?
                    };
                    let rest = &body[pos + 1..];
                    let power = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .and_then(|p| p.parse::<usize>().ok())
                            .ok_or_else(|| Error::Parse(format!("bad term {term:?}")))?
                    };
                    (coef, power)
                }
            };
            let coef = if neg { -coef } else { coef };
            let mut v = vec![Rational::zero(); power + 1];
            v[power] = coef;
            out += YPolynomial::new(v);
        }
        Ok(out)
    }
}

impl Serialize for YPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for YPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
