//! Rational functions in `y`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::rational::Rational;
use super::ypoly::YPolynomial;
use crate::error::{Error, Result};

/// A reduced quotient `num / den` of polynomials in `y`, with `den` monic.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct YRational {
    num: YPolynomial,
    den: YPolynomial,
}

impl YRational {
    pub fn new(num: YPolynomial, den: YPolynomial) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_constant() {
            let inv = Rational::one() / den.leading_coeff();
            return YRational {
                num: num.scale(&inv),
                den: YPolynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_rem(&g).0, den.div_rem(&g).0)
        };
        let inv = Rational::one() / den.leading_coeff();
        YRational {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }

    pub fn zero() -> Self {
        YRational {
            num: YPolynomial::zero(),
            den: YPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        YRational {
            num: YPolynomial::one(),
            den: YPolynomial::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        YRational {
            num: YPolynomial::constant(c),
            den: YPolynomial::one(),
        }
    }

    pub fn numerator(&self) -> &YPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &YPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// The value as a polynomial, if the denominator is trivial.
    pub fn to_polynomial(&self) -> Option<YPolynomial> {
        self.is_polynomial().then(|| self.num.clone())
    }

    /// The value as a rational constant, if it does not depend on `y`.
    pub fn to_constant(&self) -> Option<Rational> {
        (self.is_polynomial() && self.num.is_constant()).then(|| self.num.coeff(0))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        YRational {
            num: self.num.scale(r),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Option<Self> {
        (!self.is_zero()).then(|| YRational::new(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `(1 + y)^k` for any integer `k`.
    pub fn one_plus_y_pow(k: i64) -> Self {
        let p = YPolynomial::one_plus_y_pow(k.unsigned_abs() as usize);
        if k >= 0 {
            YRational::from(p)
        } else {
            YRational::new(YPolynomial::one(), p)
        }
    }

    /// Evaluates at `y`, or `None` where the denominator vanishes.
    pub fn eval(&self, y: &Rational) -> Option<Rational> {
        let d = self.den.eval(y);
        (!d.is_zero()).then(|| self.num.eval(y) / d)
    }

    /// Substitutes `y -> c*y`.
    pub fn rescale_variable(&self, c: &Rational) -> Self {
        YRational::new(self.num.rescale_variable(c), self.den.rescale_variable(c))
    }
}

impl Default for YRational {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<YPolynomial> for YRational {
    fn from(p: YPolynomial) -> Self {
        YRational {
            num: p,
            den: YPolynomial::one(),
        }
    }
}

impl From<Rational> for YRational {
    fn from(r: Rational) -> Self {
        YRational::constant(r)
    }
}

impl<'a> Add<&'a YRational> for &'a YRational {
    type Output = YRational;
    fn add(self, rhs: &YRational) -> YRational {
        if self.den == rhs.den {
            if self.den.is_constant() {
                return YRational {
                    num: &self.num + &rhs.num,
                    den: YPolynomial::one(),
                };
            }
            return YRational::new(&self.num + &rhs.num, self.den.clone());
        }
        YRational::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a YRational> for &'a YRational {
    type Output = YRational;
    fn sub(self, rhs: &YRational) -> YRational {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a YRational> for &'a YRational {
    type Output = YRational;
    fn mul(self, rhs: &YRational) -> YRational {
        if self.den.is_constant() && rhs.den.is_constant() {
            return YRational {
                num: &self.num * &rhs.num,
                den: YPolynomial::one(),
            };
        }
        YRational::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a YRational> for &'a YRational {
    type Output = YRational;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &YRational) -> YRational {
        self * &rhs.inv().expect("division by zero")
    }
}

impl Neg for &YRational {
    type Output = YRational;
    fn neg(self) -> YRational {
        YRational {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

super::forward_ops!(YRational);

impl fmt::Display for YRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for YRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "YRational({self})")
    }
}

impl FromStr for YRational {
    type Err = Error;

    /// Accepts a polynomial, or `(p)/(q)` with both parts polynomials.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix('(') {
            if let Some((num, den)) = rest.split_once(")/(") {
                let den = den
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unbalanced parentheses in {s:?}")))?;
                let den: YPolynomial = den.parse()?;
                if den.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                return Ok(YRational::new(num.parse()?, den));
            }
        }
        Ok(YRational::from(s.parse::<YPolynomial>()?))
    }
}

impl Serialize for YRational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for YRational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
