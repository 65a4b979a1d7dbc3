//! Truncated univariate power series with cyclotomic coefficients, used to
//! expand the characteristic-class generating functions.

use num_traits::One;

use crate::scalars::{factorial, CyclotomicScalar, Rational};

/// `sum_{k <= t} c_k x^k`, with the truncation order `t` fixed at creation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<CyclotomicScalar>,
}

impl PowerSeries {
    pub fn zero(t: usize) -> Self {
        PowerSeries {
            coeffs: vec![CyclotomicScalar::zero(); t + 1],
        }
    }

    pub fn constant(c: CyclotomicScalar, t: usize) -> Self {
        let mut s = Self::zero(t);
        s.coeffs[0] = c;
        s
    }

    pub fn one(t: usize) -> Self {
        Self::constant(CyclotomicScalar::one(), t)
    }

    pub fn from_coeffs(coeffs: Vec<CyclotomicScalar>) -> Self {
        assert!(!coeffs.is_empty());
        PowerSeries { coeffs }
    }

    /// `exp(c x)`.
    pub fn exp_linear(c: &CyclotomicScalar, t: usize) -> Self {
        let mut coeffs = Vec::with_capacity(t + 1);
        let mut power = CyclotomicScalar::one();
        for k in 0..=t {
            coeffs.push(power.scale(&(Rational::one() / Rational::from_integer(factorial(k)))));
            power = &power * c;
        }
        PowerSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[CyclotomicScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &CyclotomicScalar {
        &self.coeffs[k]
    }

    pub fn add(&self, other: &Self) -> Self {
        let t = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=t)
                .map(|k| &self.coeffs[k] + &other.coeffs[k])
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let t = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=t)
                .map(|k| &self.coeffs[k] - &other.coeffs[k])
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = self.order().min(other.order());
        let mut out = vec![CyclotomicScalar::zero(); t + 1];
        for i in 0..=t {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=t - i {
                out[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        PowerSeries { coeffs: out }
    }

    pub fn scale(&self, c: &CyclotomicScalar) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplicative inverse; the constant term must be invertible.
    pub fn inverse(&self) -> Option<Self> {
        let c0_inv = self.coeffs[0].inv()?;
        let t = self.order();
        let mut out = vec![CyclotomicScalar::zero(); t + 1];
        out[0] = c0_inv.clone();
        for k in 1..=t {
            let mut acc = CyclotomicScalar::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -(&acc * &c0_inv);
        }
        Some(PowerSeries { coeffs: out })
    }

    /// Divides by `x`, dropping the (zero) constant term; the order drops by one.
    pub fn shift_down(&self) -> Self {
        debug_assert!(self.coeffs[0].is_zero());
        PowerSeries {
            coeffs: self.coeffs[1..].to_vec(),
        }
    }

    /// Multiplies by `x`, keeping the order.
    pub fn shift_up(&self) -> Self {
        let mut coeffs = vec![CyclotomicScalar::zero()];
        coeffs.extend_from_slice(&self.coeffs[..self.order()]);
        PowerSeries { coeffs }
    }

    /// Substitutes `x -> c x`.
    pub fn rescale(&self, c: &Rational) -> Self {
        let mut f = Rational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.scale(&f));
            f *= c;
        }
        PowerSeries { coeffs }
    }
}

/// The series `x (p + q a e^{-c x}) / (1 - a e^{-c x})` up to `x^t`.
///
/// For `a = 1` the denominator has no constant term; it is divided by `x`
/// first, which leaves an invertible constant term `c`.
pub fn character_series(
    p: &CyclotomicScalar,
    q: &CyclotomicScalar,
    c: &CyclotomicScalar,
    a: &CyclotomicScalar,
    t: usize,
) -> PowerSeries {
    let e = PowerSeries::exp_linear(&-c, t + 1).scale(a);
    let numerator = PowerSeries::constant(p.clone(), t + 1).add(&e.scale(q));
    let denominator = PowerSeries::one(t + 1).sub(&e);
    if a.is_one() {
        let d = denominator.shift_down();
        let inv = d
            .inverse()
            .expect("leading coefficient of (1 - e^{-cx})/x is invertible");
        let n = PowerSeries::from_coeffs(numerator.coeffs[..=t].to_vec());
        n.mul(&inv)
    } else {
        let inv = denominator
            .inverse()
            .expect("1 - a is invertible for a != 1");
        numerator.mul(&inv).shift_up().truncate(t)
    }
}

impl PowerSeries {
    pub fn truncate(&self, t: usize) -> Self {
        PowerSeries {
            coeffs: self.coeffs[..=t.min(self.order())].to_vec(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, YPolynomial, YRational};

    fn q(r: Rational) -> CyclotomicScalar {
        CyclotomicScalar::from(r)
    }

    #[test]
    fn todd_series_has_bernoulli_coefficients() {
        let one = CyclotomicScalar::one();
        let s = character_series(&one, &CyclotomicScalar::zero(), &one, &one, 4);
        let expected = [rat(1, 1), rat(1, 2), rat(1, 12), rat(0, 1), rat(-1, 720)];
        for (k, e) in expected.iter().enumerate() {
            assert_eq!(s.coeff(k), &q(e.clone()));
        }
    }

    #[test]
    fn normalized_series_closed_form() {
        // x(1 + y e^{-x(1+y)}) / (1 - e^{-x(1+y)}) = td((1+y)x) - y x
        let y = CyclotomicScalar::from(YPolynomial::y());
        let one = CyclotomicScalar::one();
        let c = &one + &y;
        let s = character_series(&one, &y, &c, &one, 5);
        let td = character_series(&one, &CyclotomicScalar::zero(), &one, &one, 5);
        for k in 0..=5 {
            let mut expect = &td.coeffs[k] * &c.pow(k);
            if k == 1 {
                expect -= &y;
            }
            assert_eq!(s.coeff(k), &expect, "degree {k}");
        }
        assert!(s
            .coeffs
            .iter()
            .all(|a| a.rational_part().unwrap().is_polynomial()));
    }

    #[test]
    fn twisted_series_constant_term() {
        let a = CyclotomicScalar::zeta_power(2, 1);
        let one = CyclotomicScalar::one();
        let s = character_series(&one, &CyclotomicScalar::zero(), &one, &a, 3);
        assert!(s.coeff(0).is_zero());
        assert_eq!(s.coeff(1), &q(rat(1, 2)));
        let _ = YRational::one();
    }
}
