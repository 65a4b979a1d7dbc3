//! Cyclotomic polynomials and the fields `Q(zeta_N)(y)`.
//!
//! Elements are polynomials in `zeta` of degree below `phi(N)` with
//! coefficients in `Q(y)`, always reduced modulo the `N`-th cyclotomic
//! polynomial. Because that basis is a `Q(y)`-basis of the extension, an
//! element lies in `Q(y)` exactly when every coefficient beyond the constant
//! one vanishes.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_integer::Integer;
use num_traits::{One, Zero};

use super::rational::{Int, Rational};
use super::ypoly::YPolynomial;
use super::yrational::YRational;
use crate::error::{Error, Result};

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u64
}

/// Integer coefficients of the `n`-th cyclotomic polynomial, ascending.
///
/// Computed by dividing `x^n - 1` by every `Phi_d` with `d` a proper divisor
/// of `n`; results are cached.
pub fn cyclotomic_polynomial(n: u64) -> Arc<Vec<Int>> {
    assert!(n >= 1, "cyclotomic order must be positive");
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<Vec<Int>>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    let mut coeffs = vec![Rational::zero(); n as usize + 1];
    coeffs[0] = -Rational::one();
    coeffs[n as usize] = Rational::one();
    let mut p = YPolynomial::new(coeffs);
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        let phi_d = cyclotomic_polynomial(d);
        let divisor = YPolynomial::new(
            phi_d
                .iter()
                .map(|c| Rational::from_integer(c.clone()))
                .collect(),
        );
        let (q, r) = p.div_rem(&divisor);
        debug_assert!(r.is_zero());
        p = q;
    }
    let out: Arc<Vec<Int>> = Arc::new(p.coeffs().iter().map(|c| c.to_integer()).collect());
    cache.lock().unwrap().insert(n, out.clone());
    out
}

/// An element of `Q(zeta_N)(y)`.
///
/// Elements that lie in `Q(y)` are stored with order 1 so that they combine
/// with elements of any order.
#[derive(Clone, PartialEq, Eq)]
pub struct CyclotomicScalar {
    order: u64,
    coeffs: Vec<YRational>,
}

impl CyclotomicScalar {
    fn from_raw(order: u64, mut coeffs: Vec<YRational>) -> Self {
        if order > 1 {
            let phi = cyclotomic_polynomial(order);
            let deg = phi.len() - 1;
            for i in (deg..coeffs.len()).rev() {
                let c = std::mem::take(&mut coeffs[i]);
                if c.is_zero() {
                    continue;
                }
                for (j, p) in phi.iter().enumerate().take(deg) {
                    if !p.is_zero() {
                        let t = c.scale(&Rational::from_integer(p.clone()));
                        coeffs[i - deg + j] -= &t;
                    }
                }
            }
        }
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        let order = if coeffs.len() <= 1 { 1 } else { order };
        CyclotomicScalar { order, coeffs }
    }

    pub fn zero() -> Self {
        CyclotomicScalar {
            order: 1,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(YRational::one())
    }

    pub fn constant(c: YRational) -> Self {
        Self::from_raw(1, vec![c])
    }

    /// `zeta_order^k`.
    pub fn zeta_power(order: u64, k: u64) -> Self {
        assert!(order >= 1);
        let k = (k % order) as usize;
        let mut coeffs = vec![YRational::zero(); k + 1];
        coeffs[k] = YRational::one();
        Self::from_raw(order, coeffs)
    }

    /// Builds `sum_i coeffs[i] * zeta^i` and reduces it.
    pub fn from_zeta_coeffs(order: u64, coeffs: Vec<YRational>) -> Self {
        Self::from_raw(order, coeffs)
    }

    /// The cyclotomic order, which is 1 for elements of `Q(y)`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn coeffs(&self) -> &[YRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == YRational::one()
    }

    pub fn is_rational(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The value in `Q(y)`, failing if any irrational part survives.
    pub fn rational_part(&self) -> Result<YRational> {
        match self.coeffs.len() {
            0 => Ok(YRational::zero()),
            1 => Ok(self.coeffs[0].clone()),
            n => Err(Error::NotRational { degree: n - 1 }),
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CyclotomicScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c.scale(r)).collect(),
        }
    }

    pub fn mul_y(&self, r: &YRational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        CyclotomicScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Applies the Galois automorphism `zeta -> zeta^j` (`j` coprime to the order).
    pub fn galois_conjugate(&self, j: u64) -> Self {
        let n = self.order;
        let mut coeffs = vec![YRational::zero(); n as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = ((i as u64 * j) % n) as usize;
            coeffs[e] += c;
        }
        Self::from_raw(n, coeffs)
    }

    /// Multiplicative inverse, or `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if self.is_rational() {
            return Some(Self::constant(self.coeffs[0].inv()?));
        }
        let phi = cyclotomic_polynomial(self.order);
        let phi: Vec<YRational> = phi
            .iter()
            .map(|c| YRational::constant(Rational::from_integer(c.clone())))
            .collect();
        let (mut r0, mut r1) = (phi, self.coeffs.clone());
        let (mut s0, mut s1) = (Vec::<YRational>::new(), vec![YRational::one()]);
        while !r1.is_empty() {
            let (q, r) = poly_div_rem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        debug_assert_eq!(r0.len(), 1, "cyclotomic polynomial is irreducible");
        let k = r0[0].inv()?;
        Some(Self::from_raw(
            self.order,
            s0.iter().map(|c| c * &k).collect(),
        ))
    }

    fn unify(&self, other: &Self) -> u64 {
        match (self.order, other.order) {
            (1, o) | (o, 1) => o,
            (a, b) => {
                assert_eq!(a, b, "mixing cyclotomic scalars of different orders");
                a
            }
        }
    }
}

fn trim(mut v: Vec<YRational>) -> Vec<YRational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[YRational], b: &[YRational]) -> Vec<YRational> {
    let n = a.len().max(b.len());
    let zero = YRational::zero();
    trim(
        (0..n)
            .map(|i| a.get(i).unwrap_or(&zero) - b.get(i).unwrap_or(&zero))
            .collect(),
    )
}

fn poly_mul(a: &[YRational], b: &[YRational]) -> Vec<YRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![YRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

fn poly_div_rem(a: &[YRational], b: &[YRational]) -> (Vec<YRational>, Vec<YRational>) {
    let db = b.len() - 1;
    let lead_inv = b[db].inv().expect("nonzero leading coefficient");
    let mut rem = a.to_vec();
    if rem.len() <= db {
        return (Vec::new(), trim(rem));
    }
    let mut quot = vec![YRational::zero(); rem.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &rem[i + db] * &lead_inv;
        if !c.is_zero() {
            for (j, bc) in b.iter().enumerate() {
                let t = &c * bc;
                rem[i + j] -= &t;
            }
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (trim(quot), trim(rem))
}

impl From<YRational> for CyclotomicScalar {
    fn from(c: YRational) -> Self {
        Self::constant(c)
    }
}

impl From<YPolynomial> for CyclotomicScalar {
    fn from(p: YPolynomial) -> Self {
        Self::constant(YRational::from(p))
    }
}

impl From<Rational> for CyclotomicScalar {
    fn from(r: Rational) -> Self {
        Self::constant(YRational::constant(r))
    }
}

impl<'a> Add<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn add(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        let order = self.unify(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = YRational::zero();
        let coeffs = (0..n)
            .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
            .collect();
        CyclotomicScalar::from_raw(order, coeffs)
    }
}

impl<'a> Sub<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn sub(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a CyclotomicScalar> for &'a CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn mul(self, rhs: &CyclotomicScalar) -> CyclotomicScalar {
        if self.is_zero() || rhs.is_zero() {
            return CyclotomicScalar::zero();
        }
        if self.is_rational() {
            return rhs.mul_y(&self.coeffs[0]);
        }
        if rhs.is_rational() {
            return self.mul_y(&rhs.coeffs[0]);
        }
        let order = self.unify(rhs);
        CyclotomicScalar::from_raw(order, poly_mul(&self.coeffs, &rhs.coeffs))
    }
}

impl Neg for &CyclotomicScalar {
    type Output = CyclotomicScalar;
    fn neg(self) -> CyclotomicScalar {
        CyclotomicScalar {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

super::forward_ops!(CyclotomicScalar);

impl fmt::Debug for CyclotomicScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rational_part().unwrap());
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| format!("({c})*z{}^{i}", self.order))
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rational::{int, rat};
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<Int> {
        v.iter().map(|&c| int(c)).collect()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(*cyclotomic_polynomial(1), ints(&[-1, 1]));
        assert_eq!(*cyclotomic_polynomial(4), ints(&[1, 0, 1]));
        assert_eq!(*cyclotomic_polynomial(6), ints(&[1, -1, 1]));
        assert_eq!(*cyclotomic_polynomial(12), ints(&[1, 0, -1, 0, 1]));
        for n in 1..40 {
            assert_eq!(cyclotomic_polynomial(n).len() as u64 - 1, euler_phi(n));
        }
    }

    #[test]
    fn cube_root_sum_vanishes() {
        let z = CyclotomicScalar::zeta_power(3, 1);
        let s = &(&CyclotomicScalar::one() + &z) + &z.pow(2);
        assert!(s.is_zero());
    }

    #[test]
    fn root_sums_vanish() {
        for n in 2..25u64 {
            let s = (0..n).fold(CyclotomicScalar::zero(), |acc, k| {
                acc + CyclotomicScalar::zeta_power(n, k)
            });
            assert!(s.is_zero(), "order {n}");
            assert!(CyclotomicScalar::zeta_power(n, 1).pow(n as usize).is_one());
        }
    }

    #[test]
    fn irrational_part_detected() {
        let z = CyclotomicScalar::zeta_power(5, 2);
        assert_eq!(z.rational_part(), Err(Error::NotRational { degree: 2 }));
        let trace = (1..5).fold(CyclotomicScalar::zero(), |acc, j| {
            acc + z.galois_conjugate(j)
        });
        assert_eq!(
            trace.rational_part().unwrap(),
            YRational::constant(rat(-1, 1))
        );
    }

    #[test]
    fn inverse_of_one_minus_zeta() {
        for n in 2..13u64 {
            let a = &CyclotomicScalar::one() - &CyclotomicScalar::zeta_power(n, 1);
            let inv = a.inv().unwrap();
            assert!((&a * &inv).is_one());
        }
    }

    #[test]
    fn inverse_with_y() {
        let y = CyclotomicScalar::from(YPolynomial::y());
        let a = &CyclotomicScalar::one() - &(&y * &CyclotomicScalar::zeta_power(7, 3));
        assert!((&a * &a.inv().unwrap()).is_one());
    }

    fn arb(n: u64) -> impl Strategy<Value = CyclotomicScalar> {
        prop::collection::vec((-5i64..5, -5i64..5), 0..(n as usize)).prop_map(move |v| {
            let coeffs = v
                .into_iter()
                .map(|(a, b)| YRational::from(YPolynomial::from_ints(&[a, b])))
                .collect();
            CyclotomicScalar::from_zeta_coeffs(n, coeffs)
        })
    }

    proptest! {
        #[test]
        fn field_axioms_order_9(a in arb(9), b in arb(9), c in arb(9)) {
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        }

        #[test]
        fn rational_inverses_order_12(v in prop::collection::vec(-6i64..6, 1..4)) {
            let coeffs = v.iter().map(|&c| YRational::constant(rat(c, 1))).collect();
            let a = CyclotomicScalar::from_zeta_coeffs(12, coeffs);
            if let Some(inv) = a.inv() {
                prop_assert!((&a * &inv).is_one());
            }
        }

        #[test]
        fn galois_orbit_sums_are_rational(a in arb(8)) {
            let sum = [1u64, 3, 5, 7].iter().fold(CyclotomicScalar::zero(), |acc, &j| acc + a.galois_conjugate(j));
            prop_assert!(sum.is_rational());
        }
    }
}
