//! Rational intersection theory on simplicial toric varieties.
//!
//! Homology classes are represented as rational combinations of orbit
//! closures `[V_sigma]`; cohomology classes as polynomials in the ray
//! divisors `x_rho`. Capping is done one divisor at a time: a divisor meeting
//! an orbit closure transversally gives `mult(sigma)/mult(tau) [V_tau]`, and a
//! divisor already containing it is first moved by a character that vanishes
//! on the other rays of the cone.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::fan::{ConeId, Fan, StarFan};
use crate::lattice::{quotient_map, saturation_basis, IntVector};
use crate::linalg;
use crate::scalars::{factorial, CyclotomicScalar, Rational, YRational};
use crate::series::PowerSeries;

/// A monomial in the ray divisors, as a sorted multiset of ray indices.
pub type Monomial = Vec<usize>;

/// A truncated polynomial in the `x_rho` with cyclotomic coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomExpression {
    terms: BTreeMap<Monomial, CyclotomicScalar>,
    truncation: usize,
}

impl CohomExpression {
    pub fn zero(truncation: usize) -> Self {
        CohomExpression {
            terms: BTreeMap::new(),
            truncation,
        }
    }

    pub fn constant(c: CyclotomicScalar, truncation: usize) -> Self {
        Self::monomial(Vec::new(), c, truncation)
    }

    pub fn one(truncation: usize) -> Self {
        Self::constant(CyclotomicScalar::one(), truncation)
    }

    pub fn monomial(mut m: Monomial, c: CyclotomicScalar, truncation: usize) -> Self {
        m.sort_unstable();
        let mut e = Self::zero(truncation);
        if m.len() <= truncation && !c.is_zero() {
            e.terms.insert(m, c);
        }
        e
    }

    /// The product of the `x_rho` over a cone's rays.
    pub fn cone_monomial(rays: &[usize], truncation: usize) -> Self {
        Self::monomial(rays.to_vec(), CyclotomicScalar::one(), truncation)
    }

    /// `sum_k s_k x_rho^k`.
    pub fn from_series(rho: usize, s: &PowerSeries, truncation: usize) -> Self {
        let mut e = Self::zero(truncation);
        for (k, c) in s.coeffs().iter().enumerate().take(truncation + 1) {
            if !c.is_zero() {
                e.terms.insert(vec![rho; k], c.clone());
            }
        }
        e
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &CyclotomicScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &[usize]) -> CyclotomicScalar {
        let mut key = m.to_vec();
        key.sort_unstable();
        self.terms
            .get(&key)
            .cloned()
            .unwrap_or_else(CyclotomicScalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The part of total degree `k`.
    pub fn degree_part(&self, k: usize) -> Self {
        CohomExpression {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.len() == k)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            truncation: self.truncation,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.truncation = self.truncation.min(other.truncation);
        out.terms.retain(|m, _| m.len() <= out.truncation);
        for (m, c) in &other.terms {
            if m.len() > out.truncation {
                continue;
            }
            let entry = out
                .terms
                .entry(m.clone())
                .or_insert_with(CyclotomicScalar::zero);
            *entry += c;
            if entry.is_zero() {
                out.terms.remove(m);
            }
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let t = self.truncation.min(other.truncation);
        let mut terms: BTreeMap<Monomial, CyclotomicScalar> = BTreeMap::new();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if a.len() + b.len() > t {
                    continue;
                }
                let mut m = a.clone();
                m.extend_from_slice(b);
                m.sort_unstable();
                *terms.entry(m).or_insert_with(CyclotomicScalar::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        CohomExpression {
            terms,
            truncation: t,
        }
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.mul_scalar(&CyclotomicScalar::from(r.clone()))
    }

    pub fn mul_scalar(&self, c: &CyclotomicScalar) -> Self {
        let mut terms: BTreeMap<Monomial, CyclotomicScalar> =
            self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect();
        terms.retain(|_, c| !c.is_zero());
        CohomExpression {
            terms,
            truncation: self.truncation,
        }
    }

    /// Substitutes `x_rho -> c x_rho` for every ray.
    pub fn rescale_variables(&self, c: &Rational) -> Self {
        CohomExpression {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.scale(&crate::scalars::rat_pow(c, m.len()))))
                .collect(),
            truncation: self.truncation,
        }
    }

    /// Checks every coefficient is rational, returning them in `Q(y)`.
    pub fn rational_coefficients(&self) -> Result<BTreeMap<Monomial, YRational>> {
        self.terms
            .iter()
            .map(|(m, c)| Ok((m.clone(), c.rational_part()?)))
            .collect()
    }

    /// Evaluates every coefficient at a rational `y`.
    pub fn specialize_y(&self, y: &Rational) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, c) in self.rational_coefficients()? {
            let v = c.eval(y).ok_or_else(|| pole(y))?;
            if !v.is_zero() {
                terms.insert(m, CyclotomicScalar::from(v));
            }
        }
        Ok(CohomExpression {
            terms,
            truncation: self.truncation,
        })
    }
}

fn pole(y: &Rational) -> Error {
    Error::InvalidSpecialization {
        value: crate::scalars::format_rational(y),
        reason: "pole of a coefficient".into(),
    }
}

/// A torus-invariant `Q`-divisor `sum_rho c_rho D_rho`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DivisorClass {
    coeffs: BTreeMap<usize, Rational>,
}

impl DivisorClass {
    pub fn new(coeffs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        DivisorClass {
            coeffs: coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Rational> {
        &self.coeffs
    }

    /// The linear form `sum c_rho x_rho`.
    pub fn to_expression(&self, truncation: usize) -> CohomExpression {
        self.coeffs
            .iter()
            .fold(CohomExpression::zero(truncation), |acc, (&r, c)| {
                acc.add(&CohomExpression::monomial(
                    vec![r],
                    CyclotomicScalar::from(c.clone()),
                    truncation,
                ))
            })
    }
}

/// `ch(O(D)) = exp(D) = sum_{k <= t} D^k / k!`.
pub fn exp_divisor(d: &DivisorClass, truncation: usize) -> CohomExpression {
    let linear = d.to_expression(truncation);
    let mut power = CohomExpression::one(truncation);
    let mut out = CohomExpression::one(truncation);
    for k in 1..=truncation {
        power = power.mul(&linear);
        out = out.add(&power.scale(&(Rational::one() / Rational::from_integer(factorial(k)))));
    }
    out
}

/// A homology class `sum_sigma c_sigma [V_sigma]` with coefficients in `Q(y)`.
///
/// The term for `sigma` lies in homological degree `d - dim(sigma)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CycleClass {
    terms: BTreeMap<ConeId, YRational>,
}

impl CycleClass {
    pub fn zero() -> Self {
        CycleClass {
            terms: BTreeMap::new(),
        }
    }

    /// `[V_sigma]`.
    pub fn orbit(sigma: ConeId) -> Self {
        Self::orbit_with(sigma, YRational::one())
    }

    pub fn orbit_with(sigma: ConeId, c: YRational) -> Self {
        let mut out = Self::zero();
        out.add_term(sigma, &c);
        out
    }

    /// The fundamental class `[X] = [V_0]`.
    pub fn fundamental(fan: &Fan) -> Self {
        Self::orbit(fan.zero_cone())
    }

    pub fn add_term(&mut self, sigma: ConeId, c: &YRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(sigma).or_insert_with(YRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&sigma);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (ConeId, &YRational)> {
        self.terms.iter().map(|(&c, v)| (c, v))
    }

    pub fn coeff(&self, sigma: ConeId) -> YRational {
        self.terms
            .get(&sigma)
            .cloned()
            .unwrap_or_else(YRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&s, c) in &other.terms {
            out.add_term(s, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.mul_y(&YRational::constant(r.clone()))
    }

    pub fn mul_y(&self, c: &YRational) -> Self {
        let mut out = Self::zero();
        for (&s, v) in &self.terms {
            out.add_term(s, &(v * c));
        }
        out
    }

    /// Multiplies the component of homological degree `k` by `f(k)`.
    pub fn map_by_degree(&self, fan: &Fan, f: impl Fn(usize) -> YRational) -> Self {
        let mut out = Self::zero();
        for (&s, v) in &self.terms {
            out.add_term(s, &(v * &f(fan.orbit_dim(s))));
        }
        out
    }

    /// The component of homological degree `k`.
    pub fn component(&self, fan: &Fan, k: usize) -> Self {
        CycleClass {
            terms: self
                .terms
                .iter()
                .filter(|(&s, _)| fan.orbit_dim(s) == k)
                .map(|(&s, v)| (s, v.clone()))
                .collect(),
        }
    }

    /// `c^vee`: the degree-`k` component multiplied by `(-1)^k`.
    pub fn dual(&self, fan: &Fan) -> Self {
        self.map_by_degree(fan, |k| {
            YRational::constant(Rational::from_integer((-1i64).pow(k as u32).into()))
        })
    }

    /// Evaluates every coefficient at a rational `y`.
    pub fn specialize(&self, y: &Rational) -> Result<Self> {
        let mut out = Self::zero();
        for (&s, v) in &self.terms {
            let value = v.eval(y).ok_or_else(|| pole(y))?;
            out.add_term(s, &YRational::constant(value));
        }
        Ok(out)
    }

    /// Divides the degree-`k` component by `(1+y)^k`, failing unless every
    /// coefficient is a polynomial divisible by that power.
    pub fn normalize(&self, fan: &Fan) -> Result<Self> {
        let mut out = Self::zero();
        for (&s, v) in &self.terms {
            let k = fan.orbit_dim(s);
            let p = v.to_polynomial().ok_or(Error::NotDivisible { power: k })?;
            out.add_term(s, &YRational::from(p.exact_divide_by_unit_power(k)?));
        }
        Ok(out)
    }
}

/// Pairs every `(tau, q)` with `q` the coefficient of `[V_tau]` in `x_rho . [V_sigma]`.
fn divisor_times_orbit(fan: &Fan, rho: usize, sigma: ConeId) -> Vec<(ConeId, Rational)> {
    let cone = fan.cone(sigma);
    if !cone.contains_ray(rho) {
        return transverse(fan, rho, sigma).into_iter().collect();
    }
    let m = moving_character(fan, sigma, rho);
    let mut out: BTreeMap<ConeId, Rational> = BTreeMap::new();
    for other in 0..fan.num_rays() {
        if cone.contains_ray(other) {
            continue;
        }
        let pairing: Rational = m
            .iter()
            .zip(fan.rays()[other].to_rational())
            .map(|(a, b)| a * b)
            .sum();
        if pairing.is_zero() {
            continue;
        }
        if let Some((tau, q)) = transverse(fan, other, sigma) {
            *out.entry(tau).or_insert_with(Rational::zero) -= pairing * q;
        }
    }
    out.into_iter().filter(|(_, q)| !q.is_zero()).collect()
}

fn transverse(fan: &Fan, rho: usize, sigma: ConeId) -> Option<(ConeId, Rational)> {
    let tau = fan.join_ray(sigma, rho)?;
    Some((
        tau,
        Rational::new(fan.multiplicity(sigma).into(), fan.multiplicity(tau).into()),
    ))
}

/// A rational character `m` with `<m, u_rho> = 1`, `<m, u_rho'> = 0` for the
/// other rays of `sigma`, and vanishing on a fixed lattice complement of
/// `span(sigma)`.
fn moving_character(fan: &Fan, sigma: ConeId, rho: usize) -> Vec<Rational> {
    let d = fan.rank();
    let cone = fan.cone(sigma);
    let gens: Vec<IntVector> = cone.rays.iter().map(|&r| fan.rays()[r].clone()).collect();
    let complement = quotient_map(&saturation_basis(&gens, d), d)
        .expect("saturated sublattice")
        .section;
    let mut rows = Vec::with_capacity(d);
    let mut rhs = Vec::with_capacity(d);
    for (g, &r) in gens.iter().zip(&cone.rays) {
        rows.push(g.to_rational());
        rhs.push(if r == rho {
            Rational::one()
        } else {
            Rational::zero()
        });
    }
    for s in &complement {
        rows.push(s.to_rational());
        rhs.push(Rational::zero());
    }
    linalg::solve(&rows, &rhs).expect("rays and complement form a basis")
}

/// `x^mono . [V_sigma]` as a combination of orbit closures, memoized on the fan.
pub fn monomial_times_orbit(
    fan: &Fan,
    mono: &[usize],
    sigma: ConeId,
) -> Arc<Vec<(ConeId, Rational)>> {
    if mono.is_empty() {
        return Arc::new(vec![(sigma, Rational::one())]);
    }
    if mono.len() > fan.orbit_dim(sigma) {
        return Arc::new(Vec::new());
    }
    let key = (mono.to_vec(), sigma);
    if let Some(hit) = fan.kernel_cache.lock().unwrap().get(&key) {
        return hit.clone();
    }
    // Peel a transverse divisor first when there is one.
    let cone = fan.cone(sigma);
    let pos = mono
        .iter()
        .position(|r| !cone.contains_ray(*r))
        .unwrap_or(0);
    let mut rest = mono.to_vec();
    let rho = rest.remove(pos);
    let mut acc: BTreeMap<ConeId, Rational> = BTreeMap::new();
    for (tau, q) in divisor_times_orbit(fan, rho, sigma) {
        for (nu, r) in monomial_times_orbit(fan, &rest, tau).iter() {
            *acc.entry(*nu).or_insert_with(Rational::zero) += &q * r;
        }
    }
    let result: Arc<Vec<(ConeId, Rational)>> =
        Arc::new(acc.into_iter().filter(|(_, q)| !q.is_zero()).collect());
    fan.kernel_cache.lock().unwrap().insert(key, result.clone());
    result
}

/// `x_rho . c`.
pub fn divisor_times_cycle(fan: &Fan, rho: usize, c: &CycleClass) -> CycleClass {
    let mut out = CycleClass::zero();
    for (sigma, v) in c.terms() {
        for (tau, q) in divisor_times_orbit(fan, rho, sigma) {
            out.add_term(tau, &v.scale(&q));
        }
    }
    out
}

/// The cap product `e ∩ c`. Every coefficient of `e` must be rational.
pub fn cohom_cap(fan: &Fan, e: &CohomExpression, c: &CycleClass) -> Result<CycleClass> {
    let coeffs = e.rational_coefficients()?;
    let mut acc: BTreeMap<ConeId, YRational> = BTreeMap::new();
    for (sigma, v) in c.terms() {
        let room = fan.orbit_dim(sigma);
        for (mono, a) in &coeffs {
            if mono.len() > room {
                continue;
            }
            let va = v * a;
            for (tau, q) in monomial_times_orbit(fan, mono, sigma).iter() {
                *acc.entry(*tau).or_insert_with(YRational::zero) += va.scale(q);
            }
        }
    }
    let mut out = CycleClass::zero();
    for (tau, v) in acc {
        out.add_term(tau, &v);
    }
    Ok(out)
}

/// The degree of the zero-dimensional component. Requires a complete fan.
pub fn degree(fan: &Fan, c: &CycleClass) -> Result<YRational> {
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    let mut total = YRational::zero();
    for (sigma, v) in c.terms() {
        if fan.orbit_dim(sigma) == 0 {
            total += v;
        }
    }
    Ok(total)
}

/// Where two classes were found to differ: the cone `mu` whose monomial
/// pairs differently with them, and both values.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PairingWitness {
    pub cone: Vec<usize>,
    pub left: YRational,
    pub right: YRational,
}

/// Compares `deg(x^mu ∩ a)` and `deg(x^mu ∩ b)` for every cone `mu`; these
/// monomials span cohomology, so equal pairings mean equal classes.
pub fn pairing_difference(
    fan: &Fan,
    a: &CycleClass,
    b: &CycleClass,
) -> Result<Option<PairingWitness>> {
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    let pair = |c: &CycleClass, mu: ConeId| -> YRational {
        let rays = &fan.cone(mu).rays;
        let mut total = YRational::zero();
        for (sigma, v) in c.terms() {
            if fan.orbit_dim(sigma) != rays.len() {
                continue;
            }
            for (tau, q) in monomial_times_orbit(fan, rays, sigma).iter() {
                if fan.orbit_dim(*tau) == 0 {
                    total += v.scale(q);
                }
            }
        }
        total
    };
    let diff = a.sub(b);
    for mu in fan.cone_ids() {
        if !pair(&diff, mu).is_zero() {
            return Ok(Some(PairingWitness {
                cone: fan.cone(mu).rays.clone(),
                left: pair(a, mu),
                right: pair(b, mu),
            }));
        }
    }
    Ok(None)
}

pub fn pairing_equal(fan: &Fan, a: &CycleClass, b: &CycleClass) -> Result<bool> {
    Ok(pairing_difference(fan, a, b)?.is_none())
}

/// `(k_sigma)_*` from `V_sigma` (described by its star fan) into the ambient variety.
pub fn pushforward_from_star(star: &StarFan, c: &CycleClass) -> CycleClass {
    let mut out = CycleClass::zero();
    for (s, v) in c.terms() {
        out.add_term(star.to_ambient[s], v);
    }
    out
}
