//! Lefschetz-Riemann-Roch classes, mock classes and singular-cone corrections.
//!
//! The sum over the global group of the Cox quotient is organized by cones:
//! every element lies in exactly one `G_sigma°`, and its characters are
//! trivial off `sigma`. So the contribution of `sigma` is the twisted product
//! over its own rays times the untwisted series of every other ray.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::fan::{ConeId, Fan, RootOfUnity};
use crate::intersect::{cohom_cap, CohomExpression, CycleClass};
use crate::scalars::{CyclotomicScalar, Rational, YPolynomial, YRational};
use crate::series::{character_series, PowerSeries};

/// The per-ray series `x (p + q a e^{-cx}) / (1 - a e^{-cx})`, by `(p, q, c)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) enum RaySeries {
    /// `(1, 0, 1)`: Todd class.
    Todd,
    /// `(0, 1, 1)`: Todd class of the canonical sheaf.
    ToddOmega,
    /// `(1, y, 1)`: un-normalized Hirzebruch class.
    Unnormalized,
    /// `(1, y, 1+y)`: normalized Hirzebruch class.
    Normalized,
    /// `(1, 1, 1)`: the half-weight L-type series.
    LType,
}

impl RaySeries {
    fn params(self) -> (CyclotomicScalar, CyclotomicScalar, CyclotomicScalar) {
        let one = CyclotomicScalar::one();
        let zero = CyclotomicScalar::zero();
        let y = CyclotomicScalar::from(YPolynomial::y());
        match self {
            RaySeries::Todd => (one.clone(), zero, one),
            RaySeries::ToddOmega => (zero, one.clone(), one),
            RaySeries::Unnormalized => (one.clone(), y, one),
            RaySeries::Normalized => (one.clone(), y.clone(), &one + &y),
            RaySeries::LType => (one.clone(), one.clone(), one),
        }
    }

    /// The series with character `a`, up to `x^t`.
    pub(crate) fn series(self, a: &CyclotomicScalar, t: usize) -> PowerSeries {
        let (p, q, c) = self.params();
        character_series(&p, &q, &c, a, t)
    }

    /// The series divided by `x`, up to `x^t`.
    pub(crate) fn ratio(self, a: &CyclotomicScalar, t: usize) -> PowerSeries {
        self.series(a, t + 1).shift_down()
    }
}

/// Memo of twisted series keyed by (cone multiplicity, root of unity).
struct SeriesCache {
    kind: RaySeries,
    t: usize,
    divided: bool,
    map: HashMap<(u64, RootOfUnity), PowerSeries>,
}

impl SeriesCache {
    fn new(kind: RaySeries, t: usize, divided: bool) -> Self {
        SeriesCache {
            kind,
            t,
            divided,
            map: HashMap::new(),
        }
    }

    fn get(&mut self, mult: u64, root: RootOfUnity) -> &PowerSeries {
        let (kind, t, divided) = (self.kind, self.t, self.divided);
        self.map.entry((mult, root)).or_insert_with(|| {
            let a = root.to_scalar(mult);
            if divided {
                kind.ratio(&a, t)
            } else {
                kind.series(&a, t)
            }
        })
    }
}

/// Replaces cyclotomic coefficients by their rational values, failing if
/// any coefficient is not Galois invariant.
pub(crate) fn rationalize(e: &CohomExpression) -> Result<CohomExpression> {
    let t = e.truncation();
    let mut out = CohomExpression::zero(t);
    for (m, c) in e.rational_coefficients()? {
        out = out.add(&CohomExpression::monomial(m, CyclotomicScalar::from(c), t));
    }
    Ok(out)
}

/// `sum_{g in G_sigma°} prod_{rho in sigma} f_{a_rho(g)}(x_rho)`, rationalized.
fn twisted_sum(fan: &Fan, sigma: ConeId, cache: &mut SeriesCache) -> Result<CohomExpression> {
    let t = cache.t;
    let cone = fan.cone(sigma);
    let group = fan.group(sigma);
    let mut sum = CohomExpression::zero(t);
    for g in group.interior_elements() {
        let mut prod = CohomExpression::one(t);
        for (j, &rho) in cone.rays.iter().enumerate() {
            let s = cache.get(group.multiplicity, g.characters[j]);
            prod = prod.mul(&CohomExpression::from_series(rho, s, t));
        }
        sum = sum.add(&prod);
    }
    rationalize(&sum)
}

/// `(sum_{g in G_Sigma} prod_rho f_{a_rho(g)}(x_rho)) ∩ [X]` without prefactor.
pub(crate) fn lrr_sum(fan: &Fan, kind: RaySeries) -> Result<CycleClass> {
    let t = fan.rank();
    let mut cache = SeriesCache::new(kind, t, false);
    let trivial = kind.series(&CyclotomicScalar::one(), t);
    let fundamental = CycleClass::fundamental(fan);
    let mut total = CycleClass::zero();
    for sigma in fan.cone_ids() {
        let mut e = twisted_sum(fan, sigma, &mut cache)?;
        if e.is_zero() {
            continue;
        }
        let cone = fan.cone(sigma);
        for rho in 0..fan.num_rays() {
            if !cone.contains_ray(rho) {
                e = e.mul(&CohomExpression::from_series(rho, &trivial, t));
            }
        }
        total = total.add(&cohom_cap(fan, &e, &fundamental)?);
    }
    Ok(total)
}

/// The Todd class `td_*(X)`.
pub fn todd_lrr(fan: &Fan) -> Result<CycleClass> {
    lrr_sum(fan, RaySeries::Todd)
}

/// The Todd class of the dualizing sheaf, `td_*([omega_X])`.
pub fn todd_omega(fan: &Fan) -> Result<CycleClass> {
    lrr_sum(fan, RaySeries::ToddOmega)
}

/// The homology Hirzebruch class `T_y` or, if `normalized`, `T̂_y`.
pub fn hirzebruch_class(fan: &Fan, normalized: bool) -> Result<CycleClass> {
    if normalized {
        lrr_sum(fan, RaySeries::Normalized)
    } else {
        let shift = fan.rank() as i64 - fan.num_rays() as i64;
        Ok(lrr_sum(fan, RaySeries::Unnormalized)?.mul_y(&YRational::one_plus_y_pow(shift)))
    }
}

/// Divides the degree-`k` component of an un-normalized class by `(1+y)^k`.
pub fn normalize_class(fan: &Fan, c: &CycleClass) -> Result<CycleClass> {
    c.normalize(fan)
}

/// `prod_{rho not in sigma} Q̂_y(x_rho) ∩ [V_sigma]`; the whole variety when
/// `sigma` is `None`.
pub fn mock_hirzebruch(fan: &Fan, sigma: Option<ConeId>) -> Result<CycleClass> {
    let sigma = sigma.unwrap_or_else(|| fan.zero_cone());
    let t = fan.orbit_dim(sigma);
    let q = RaySeries::Normalized.series(&CyclotomicScalar::one(), t);
    let mut e = CohomExpression::one(t);
    for rho in 0..fan.num_rays() {
        if fan.join_ray(sigma, rho).is_some() && !fan.cone(sigma).contains_ray(rho) {
            e = e.mul(&CohomExpression::from_series(rho, &q, t));
        }
    }
    cohom_cap(fan, &e, &CycleClass::orbit(sigma))
}

/// `(1/mult) sum_{g in G_sigma°} prod_{rho in sigma} f_{a_rho(g)}(x_rho) / x_rho`.
pub(crate) fn twisted_average(
    fan: &Fan,
    sigma: ConeId,
    kind: RaySeries,
) -> Result<CohomExpression> {
    let mult = fan.multiplicity(sigma);
    if mult == 1 {
        return Err(Error::InvalidInput(format!(
            "cone {:?} is smooth",
            fan.cone(sigma).rays
        )));
    }
    let mut cache = SeriesCache::new(kind, fan.rank(), true);
    let sum = twisted_sum(fan, sigma, &mut cache)?;
    Ok(sum.scale(&Rational::new(1.into(), mult.into())))
}

/// The correction `A_y(sigma)` of a singular cone.
pub fn correction_series(fan: &Fan, sigma: ConeId) -> Result<CohomExpression> {
    twisted_average(fan, sigma, RaySeries::Normalized)
}

/// `T̂_y` as the mock class plus the singular-cone corrections applied to
/// the mock classes of their orbit closures.
pub fn hirzebruch_decomposed(fan: &Fan) -> Result<CycleClass> {
    let mut total = mock_hirzebruch(fan, None)?;
    let singular: Vec<ConeId> = fan.singular_cones().collect();
    for sigma in singular {
        let a = correction_series(fan, sigma)?;
        let local = mock_hirzebruch(fan, Some(sigma))?;
        total = total.add(&cohom_cap(fan, &a, &local)?);
    }
    Ok(total)
}
