//! Cross-checks between the orbit-decomposition and Lefschetz-Riemann-Roch
//! computations of the characteristic classes.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{ConeId, Fan};
use crate::intersect::{
    cohom_cap, degree, pairing_difference, CohomExpression, CycleClass, PairingWitness,
};
use crate::scalars::{rat, CyclotomicScalar, Rational, YPolynomial, YRational};

use super::lrr::{
    hirzebruch_class, hirzebruch_decomposed, mock_hirzebruch, normalize_class, todd_lrr,
    todd_omega, RaySeries,
};
use super::orbit::{chi_y_subset, orbit_classes_subset, orbit_closure_class};
use super::tclass::{alpha, correction_at_one, mock_t_class, t_class};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    /// The identity in words.
    pub statement: &'static str,
    pub passed: bool,
    /// First pairing that differs, when the check failed.
    pub witness: Option<PairingWitness>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &IdentityCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    fn push(
        &mut self,
        name: &'static str,
        statement: &'static str,
        witness: Option<PairingWitness>,
    ) {
        self.checks.push(IdentityCheck {
            name,
            statement,
            passed: witness.is_none(),
            witness,
        });
    }
}

fn constant(q: i64) -> YRational {
    YRational::constant(Rational::from_integer(q.into()))
}

fn signed_power(base: i64, k: usize) -> YRational {
    constant(base.pow(k as u32))
}

/// Per-cone classes of the orbit closures, each pushed into the ambient variety.
struct OrbitClosures {
    todd: Vec<CycleClass>,
    l_unnormalized: Vec<CycleClass>,
    l_normalized: Vec<CycleClass>,
}

impl OrbitClosures {
    fn new(fan: &Fan) -> Result<Self> {
        let one = rat(1, 1);
        let mut todd = Vec::new();
        let mut l_unnormalized = Vec::new();
        let mut l_normalized = Vec::new();
        for sigma in fan.cone_ids() {
            todd.push(orbit_closure_class(fan, sigma, todd_lrr)?);
            l_unnormalized.push(orbit_closure_class(fan, sigma, |f| {
                hirzebruch_class(f, false)?.specialize(&one)
            })?);
            l_normalized.push(orbit_closure_class(fan, sigma, |f| {
                hirzebruch_class(f, true)?.specialize(&one)
            })?);
        }
        Ok(OrbitClosures {
            todd,
            l_unnormalized,
            l_normalized,
        })
    }
}

fn sum_over_cones(fan: &Fan, f: impl Fn(ConeId) -> Result<CycleClass>) -> Result<CycleClass> {
    let mut total = CycleClass::zero();
    for sigma in fan.cone_ids() {
        total = total.add(&f(sigma)?);
    }
    Ok(total)
}

/// Right-hand side of the Euler-Maclaurin form of the Todd class:
/// `sum_sigma alpha(sigma) sum_{tau >= sigma} 2^{-dim tau}
/// prod_{rho not in tau} (x/2)/tanh(x/2) ∩ [V_tau]`.
fn todd_euler_maclaurin(fan: &Fan) -> Result<CycleClass> {
    let t = fan.rank();
    let half_l = RaySeries::LType
        .series(&CyclotomicScalar::one(), t)
        .scale(&CyclotomicScalar::from(rat(1, 2)));
    let mut local = Vec::new();
    for tau in fan.cone_ids() {
        let mut e = CohomExpression::one(t);
        for rho in 0..fan.num_rays() {
            if fan.join_ray(tau, rho).is_some() && !fan.cone(tau).contains_ray(rho) {
                e = e.mul(&CohomExpression::from_series(rho, &half_l, t));
            }
        }
        let weight = Rational::new(1.into(), (1i64 << fan.cone(tau).dim()).into());
        local.push(cohom_cap(fan, &e, &CycleClass::orbit(tau))?.scale(&weight));
    }
    sum_over_cones(fan, |sigma| {
        let a = alpha(fan, sigma)?;
        if a.is_zero() {
            return Ok(CycleClass::zero());
        }
        let mut inner = CycleClass::zero();
        for tau in fan.star_cones(sigma) {
            inner = inner.add(&local[tau]);
        }
        cohom_cap(fan, &a, &inner)
    })
}

/// Evaluates every identity on a complete simplicial fan.
pub fn verify_identities(fan: &Fan) -> Result<IdentityReport> {
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    let d = fan.rank();
    let one = rat(1, 1);
    let mut report = IdentityReport::default();
    let closures = OrbitClosures::new(fan)?;

    let td = todd_lrr(fan)?;
    let td_omega = todd_omega(fan)?;
    let t_un = hirzebruch_class(fan, false)?;
    let t_norm = hirzebruch_class(fan, true)?;
    let l_un = t_un.specialize(&one)?;

    let rhs = td_omega.map_by_degree(fan, |k| signed_power(-1, d - k));
    report.push(
        "todd-duality",
        "td_k(X) = (-1)^(d-k) td_k([omega_X])",
        pairing_difference(fan, &td, &rhs)?,
    );

    let rhs = sum_over_cones(fan, |s| {
        Ok(closures.todd[s].scale(&Rational::from_integer(
            (-1i64).pow(fan.cone(s).dim() as u32).into(),
        )))
    })?;
    report.push(
        "canonical-orbit-sum",
        "td([omega_X]) = sum_sigma (-1)^codim(O_sigma) td(V_sigma)",
        pairing_difference(fan, &td_omega, &rhs)?,
    );

    let rhs = l_un.dual(fan).mul_y(&signed_power(-1, d));
    report.push(
        "l-class-duality",
        "T_1(X) = (-1)^d T_1(X)^dual",
        pairing_difference(fan, &l_un, &rhs)?,
    );

    let rhs = sum_over_cones(fan, |s| {
        Ok(closures.todd[s].mul_y(&(signed_power(-1, d) * signed_power(-2, fan.orbit_dim(s)))))
    })?;
    report.push(
        "l-class-orbit-sum",
        "T_1(X) = sum_sigma (-1)^d (-2)^dim(O_sigma) td(V_sigma)",
        pairing_difference(fan, &l_un, &rhs)?,
    );

    let lhs = td.mul_y(&constant(1i64 << d));
    let rhs = sum_over_cones(fan, |s| Ok(closures.l_unnormalized[s].clone()))?;
    report.push(
        "l-sum-todd",
        "2^d td(X) = sum_sigma T_1(V_sigma)",
        pairing_difference(fan, &lhs, &rhs)?,
    );

    let t = t_class(fan)?;
    let rhs = sum_over_cones(fan, |s| Ok(closures.l_normalized[s].clone()))?;
    report.push(
        "l-sum-t-class",
        "T(X) = sum_sigma T̂_1(V_sigma)",
        pairing_difference(fan, &t, &rhs)?,
    );

    let rhs = sum_over_cones(fan, |s| {
        let a = correction_at_one(fan, s)?;
        if a.is_zero() {
            return Ok(CycleClass::zero());
        }
        cohom_cap(fan, &a, &mock_t_class(fan, Some(s))?)
    })?;
    report.push(
        "l-sum-mock-t-class",
        "T(X) = sum_sigma A_1(sigma) T^(m)(V_sigma)",
        pairing_difference(fan, &t, &rhs)?,
    );

    let rhs = todd_euler_maclaurin(fan)?;
    report.push(
        "todd-euler-maclaurin",
        "td(X) = sum_sigma alpha(sigma) sum_{tau >= sigma} mult(tau) prod_{tau} x/2 prod_{not tau} (x/2)/tanh(x/2)",
        pairing_difference(fan, &td, &rhs)?,
    );

    let rhs = hirzebruch_decomposed(fan)?;
    report.push(
        "hirzebruch-decomposition",
        "T̂_y(X) = T̂_y^(m)(X) + sum_{sigma singular} A_y(sigma) T̂_y^(m)(V_sigma)",
        pairing_difference(fan, &t_norm, &rhs)?,
    );

    let all = fan.all_cones();
    let rhs = orbit_classes_subset(fan, &all, false)?;
    report.push(
        "orbit-sum-unnormalized",
        "T_y(X) = sum_sigma (1+y)^dim(O_sigma) td([omega_V_sigma])",
        pairing_difference(fan, &t_un, &rhs)?,
    );

    let rhs = orbit_classes_subset(fan, &all, true)?;
    report.push(
        "orbit-sum-normalized",
        "T̂_y(X) = sum_sigma,k (1+y)^(dim(O_sigma)-k) td_k([omega_V_sigma])",
        pairing_difference(fan, &t_norm, &rhs)?,
    );

    let minus_one_minus_y = YRational::from(YPolynomial::from_ints(&[-1, -1]));
    let rhs = sum_over_cones(fan, |s| {
        Ok(closures.todd[s]
            .dual(fan)
            .mul_y(&minus_one_minus_y.pow(fan.orbit_dim(s))))
    })?;
    report.push(
        "orbit-sum-dual-todd",
        "T_y(X) = sum_sigma (-1-y)^dim(O_sigma) td(V_sigma)^dual",
        pairing_difference(fan, &t_un, &rhs)?,
    );

    let witness = match normalize_class(fan, &t_un) {
        Ok(n) => pairing_difference(fan, &n, &t_norm)?,
        Err(_) => Some(PairingWitness {
            cone: Vec::new(),
            left: YRational::zero(),
            right: YRational::zero(),
        }),
    };
    report.push("normalization", "T̂_y = degreewise (1+y)^(-k) T_y", witness);

    let left = degree(fan, &t_norm)?;
    let right = YRational::from(chi_y_subset(fan, &all));
    let witness = (left != right).then(|| PairingWitness {
        cone: Vec::new(),
        left,
        right,
    });
    report.push(
        "chi-y-genus",
        "deg T̂_y(X) = sum_sigma (-1-y)^dim(O_sigma)",
        witness,
    );

    report.push(
        "todd-specialization",
        "T̂_0(X) = td(X)",
        pairing_difference(fan, &t_norm.specialize(&rat(0, 1))?, &td)?,
    );

    let ehler = sum_over_cones(fan, |s| Ok(CycleClass::orbit(s)))?;
    report.push(
        "chern-specialization",
        "T̂_-1(X) = sum_sigma [V_sigma]",
        pairing_difference(fan, &t_norm.specialize(&rat(-1, 1))?, &ehler)?,
    );

    let mock_chern = sum_over_cones(fan, |s| {
        Ok(CycleClass::orbit(s).scale(&Rational::new(1.into(), fan.multiplicity(s).into())))
    })?;
    report.push(
        "mock-chern-specialization",
        "T̂_-1^(m)(X) = sum_sigma [V_sigma] / mult(sigma)",
        pairing_difference(
            fan,
            &mock_hirzebruch(fan, None)?.specialize(&rat(-1, 1))?,
            &mock_chern,
        )?,
    );

    Ok(report)
}
