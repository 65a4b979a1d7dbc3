//! T-classes, mock T-classes and the half-weight corrections `alpha`.

use std::collections::BTreeMap;

use crate::error::Result;
use crate::fan::{ConeId, Fan};
use crate::intersect::{CohomExpression, CycleClass};
use crate::scalars::{rat, Rational, YRational};

use super::lrr::{correction_series, mock_hirzebruch, todd_lrr};

/// `T = sum_k 2^{d-k} td_k`, with `k` the homological degree.
pub fn t_class(fan: &Fan) -> Result<CycleClass> {
    let d = fan.rank();
    Ok(todd_lrr(fan)?.map_by_degree(fan, |k| {
        YRational::constant(Rational::from_integer((1i64 << (d - k)).into()))
    }))
}

/// The mock L-class of `V_sigma` pushed into the ambient variety.
pub fn mock_l_class(fan: &Fan, sigma: ConeId) -> Result<CycleClass> {
    mock_hirzebruch(fan, Some(sigma))?.specialize(&rat(1, 1))
}

/// `T^(m)(V_sigma) = sum_{tau >= sigma} L^(m)(V_tau)`, pushed forward.
pub fn mock_t_class(fan: &Fan, sigma: Option<ConeId>) -> Result<CycleClass> {
    let sigma = sigma.unwrap_or_else(|| fan.zero_cone());
    let mut total = CycleClass::zero();
    for tau in fan.star_cones(sigma) {
        total = total.add(&mock_l_class(fan, tau)?);
    }
    Ok(total)
}

/// `A_1(sigma)`, extended by `1` on the zero cone and `0` on other smooth cones.
pub fn correction_at_one(fan: &Fan, sigma: ConeId) -> Result<CohomExpression> {
    let t = fan.rank();
    if sigma == fan.zero_cone() {
        Ok(CohomExpression::one(t))
    } else if fan.multiplicity(sigma) == 1 {
        Ok(CohomExpression::zero(t))
    } else {
        correction_series(fan, sigma)?.specialize_y(&rat(1, 1))
    }
}

/// `alpha(sigma)`: `A_1(sigma)` with every `x_rho` replaced by `x_rho / 2`.
pub fn alpha(fan: &Fan, sigma: ConeId) -> Result<CohomExpression> {
    Ok(correction_at_one(fan, sigma)?.rescale_variables(&rat(1, 2)))
}

#[derive(Clone, Debug)]
pub struct TClassSuite {
    pub t_class: CycleClass,
    pub mock_t_class: CycleClass,
    pub alpha: BTreeMap<ConeId, CohomExpression>,
}

pub fn t_class_suite(fan: &Fan) -> Result<TClassSuite> {
    let mut alphas = BTreeMap::new();
    for sigma in fan.cone_ids() {
        alphas.insert(sigma, alpha(fan, sigma)?);
    }
    Ok(TClassSuite {
        t_class: t_class(fan)?,
        mock_t_class: mock_t_class(fan, None)?,
        alpha: alphas,
    })
}
