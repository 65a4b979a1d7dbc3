//! Classes of torus-invariant closed subsets via the orbit decomposition.
//!
//! Each orbit closure `V_sigma` is the toric variety of `Star(sigma)`; its
//! classes are computed there and pushed forward into the ambient variety.

use crate::error::Result;
use crate::fan::{ConeId, ConeSubset, Fan};
use crate::intersect::{pushforward_from_star, CycleClass};
use crate::scalars::{YPolynomial, YRational};

use super::lrr::todd_omega;

/// `chi_y = sum_{sigma in subset} (-1-y)^{dim O_sigma}`.
pub fn chi_y_subset(fan: &Fan, subset: &ConeSubset) -> YPolynomial {
    let minus_one_minus_y = YPolynomial::from_ints(&[-1, -1]);
    let mut total = YPolynomial::zero();
    for sigma in subset.iter() {
        total += minus_one_minus_y.pow(fan.orbit_dim(sigma));
    }
    total
}

/// `(k_sigma)_* c(V_sigma)` for a class `c` computed on the star fan.
pub fn orbit_closure_class(
    fan: &Fan,
    sigma: ConeId,
    class: impl FnOnce(&Fan) -> Result<CycleClass>,
) -> Result<CycleClass> {
    let star = fan.star_fan(sigma)?;
    Ok(pushforward_from_star(&star, &class(&star.fan)?))
}

/// The Hirzebruch class of `X_{Sigma'}` from the Todd classes of the
/// dualizing sheaves of the orbit closures in `subset`.
pub fn orbit_classes_subset(
    fan: &Fan,
    subset: &ConeSubset,
    normalized: bool,
) -> Result<CycleClass> {
    let mut total = CycleClass::zero();
    for sigma in subset.iter() {
        let pushed = orbit_closure_class(fan, sigma, todd_omega)?;
        let top = fan.orbit_dim(sigma) as i64;
        let term = if normalized {
            pushed.map_by_degree(fan, |k| YRational::one_plus_y_pow(top - k as i64))
        } else {
            pushed.mul_y(&YRational::one_plus_y_pow(top))
        };
        total = total.add(&term);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classes::lrr::hirzebruch_class;
    use crate::intersect::{degree, pairing_equal};
    use crate::scalars::rat;

    fn p2() -> Fan {
        Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        )
        .unwrap()
    }

    fn boundary(f: &Fan) -> ConeSubset {
        f.star_closed_subset(f.cone_ids().filter(|&c| f.cone(c).dim() > 0))
            .unwrap()
    }

    #[test]
    fn chi_y_of_p2() {
        let f = p2();
        assert_eq!(chi_y_subset(&f, &f.all_cones()).to_string(), "1 - y + y^2");
        assert_eq!(chi_y_subset(&f, &boundary(&f)).to_string(), "-3*y");
        let torus = f.star_closed_subset([]).unwrap();
        assert!(chi_y_subset(&f, &torus).is_zero());
    }

    #[test]
    fn orbit_route_matches_lrr() {
        let f = Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -2]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        )
        .unwrap();
        for normalized in [false, true] {
            let a = orbit_classes_subset(&f, &f.all_cones(), normalized).unwrap();
            let b = hirzebruch_class(&f, normalized).unwrap();
            assert!(pairing_equal(&f, &a, &b).unwrap());
        }
    }

    #[test]
    fn euler_characteristic_and_boundary() {
        let f = p2();
        let c = orbit_classes_subset(&f, &f.all_cones(), true)
            .unwrap()
            .specialize(&rat(-1, 1))
            .unwrap();
        assert_eq!(degree(&f, &c).unwrap(), YRational::constant(rat(3, 1)));
        let b = orbit_classes_subset(&f, &boundary(&f), false)
            .unwrap()
            .specialize(&rat(0, 1))
            .unwrap();
        assert!(degree(&f, &b).unwrap().is_zero());
    }
}
