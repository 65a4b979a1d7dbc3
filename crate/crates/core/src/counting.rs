//! Lattice-point counting through characteristic classes.

use num_traits::{One, Zero};

use crate::classes::{hirzebruch_class, orbit_classes_subset, todd_lrr};
use crate::error::{Error, Result};
use crate::fan::{ConeSubset, Fan};
use crate::intersect::{cohom_cap, degree, exp_divisor, CycleClass, DivisorClass};
use crate::polytope::{LatticePolytope, NormalFan, PolytopalSubcomplex, Region};
use crate::scalars::{
    binomial, factorial, rat, rat_from_int, rat_pow, Int, Rational, YPolynomial, YRational,
};

/// `deg(ch(O(D)) ∩ c)`.
pub fn integrate_character(fan: &Fan, d: &DivisorClass, c: &CycleClass) -> Result<YRational> {
    degree(fan, &cohom_cap(fan, &exp_divisor(d, fan.rank()), c)?)
}

fn as_polynomial(v: YRational) -> Result<YPolynomial> {
    v.to_polynomial()
        .ok_or_else(|| Error::InvalidInput(format!("{v} is not a polynomial in y")))
}

fn as_rational(v: YRational) -> Result<Rational> {
    v.to_constant()
        .ok_or_else(|| Error::InvalidInput(format!("{v} depends on y")))
}

/// The cones of the normal fan dual to the faces of a subcomplex.
pub fn subcomplex_cones(nf: &NormalFan, s: &PolytopalSubcomplex) -> Result<ConeSubset> {
    nf.fan
        .star_closed_subset(s.iter().map(|q| nf.face_cones[q]))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartRow {
    pub dilation: u64,
    pub count: Int,
    pub value: Rational,
    pub residual: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EhrhartResult {
    /// `a_0, ..., a_d`.
    pub coefficients: Vec<Rational>,
    pub rows: Vec<EhrhartRow>,
    /// `((-1)^d Ehr(-l), |Int(lP) ∩ M|)` for `l = 1..=3`.
    pub reciprocity: Vec<(Rational, Int)>,
}

impl EhrhartResult {
    pub fn evaluate(&self, l: &Rational) -> Rational {
        self.coefficients
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, a| acc * l + a)
    }

    pub fn residuals_vanish(&self) -> bool {
        self.rows.iter().all(|r| r.residual.is_zero())
    }

    pub fn reciprocity_holds(&self) -> bool {
        self.reciprocity
            .iter()
            .all(|(v, c)| *v == rat_from_int(c.clone()))
    }
}

/// `|lP ∩ M|` for `l = 0..=max_dilation`.
pub fn ehrhart_bruteforce(p: &LatticePolytope, max_dilation: u64) -> Vec<Int> {
    (0..=max_dilation)
        .map(|l| p.count_points(Region::Polytope, l))
        .collect()
}

/// Ehrhart coefficients `a_k = deg(D_P^k ∩ td_k) / k!`, checked against
/// brute force for `l = 0..=max_dilation` (default `d + 2`).
pub fn ehrhart_via_classes(
    p: &LatticePolytope,
    max_dilation: Option<u64>,
) -> Result<EhrhartResult> {
    let nf = p.normal_fan()?;
    let fan = &nf.fan;
    let d = p.rank();
    let td = todd_lrr(fan)?;
    let dp = p.divisor().to_expression(d);
    let mut power = crate::intersect::CohomExpression::one(d);
    let mut coefficients = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let v = as_rational(degree(fan, &cohom_cap(fan, &power, &td)?)?)?;
        coefficients.push(v / rat_from_int(factorial(k)));
        power = power.mul(&dp);
    }
    let mut result = EhrhartResult {
        coefficients,
        rows: Vec::new(),
        reciprocity: Vec::new(),
    };
    let top = max_dilation.unwrap_or(d as u64 + 2);
    for (l, count) in ehrhart_bruteforce(p, top).into_iter().enumerate() {
        let value = result.evaluate(&rat(l as i64, 1));
        let residual = &rat_from_int(count.clone()) - &value;
        result.rows.push(EhrhartRow {
            dilation: l as u64,
            count,
            value,
            residual,
        });
    }
    let sign = rat_pow(&rat(-1, 1), d);
    for l in 1..=3u64 {
        let v = &sign * result.evaluate(&rat(-(l as i64), 1));
        result
            .reciprocity
            .push((v, p.count_points(Region::Interior, l)));
    }
    Ok(result)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CountMode {
    /// Relative-interior counts weighted by `(1+y)^{dim Q}`.
    Standard,
    /// Closed-face counts weighted by `(-1/2)^{codim Q}`, at `y = 1`.
    Dual,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCountReport {
    pub mode: CountMode,
    pub lhs: YPolynomial,
    pub rhs: YPolynomial,
    pub equal: bool,
}

/// `sum_{Q in P'} (1+y)^{dim Q} |Relint Q ∩ M|`.
pub fn weighted_relint_sum(p: &LatticePolytope, s: &PolytopalSubcomplex) -> YPolynomial {
    let counts = p.relint_counts(1);
    let mut total = YPolynomial::zero();
    for q in s.iter() {
        total += YPolynomial::one_plus_y_pow(p.face(q).dim).scale(&rat_from_int(counts[q].clone()));
    }
    total
}

/// Both sides of the weighted counting formula for a subcomplex (default
/// the whole polytope), or of its closed-face dual form for `P' = P`.
pub fn weighted_count_identity(
    p: &LatticePolytope,
    subcomplex: Option<&PolytopalSubcomplex>,
    mode: CountMode,
) -> Result<WeightedCountReport> {
    let nf = p.normal_fan()?;
    let fan = &nf.fan;
    let d = p.rank();
    let dp = p.divisor();
    let whole = PolytopalSubcomplex::whole(p);
    let s = subcomplex.unwrap_or(&whole);
    let (lhs, rhs) = match mode {
        CountMode::Standard => {
            let lhs = weighted_relint_sum(p, s);
            let t = orbit_classes_subset(fan, &subcomplex_cones(&nf, s)?, false)?;
            (lhs, as_polynomial(integrate_character(fan, &dp, &t)?)?)
        }
        CountMode::Dual => {
            if s.len() != whole.len() {
                return Err(Error::InvalidInput(
                    "the dual form needs the whole polytope".into(),
                ));
            }
            let mut lhs = Rational::zero();
            for q in 0..p.faces().len() {
                let codim = d - p.face(q).dim;
                lhs +=
                    rat_pow(&rat(-1, 2), codim) * rat_from_int(p.count_points(Region::Face(q), 1));
            }
            let t1 = hirzebruch_class(fan, false)?.specialize(&rat(1, 1))?;
            let rhs = as_rational(integrate_character(fan, &dp, &t1)?)? * rat_pow(&rat(1, 2), d);
            (YPolynomial::constant(lhs), YPolynomial::constant(rhs))
        }
    };
    Ok(WeightedCountReport {
        mode,
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HirzebruchPolynomial {
    pub polynomial: YPolynomial,
    /// `chi(X, Ω̃^p(D))` for `p = 0..=d`: the coefficients of `y^p`.
    pub per_p: Vec<Rational>,
}

impl HirzebruchPolynomial {
    fn from_polynomial(polynomial: YPolynomial, d: usize) -> Self {
        let per_p = (0..=d).map(|p| polynomial.coeff(p)).collect();
        HirzebruchPolynomial { polynomial, per_p }
    }
}

/// `chi_y(X, O(D)) = deg(ch(O(D)) ∩ T_y(X))` on a complete fan.
pub fn hirzebruch_polynomial(fan: &Fan, d: &DivisorClass) -> Result<HirzebruchPolynomial> {
    if !fan.is_complete() {
        return Err(Error::NotComplete);
    }
    let t = hirzebruch_class(fan, false)?;
    Ok(HirzebruchPolynomial::from_polynomial(
        as_polynomial(integrate_character(fan, d, &t)?)?,
        fan.rank(),
    ))
}

/// The same polynomial for `D_P` from face counts:
/// `chi(Ω̃^p(D_P)) = sum_{i >= p} C(i, p) sum_{dim Q = i} |Relint Q ∩ M|`.
pub fn hirzebruch_polynomial_combinatorial(
    p: &LatticePolytope,
    s: &PolytopalSubcomplex,
) -> HirzebruchPolynomial {
    let d = p.rank();
    let counts = p.relint_counts(1);
    let mut by_dim = vec![Int::zero(); d + 1];
    for q in s.iter() {
        by_dim[p.face(q).dim] += &counts[q];
    }
    let per_p: Vec<Rational> = (0..=d)
        .map(|k| {
            (k..=d)
                .map(|i| rat_from_int(binomial(i, k) * &by_dim[i]))
                .sum()
        })
        .collect();
    HirzebruchPolynomial {
        polynomial: YPolynomial::new(per_p.clone()),
        per_p,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PickReport {
    pub area: Rational,
    pub lattice_points: Int,
    pub boundary_points: Int,
    pub interior_points: Int,
    pub vertices: usize,
    pub edges: usize,
    pub classical_holds: bool,
    /// `chi_y(P) = (1+y)^2 - (1+y) #edges + #vertices`.
    pub chi_y: YPolynomial,
    pub ypick_lhs: YPolynomial,
    pub ypick_rhs: YPolynomial,
    /// `deg(ch(O(D_P)) ∩ T_y(X_P))` computed from the class.
    pub class_side: YPolynomial,
    pub ypick_holds: bool,
}

/// Twice the area, by the shoelace formula along the boundary cycle.
fn doubled_area(p: &LatticePolytope) -> Int {
    let n = p.vertices().len();
    let mut next = vec![Vec::new(); n];
    for f in p.facets() {
        next[f.vertices[0]].push(f.vertices[1]);
        next[f.vertices[1]].push(f.vertices[0]);
    }
    let mut order = vec![0usize];
    let mut prev = usize::MAX;
    while order.len() < n {
        let cur = *order.last().unwrap();
        let step = if next[cur][0] != prev {
            next[cur][0]
        } else {
            next[cur][1]
        };
        prev = cur;
        order.push(step);
    }
    let mut twice = Int::zero();
    for i in 0..n {
        let a = &p.vertices()[order[i]];
        let b = &p.vertices()[order[(i + 1) % n]];
        twice += &a[0] * &b[1] - &a[1] * &b[0];
    }
    if twice < Int::zero() {
        -twice
    } else {
        twice
    }
}

pub fn pick_report(p: &LatticePolytope) -> Result<PickReport> {
    if p.rank() != 2 {
        return Err(Error::NotPolygon);
    }
    let area = Rational::new(doubled_area(p), 2.into());
    let total = p.count_points(Region::Polytope, 1);
    let interior = p.count_points(Region::Interior, 1);
    let boundary = &total - &interior;
    let v = p.vertices().len();
    let e = p.facets().len();
    let classical = rat_from_int(total.clone())
        == &area + rat_from_int(boundary.clone()) / rat(2, 1) + Rational::one();

    let q = |k: usize| YPolynomial::one_plus_y_pow(k);
    let c = |x: &Int| YPolynomial::constant(rat_from_int(x.clone()));
    let chi_y = q(2) - q(1).scale(&rat(e as i64, 1)) + YPolynomial::constant(rat(v as i64, 1));
    let counts = p.relint_counts(1);
    let edge_points: Int = (0..p.faces().len())
        .filter(|&f| p.face(f).dim == 1)
        .map(|f| counts[f].clone())
        .sum();
    let lhs =
        q(2) * c(&interior) + q(1) * c(&edge_points) + YPolynomial::constant(rat(v as i64, 1));
    let one_minus_y_sq = YPolynomial::from_ints(&[1, 0, -1]).scale(&rat(1, 2));
    let rhs = q(2).scale(&area) + one_minus_y_sq * c(&boundary) + chi_y.clone();

    let nf = p.normal_fan()?;
    let t = hirzebruch_class(&nf.fan, false)?;
    let class_side = as_polynomial(integrate_character(&nf.fan, &p.divisor(), &t)?)?;
    Ok(PickReport {
        area,
        lattice_points: total,
        boundary_points: boundary,
        interior_points: interior,
        vertices: v,
        edges: e,
        classical_holds: classical,
        chi_y,
        ypick_holds: lhs == rhs && rhs == class_side,
        ypick_lhs: lhs,
        ypick_rhs: rhs,
        class_side,
    })
}
