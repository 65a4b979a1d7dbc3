mod common;

use num_traits::ToPrimitive;
use proptest::prelude::*;

use toric_classes::classes::{todd_lrr, todd_omega};
use toric_classes::counting::{
    ehrhart_bruteforce, ehrhart_via_classes, hirzebruch_polynomial,
    hirzebruch_polynomial_combinatorial, integrate_character, pick_report, weighted_count_identity,
    CountMode,
};
use toric_classes::lattice::IntVector;
use toric_classes::polytope::{LatticePolytope, PolytopalSubcomplex};
use toric_classes::scalars::{int, rat, Rational, YRational};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Strict convex hull, counterclockwise.
fn hull(mut pts: Vec<(i64, i64)>) -> Vec<(i64, i64)> {
    pts.sort_unstable();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &p in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

struct Polygon {
    vertices: Vec<(i64, i64)>,
    polytope: LatticePolytope,
}

impl std::fmt::Debug for Polygon {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.vertices)
    }
}

impl Polygon {
    fn twice_area(&self) -> i64 {
        let v = &self.vertices;
        (0..v.len())
            .map(|i| {
                let (p, q) = (v[i], v[(i + 1) % v.len()]);
                p.0 * q.1 - p.1 * q.0
            })
            .sum::<i64>()
            .abs()
    }

    fn boundary_points(&self) -> i64 {
        let v = &self.vertices;
        (0..v.len())
            .map(|i| {
                let (p, q) = (v[i], v[(i + 1) % v.len()]);
                gcd(q.0 - p.0, q.1 - p.1)
            })
            .sum()
    }
}

fn random_polygon() -> impl Strategy<Value = Polygon> {
    prop::collection::vec((-3i64..=3, -3i64..=3), 3..8).prop_filter_map("degenerate", |pts| {
        let vertices = hull(pts);
        if vertices.len() < 3 {
            return None;
        }
        let vecs = vertices
            .iter()
            .map(|&(a, b)| IntVector(vec![int(a), int(b)]))
            .collect();
        let polytope = LatticePolytope::new(vecs).ok()?;
        Some(Polygon { vertices, polytope })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn ehrhart_polynomial_of_polygon(g in random_polygon()) {
        let e = ehrhart_via_classes(&g.polytope, Some(4)).unwrap();
        prop_assert!(e.residuals_vanish());
        prop_assert!(e.reciprocity_holds());
        prop_assert_eq!(&e.coefficients[0], &rat(1, 1));
        prop_assert_eq!(&e.coefficients[1], &rat(g.boundary_points(), 2));
        prop_assert_eq!(&e.coefficients[2], &rat(g.twice_area(), 2));
    }

    #[test]
    fn pick_formulas(g in random_polygon()) {
        let r = pick_report(&g.polytope).unwrap();
        prop_assert!(r.classical_holds);
        prop_assert!(r.ypick_holds);
        prop_assert_eq!(r.boundary_points.to_i64().unwrap(), g.boundary_points());
        prop_assert_eq!(r.area, rat(g.twice_area(), 2));
        prop_assert_eq!(r.vertices, g.vertices.len());
    }

    #[test]
    fn weighted_counts(g in random_polygon()) {
        let p = &g.polytope;
        for s in [PolytopalSubcomplex::whole(p), PolytopalSubcomplex::boundary(p)] {
            let r = weighted_count_identity(p, Some(&s), CountMode::Standard).unwrap();
            prop_assert!(r.equal, "{} vs {}", r.lhs, r.rhs);
        }
        let facet = PolytopalSubcomplex::facet_closure(p, 0).unwrap();
        prop_assert!(weighted_count_identity(p, Some(&facet), CountMode::Standard).unwrap().equal);
        prop_assert!(weighted_count_identity(p, None, CountMode::Dual).unwrap().equal);
    }

    #[test]
    fn hirzebruch_polynomial_two_ways(g in random_polygon()) {
        let p = &g.polytope;
        let nf = p.normal_fan().unwrap();
        let classes = hirzebruch_polynomial(&nf.fan, &p.divisor()).unwrap();
        let faces = hirzebruch_polynomial_combinatorial(p, &PolytopalSubcomplex::whole(p));
        prop_assert_eq!(classes, faces);
    }
}

fn character_of(name: &str, interior: bool) -> Rational {
    let p = common::polytope(name);
    let nf = p.normal_fan().unwrap();
    let c = if interior {
        todd_omega(&nf.fan).unwrap()
    } else {
        todd_lrr(&nf.fan).unwrap()
    };
    integrate_character(&nf.fan, &p.divisor(), &c)
        .unwrap()
        .to_constant()
        .unwrap()
}

#[test]
fn standard_triangle_ehrhart() {
    let e = ehrhart_via_classes(&common::polytope("triangle"), None).unwrap();
    assert_eq!(e.coefficients, vec![rat(1, 1), rat(3, 2), rat(1, 2)]);
}

#[test]
fn tall_triangle_ehrhart() {
    let e = ehrhart_via_classes(&common::polytope("t2"), None).unwrap();
    assert_eq!(e.coefficients, vec![rat(1, 1), rat(2, 1), rat(1, 1)]);
}

#[test]
fn interior_counts_from_dualizing_todd() {
    assert_eq!(character_of("square", true), rat(0, 1));
    assert_eq!(character_of("square2", true), rat(1, 1));
}

#[test]
fn lattice_points_of_tall_triangle() {
    assert_eq!(character_of("t2", false), rat(4, 1));
}

#[test]
fn class_counts_match_inequality_oracle() {
    for name in common::POLYTOPES {
        let p = common::polytope(name);
        let counts = ehrhart_bruteforce(&p, 3);
        for (l, c) in counts.iter().enumerate() {
            assert_eq!(
                c.to_i64().unwrap(),
                common::count_by_inequalities(name, l as i64, false),
                "{name} at {l}"
            );
        }
        let e = ehrhart_via_classes(&p, Some(3)).unwrap();
        assert!(e.residuals_vanish(), "{name}");
        assert!(e.reciprocity_holds(), "{name}");
        for (i, (_, interior)) in e.reciprocity.iter().enumerate() {
            assert_eq!(
                interior.to_i64().unwrap(),
                common::count_by_inequalities(name, i as i64 + 1, true),
                "{name} interior at {}",
                i + 1
            );
        }
    }
}

#[test]
fn cube_hirzebruch_polynomial() {
    let p = common::polytope("cube");
    let nf = p.normal_fan().unwrap();
    let h = hirzebruch_polynomial(&nf.fan, &p.divisor()).unwrap();
    // Only the eight vertices have lattice points in their relative interiors.
    assert_eq!(h.per_p, vec![rat(8, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
    assert_eq!(
        YRational::from(h.polynomial),
        YRational::constant(rat(8, 1))
    );
}
