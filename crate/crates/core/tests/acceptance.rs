//! Acceptance criteria, run with exact arithmetic and zero tolerance.
//! Prints one PASS/FAIL line per criterion and exits non-zero on failure.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;

use common::{chi_y_at, complete_fans, count_by_inequalities, fan, polytope, POLYTOPES};
use toric_classes::classes::{
    correction_series, hirzebruch_class, hirzebruch_decomposed, normalize_class,
    orbit_classes_subset, t_class, todd_lrr, verify_identities, IdentityReport,
};
use toric_classes::counting::{
    ehrhart_via_classes, hirzebruch_polynomial, hirzebruch_polynomial_combinatorial, pick_report,
    weighted_count_identity, weighted_relint_sum, CountMode,
};
use toric_classes::fan::Fan;
use toric_classes::intersect::{degree, pairing_difference, CycleClass};
use toric_classes::polytope::PolytopalSubcomplex;
use toric_classes::scalars::{rat, YRational};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn ok<T, E: std::fmt::Debug>(r: Result<T, E>, ctx: &str) -> Result<T, String> {
    r.map_err(|e| format!("{ctx}: {e:?}"))
}

fn pairing(f: &Fan, a: &CycleClass, b: &CycleClass, ctx: &str) -> Result<(), String> {
    match ok(pairing_difference(f, a, b), ctx)? {
        None => Ok(()),
        Some(w) => Err(format!(
            "{ctx}: pairing with {:?} gives {} vs {}",
            w.cone, w.left, w.right
        )),
    }
}

fn c1_chi_y() -> Outcome {
    for (name, f) in complete_fans() {
        let t = ok(hirzebruch_class(&f, true), &name)?;
        let deg = ok(degree(&f, &t), &name)?;
        let chi = YRational::from(toric_classes::classes::chi_y_subset(&f, &f.all_cones()));
        ensure(deg == chi, || {
            format!("{name}: degree {deg} but chi_y {chi}")
        })?;
        for y in -3..=3 {
            let v = deg.eval(&rat(y, 1)).unwrap();
            ensure(v == rat(chi_y_at(&f, y), 1), || {
                format!("{name}: cone census disagrees at y = {y}")
            })?;
        }
    }
    let p2 = fan("p2");
    let d = degree(&p2, &hirzebruch_class(&p2, true).unwrap()).unwrap();
    ensure(d.to_string() == "1 - y + y^2", || {
        format!("P2 chi_y is {d}")
    })?;
    Ok("P2: 1 - y + y^2".into())
}

fn c2_weighted_planes() -> Outcome {
    let mut notes = Vec::new();
    for m in [2i64, 3, 5] {
        let nf = polytope(&format!("t{m}")).normal_fan().unwrap();
        let f = &nf.fan;
        let sigma = f
            .singular_cones()
            .find(|&s| f.multiplicity(s) == m as u64)
            .ok_or("no singular cone")?;
        let a = ok(correction_series(f, sigma), "correction")?;
        let c0 = ok(a.coeff(&[]).rational_part(), "rational part")?;
        let mq = rat(m, 1);
        let at1 = &mq * c0.eval(&rat(1, 1)).unwrap();
        let at0 = &mq * c0.eval(&rat(0, 1)).unwrap();
        ensure(at1 == rat(-(m - 1) * (m - 2), 3), || {
            format!("m = {m}: y=1 sum {at1}")
        })?;
        ensure(at0 == rat(-(m - 1) * (m - 5), 12), || {
            format!("m = {m}: y=0 sum {at0}")
        })?;
        if m == 3 {
            ensure(at1 == rat(-2, 3) && at0 == rat(1, 3), || {
                "m = 3 values".into()
            })?;
        }
        notes.push(format!("m={m}: {at1}, {at0}"));
    }
    Ok(notes.join("; "))
}

fn c3_ehrhart() -> Outcome {
    for name in POLYTOPES {
        let p = polytope(name);
        let e = ok(ehrhart_via_classes(&p, Some(5)), name)?;
        ensure(e.residuals_vanish(), || format!("{name}: nonzero residual"))?;
        ensure(e.coefficients[0] == rat(1, 1), || {
            format!("{name}: a0 = {}", e.coefficients[0])
        })?;
        for row in &e.rows {
            let oracle = count_by_inequalities(name, row.dilation as i64, false);
            ensure(row.value == rat(oracle, 1), || {
                format!(
                    "{name}: l = {} gives {} vs {oracle}",
                    row.dilation, row.value
                )
            })?;
        }
        for (l, (v, _)) in e.reciprocity.iter().enumerate() {
            let oracle = count_by_inequalities(name, l as i64 + 1, true);
            ensure(*v == rat(oracle, 1), || {
                format!("{name}: reciprocity at l = {} gives {v} vs {oracle}", l + 1)
            })?;
        }
    }
    Ok(format!("{} polytopes, l = 0..5", POLYTOPES.len()))
}

fn c4_weighted_counting() -> Outcome {
    for name in POLYTOPES {
        let p = polytope(name);
        let subs = [
            ("P", PolytopalSubcomplex::whole(&p)),
            ("boundary", PolytopalSubcomplex::boundary(&p)),
            ("facet", PolytopalSubcomplex::facet_closure(&p, 0).unwrap()),
        ];
        for (label, s) in &subs {
            let r = ok(
                weighted_count_identity(&p, Some(s), CountMode::Standard),
                name,
            )?;
            ensure(r.equal, || {
                format!("{name} / {label}: {} vs {}", r.lhs, r.rhs)
            })?;
        }
        let r = ok(weighted_count_identity(&p, None, CountMode::Dual), name)?;
        ensure(r.equal, || format!("{name} dual: {} vs {}", r.lhs, r.rhs))?;
    }
    Ok("standard on P, boundary, facet; dual on P".into())
}

fn c5_decomposition() -> Outcome {
    let mut n = 0;
    for (name, f) in complete_fans() {
        let a = ok(hirzebruch_decomposed(&f), &name)?;
        let b = ok(hirzebruch_class(&f, true), &name)?;
        pairing(&f, &a, &b, &name)?;
        n += 1;
    }
    Ok(format!("{n} fans"))
}

fn c6_specializations() -> Outcome {
    let mut signatures = Vec::new();
    for (name, f) in complete_fans() {
        let t = ok(hirzebruch_class(&f, true), &name)?;
        pairing(
            &f,
            &t.specialize(&rat(0, 1)).unwrap(),
            &todd_lrr(&f).unwrap(),
            &name,
        )?;
        let chern = ok(orbit_classes_subset(&f, &f.all_cones(), true), &name)?
            .specialize(&rat(-1, 1))
            .unwrap();
        let euler = degree(&f, &chern).unwrap();
        let maximal = f.maximal_cones().len() as i64;
        ensure(euler == YRational::constant(rat(maximal, 1)), || {
            format!("{name}: Euler characteristic {euler}")
        })?;
        let sig = degree(&f, &t.specialize(&rat(1, 1)).unwrap()).unwrap();
        ensure(sig == YRational::constant(rat(chi_y_at(&f, 1), 1)), || {
            format!("{name}: signature {sig}")
        })?;
        if f.rank() == 2 {
            signatures.push(format!("{name}={sig}"));
        }
    }
    Ok(format!("surface signatures {}", signatures.join(", ")))
}

/// Identity reports of every complete fixture, computed once.
fn reports() -> &'static Vec<(String, Result<IdentityReport, String>)> {
    static REPORTS: OnceLock<Vec<(String, Result<IdentityReport, String>)>> = OnceLock::new();
    REPORTS.get_or_init(|| {
        complete_fans()
            .into_iter()
            .map(|(name, f)| {
                let r = ok(verify_identities(&f), &name);
                (name, r)
            })
            .collect()
    })
}

fn identity_group(names: &[&str]) -> Outcome {
    let mut count = 0;
    for (name, r) in reports() {
        let r = r.as_ref().map_err(Clone::clone)?;
        for id in names {
            let c = r
                .checks
                .iter()
                .find(|c| c.name == *id)
                .ok_or_else(|| format!("missing identity {id}"))?;
            ensure(c.passed, || {
                format!("{name}: {id} fails at {:?}", c.witness)
            })?;
            count += 1;
        }
    }
    Ok(format!("{count} checks"))
}

fn c7_dualities() -> Outcome {
    identity_group(&[
        "todd-duality",
        "canonical-orbit-sum",
        "l-class-duality",
        "l-class-orbit-sum",
    ])
}

fn c8_l_class_sums() -> Outcome {
    let summary = identity_group(&[
        "l-sum-todd",
        "l-sum-t-class",
        "l-sum-mock-t-class",
        "todd-euler-maclaurin",
    ])?;
    let f = fan("p2");
    let mut hand = CycleClass::fundamental(&f);
    hand.add_term(f.cone_id(&[0]).unwrap(), &YRational::constant(rat(3, 1)));
    hand.add_term(f.cone_id(&[0, 1]).unwrap(), &YRational::constant(rat(4, 1)));
    pairing(&f, &t_class(&f).unwrap(), &hand, "P2 T-class")?;
    Ok(format!("{summary}; P2 T = [X] + 3 line + 4 pt"))
}

fn c9_pick() -> Outcome {
    let mut n = 0;
    for name in POLYTOPES {
        let p = polytope(name);
        if p.rank() != 2 {
            continue;
        }
        let r = ok(pick_report(&p), name)?;
        ensure(r.classical_holds, || format!("{name}: classical Pick"))?;
        ensure(r.ypick_holds, || {
            format!(
                "{name}: {} vs {} vs {}",
                r.ypick_lhs, r.ypick_rhs, r.class_side
            )
        })?;
        let oracle = count_by_inequalities(name, 1, false);
        ensure(r.lattice_points == oracle.into(), || {
            format!("{name}: {} points", r.lattice_points)
        })?;
        if name == "square2" {
            ensure(
                r.area == rat(4, 1) && r.boundary_points == 8.into() && oracle == 9,
                || "[0,2]^2".into(),
            )?;
        }
        n += 1;
    }
    Ok(format!("{n} polygons; [0,2]^2: 9 = 4 + 4 + 1"))
}

fn c10_normalization() -> Outcome {
    let mut n = 0;
    for (name, f) in complete_fans() {
        ok(
            normalize_class(&f, &hirzebruch_class(&f, false).unwrap()),
            &name,
        )?;
        let boundary = f
            .star_closed_subset(f.cone_ids().filter(|&c| c != f.zero_cone()))
            .unwrap();
        ok(
            normalize_class(&f, &orbit_classes_subset(&f, &boundary, false).unwrap()),
            &name,
        )?;
        n += 2;
        for sigma in f.cone_ids() {
            let star = f.star_fan(sigma).unwrap();
            ok(
                normalize_class(&star.fan, &hirzebruch_class(&star.fan, false).unwrap()),
                &name,
            )?;
            n += 1;
        }
    }
    Ok(format!("{n} classes"))
}

fn c11_hirzebruch_polynomial() -> Outcome {
    for name in POLYTOPES {
        let p = polytope(name);
        let nf = p.normal_fan().unwrap();
        let h = ok(hirzebruch_polynomial(&nf.fan, &p.divisor()), name)?;
        let whole = PolytopalSubcomplex::whole(&p);
        let expected = weighted_relint_sum(&p, &whole);
        ensure(h.polynomial == expected, || {
            format!("{name}: {} vs {expected}", h.polynomial)
        })?;
        let table = hirzebruch_polynomial_combinatorial(&p, &whole);
        ensure(h.per_p == table.per_p, || {
            format!("{name}: per-p table differs")
        })?;
    }
    Ok(format!("{} polytopes", POLYTOPES.len()))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 11] = [
        ("chi_y cross-path", c1_chi_y),
        ("P(1,1,m) closed forms", c2_weighted_planes),
        ("Ehrhart via classes", c3_ehrhart),
        ("weighted counting", c4_weighted_counting),
        ("mock decomposition", c5_decomposition),
        ("specializations", c6_specializations),
        ("dualities", c7_dualities),
        ("L-class orbit sums", c8_l_class_sums),
        ("Pick formulas", c9_pick),
        ("normalization divisibility", c10_normalization),
        ("Hirzebruch polynomial", c11_hirzebruch_polynomial),
    ];
    let mut failed = 0;
    for (i, (title, run)) in criteria.iter().enumerate() {
        let outcome =
            catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {:>2} {title}: PASS ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} {title}: FAIL ({why})", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
