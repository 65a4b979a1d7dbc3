#![allow(dead_code)]

use std::path::PathBuf;

use toric_classes::fan::Fan;
use toric_classes::io::{parse_fan, parse_polytope};
use toric_classes::polytope::LatticePolytope;

pub const FANS: [&str; 7] = ["p2", "p1xp1", "wps121", "t3", "t5", "cube3", "simplex3"];
pub const POLYTOPES: [&str; 9] = [
    "square",
    "square2",
    "triangle",
    "simplex3",
    "t2",
    "t3",
    "t5",
    "triangle2",
    "cube",
];

pub fn fixture_path(rel: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(rel)
}

pub fn fan(name: &str) -> Fan {
    let text = std::fs::read_to_string(fixture_path(&format!("fans/{name}.json"))).unwrap();
    parse_fan(&text).unwrap()
}

pub fn polytope(name: &str) -> LatticePolytope {
    let text = std::fs::read_to_string(fixture_path(&format!("polytopes/{name}.json"))).unwrap();
    parse_polytope(&text).unwrap()
}

/// Every complete fixture fan: the listed fans and the normal fans of the
/// listed polytopes.
pub fn complete_fans() -> Vec<(String, Fan)> {
    let mut out: Vec<(String, Fan)> = FANS.iter().map(|n| (n.to_string(), fan(n))).collect();
    for n in POLYTOPES {
        out.push((
            format!("normal fan of {n}"),
            polytope(n).normal_fan().unwrap().fan,
        ));
    }
    out
}

/// Half-space description `a . x <= b` of each polytope fixture, written
/// out by hand, for counting independently of the library.
pub fn inequalities(name: &str) -> Vec<(Vec<i64>, i64)> {
    let box2 = |k: i64| {
        vec![
            (vec![-1, 0], 0),
            (vec![0, -1], 0),
            (vec![1, 0], k),
            (vec![0, 1], k),
        ]
    };
    match name {
        "square" => box2(1),
        "square2" => box2(2),
        "triangle" => vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![1, 1], 1)],
        "triangle2" => vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![1, 1], 2)],
        "t2" | "t3" | "t5" => {
            let m: i64 = name[1..].parse().unwrap();
            vec![(vec![-1, 0], 0), (vec![0, -1], 0), (vec![m, 1], m)]
        }
        "simplex3" => vec![
            (vec![-1, 0, 0], 0),
            (vec![0, -1, 0], 0),
            (vec![0, 0, -1], 0),
            (vec![1, 1, 1], 1),
        ],
        "cube" => {
            let mut v = Vec::new();
            for i in 0..3 {
                let mut e = vec![0; 3];
                e[i] = 1;
                v.push((e.clone(), 1));
                e[i] = -1;
                v.push((e, 0));
            }
            v
        }
        _ => panic!("no inequalities for {name}"),
    }
}

/// `|lP ∩ Z^d|`, or the interior count when `strict`.
pub fn count_by_inequalities(name: &str, l: i64, strict: bool) -> i64 {
    let ineq = inequalities(name);
    let d = ineq[0].0.len();
    let bound = 5 * l.max(1);
    let mut count = 0;
    let mut x = vec![-bound; d];
    loop {
        let ok = ineq.iter().all(|(a, b)| {
            let s: i64 = a.iter().zip(&x).map(|(u, v)| u * v).sum();
            if strict {
                s < b * l
            } else {
                s <= b * l
            }
        });
        if ok {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == d {
                return count;
            }
            if x[i] < bound {
                x[i] += 1;
                break;
            }
            x[i] = -bound;
            i += 1;
        }
    }
}

/// The cone census `(number of cones of each dimension)` of a fan from its
/// maximal cones, independent of the library's face enumeration.
pub fn cone_census(f: &Fan) -> Vec<usize> {
    use std::collections::BTreeSet;
    let mut faces: BTreeSet<Vec<usize>> = BTreeSet::new();
    for &m in f.maximal_cones() {
        let rays = &f.cone(m).rays;
        for mask in 0u32..(1 << rays.len()) {
            faces.insert(
                rays.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, &r)| r)
                    .collect(),
            );
        }
    }
    let mut census = vec![0; f.rank() + 1];
    for c in faces {
        census[c.len()] += 1;
    }
    census
}

/// `sum_sigma (-1-y)^{dim O_sigma}` evaluated at an integer `y`.
pub fn chi_y_at(f: &Fan, y: i64) -> i64 {
    let census = cone_census(f);
    let d = f.rank();
    census
        .iter()
        .enumerate()
        .map(|(k, &n)| n as i64 * (-1 - y).pow((d - k) as u32))
        .sum()
}
