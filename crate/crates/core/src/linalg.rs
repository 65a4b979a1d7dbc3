//! Dense linear algebra over the rationals.

use num_traits::{One, Zero};

use crate::scalars::{Int, Rational};

/// Row-reduces a copy of `m` and returns (reduced matrix, pivot columns).
pub fn row_echelon(m: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut a = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for x in a[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in 0..cols {
                    let t = &f * &a[r][j];
                    a[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    row_echelon(m).1.len()
}

/// Solves `a x = b`, returning one solution if the system is consistent.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let cols = a.first().map_or(0, |r| r.len());
    let aug: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            row.iter()
                .cloned()
                .chain(std::iter::once(bi.clone()))
                .collect()
        })
        .collect();
    let (red, pivots) = row_echelon(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![Rational::zero(); cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = red[r][cols].clone();
    }
    Some(x)
}

/// Inverse of a square matrix, if invertible.
pub fn inverse(a: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = a.len();
    let aug: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            }));
            r
        })
        .collect();
    let (red, pivots) = row_echelon(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(red.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn determinant(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    let mut m = a.to_vec();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            m.swap(p, c);
            det = -det;
        }
        det *= &m[c][c];
        for i in c + 1..n {
            if !m[i][c].is_zero() {
                let f = &m[i][c] / &m[c][c];
                for j in c..n {
                    let t = &f * &m[c][j];
                    m[i][j] -= t;
                }
            }
        }
    }
    det
}

/// A basis of the right null space `{x : a x = 0}`.
pub fn nullspace(a: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let (red, pivots) = row_echelon(a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::one();
            for (r, &p) in pivots.iter().enumerate() {
                x[p] = -red[r][f].clone();
            }
            x
        })
        .collect()
}

pub fn to_rational_rows(rows: &[Vec<Int>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|x| Rational::from_integer(x.clone()))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn m(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect()
    }

    #[test]
    fn solves_and_inverts() {
        let a = m(&[&[2, 1], &[1, 3]]);
        let x = solve(&a, &[rat(3, 1), rat(4, 1)]).unwrap();
        assert_eq!(x, vec![rat(1, 1), rat(1, 1)]);
        let inv = inverse(&a).unwrap();
        assert_eq!(inv[0][0], rat(3, 5));
        assert_eq!(determinant(&a), rat(5, 1));
        assert_eq!(rank(&m(&[&[1, 2], &[2, 4]])), 1);
        assert!(solve(&m(&[&[1, 2], &[2, 4]]), &[rat(1, 1), rat(1, 1)]).is_none());
    }
}
