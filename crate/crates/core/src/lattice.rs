//! Integer lattices: Smith and Hermite normal forms, saturation, quotient
//! maps, fundamental parallelotopes and dual bases.

use std::fmt;
use std::ops::Deref;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalars::{Int, Rational};

/// A vector in `Z^d`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVector(pub Vec<Int>);

impl IntVector {
    pub fn from_i64s(v: &[i64]) -> Self {
        IntVector(v.iter().map(|&x| Int::from(x)).collect())
    }

    pub fn zero(d: usize) -> Self {
        IntVector(vec![Int::zero(); d])
    }

    pub fn unit(d: usize, i: usize) -> Self {
        let mut v = Self::zero(d);
        v.0[i] = Int::one();
        v
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &IntVector) -> Int {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|x| x.is_zero())
    }

    /// Gcd of the entries (zero for the zero vector).
    pub fn content(&self) -> Int {
        self.0.iter().fold(Int::zero(), |g, x| g.gcd(x))
    }

    pub fn is_primitive(&self) -> bool {
        self.content().is_one()
    }

    /// The primitive vector on the same ray. The zero vector is returned as is.
    pub fn primitive(&self) -> IntVector {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        IntVector(self.0.iter().map(|x| x / &g).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &IntVector) -> IntVector {
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: &Int) -> IntVector {
        IntVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|a| -a).collect())
    }

    pub fn to_rational(&self) -> Vec<Rational> {
        self.0
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect()
    }
}

impl Deref for IntVector {
    type Target = [Int];
    fn deref(&self) -> &[Int] {
        &self.0
    }
}

impl fmt::Debug for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A dense integer matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<Int>>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![vec![Int::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = Int::one();
        }
        m
    }

    pub fn from_rows(rows: &[IntVector], cols: usize) -> Self {
        IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.iter().map(|r| r.0.clone()).collect(),
        }
    }

    /// The `rows x vectors.len()` matrix whose columns are `vectors`.
    pub fn from_columns(vectors: &[IntVector], rows: usize) -> Self {
        let mut m = Self::zeros(rows, vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            for i in 0..rows {
                m.data[i][j] = v.0[i].clone();
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Int {
        &self.data[i][j]
    }

    pub fn row(&self, i: usize) -> IntVector {
        IntVector(self.data[i].clone())
    }

    pub fn column(&self, j: usize) -> IntVector {
        IntVector(self.data.iter().map(|r| r[j].clone()).collect())
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.data[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out.data[i][j] += &self.data[i][k] * &other.data[k][j];
                }
            }
        }
        out
    }

    pub fn to_rational_rows(&self) -> Vec<Vec<Rational>> {
        linalg::to_rational_rows(&self.data)
    }

    pub fn rank(&self) -> usize {
        linalg::rank(&self.to_rational_rows())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        self.data.swap(a, b);
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for r in &mut self.data {
            r.swap(a, b);
        }
    }

    /// row[dst] += k * row[src]
    fn add_row(&mut self, dst: usize, src: usize, k: &Int) {
        for j in 0..self.cols {
            let t = &self.data[src][j] * k;
            self.data[dst][j] += t;
        }
    }

    /// col[dst] += k * col[src]
    fn add_col(&mut self, dst: usize, src: usize, k: &Int) {
        for r in &mut self.data {
            let t = &r[src] * k;
            r[dst] += t;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.data[i] {
            *x = -&*x;
        }
    }

    fn negate_col(&mut self, j: usize) {
        for r in &mut self.data {
            r[j] = -&r[j];
        }
    }
}

/// `u * a * v = d` with `d` diagonal, nonnegative, each entry dividing the
/// next, and `u`, `v` unimodular. `u_inv` is the inverse of `u`.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub u_inv: IntMatrix,
    pub v: IntMatrix,
}

impl SmithForm {
    pub fn diagonal(&self) -> Vec<Int> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.data[i][i].clone())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.diagonal().iter().filter(|x| !x.is_zero()).count()
    }
}

/// Smith normal form with deterministic pivoting: the pivot is always the
/// entry of least absolute value in the remaining block, ties broken by
/// position in row-major order.
pub fn smith_normal_form(a: &IntMatrix) -> SmithForm {
    let (r, c) = (a.rows, a.cols);
    let mut d = a.clone();
    let mut u = IntMatrix::identity(r);
    let mut u_inv = IntMatrix::identity(r);
    let mut v = IntMatrix::identity(c);

    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    let x = &d.data[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.abs() < d.data[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return SmithForm { d, u, u_inv, v };
            };
            if pi != t {
                d.swap_rows(t, pi);
                u.swap_rows(t, pi);
                u_inv.swap_cols(t, pi);
            }
            if pj != t {
                d.swap_cols(t, pj);
                v.swap_cols(t, pj);
            }
            let p = d.data[t][t].clone();
            let mut clean = true;
            for i in t + 1..r {
                let q = d.data[i][t].div_floor(&p);
                if !q.is_zero() {
                    let nq = -&q;
                    d.add_row(i, t, &nq);
                    u.add_row(i, t, &nq);
                    u_inv.add_col(t, i, &q);
                }
                clean &= d.data[i][t].is_zero();
            }
            for j in t + 1..c {
                let q = d.data[t][j].div_floor(&p);
                if !q.is_zero() {
                    let nq = -&q;
                    d.add_col(j, t, &nq);
                    v.add_col(j, t, &nq);
                }
                clean &= d.data[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let bad = (t + 1..r)
                .flat_map(|i| (t + 1..c).map(move |j| (i, j)))
                .find(|&(i, j)| !d.data[i][j].is_multiple_of(&p));
            match bad {
                Some((i, _)) => {
                    let one = Int::one();
                    d.add_row(t, i, &one);
                    u.add_row(t, i, &one);
                    u_inv.add_col(i, t, &-one);
                }
                None => break,
            }
        }
        if d.data[t][t].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
            u_inv.negate_col(t);
        }
    }
    SmithForm { d, u, u_inv, v }
}

/// Hermite normal form of the row span of `vectors`: echelon rows with
/// positive pivots and entries above each pivot reduced into `[0, pivot)`.
/// Zero rows are dropped.
pub fn hermite_rows(vectors: &[IntVector]) -> Vec<IntVector> {
    let mut rows: Vec<Vec<Int>> = vectors.iter().map(|v| v.0.clone()).collect();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        loop {
            let pick = (r..rows.len())
                .filter(|&i| !rows[i][c].is_zero())
                .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()).then(a.cmp(&b)));
            let Some(p) = pick else { break };
            rows.swap(r, p);
            let mut done = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = rows[i][c].div_floor(&rows[r][c]);
                for j in 0..cols {
                    let t = &q * &rows[r][j];
                    rows[i][j] -= t;
                }
                done &= rows[i][c].is_zero();
            }
            if done {
                break;
            }
        }
        if rows[r][c].is_zero() {
            continue;
        }
        if rows[r][c].is_negative() {
            for x in &mut rows[r] {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = rows[i][c].div_floor(&rows[r][c]);
            if !q.is_zero() {
                for j in 0..cols {
                    let t = &q * &rows[r][j];
                    rows[i][j] -= t;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows.into_iter().map(IntVector).collect()
}

/// A `Z`-basis of `span_R(vectors) ∩ Z^d` in Hermite normal form.
pub fn saturation_basis(vectors: &[IntVector], d: usize) -> Vec<IntVector> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let snf = smith_normal_form(&IntMatrix::from_columns(vectors, d));
    let rank = snf.rank();
    let basis: Vec<IntVector> = (0..rank).map(|j| snf.u_inv.column(j)).collect();
    hermite_rows(&basis)
}

/// The projection `Z^d -> Z^d / K` for a saturated sublattice `K`, together
/// with a section.
///
/// `projection` has one row per quotient coordinate; `section[i]` is a lattice
/// vector mapping to the `i`-th unit vector. The first nonzero entry of every
/// projection row is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientMap {
    pub projection: Vec<IntVector>,
    pub section: Vec<IntVector>,
}

impl QuotientMap {
    pub fn quotient_rank(&self) -> usize {
        self.projection.len()
    }

    pub fn project(&self, v: &IntVector) -> IntVector {
        IntVector(self.projection.iter().map(|row| row.dot(v)).collect())
    }
}

pub fn quotient_map(kernel: &[IntVector], d: usize) -> Result<QuotientMap> {
    if kernel.is_empty() {
        return Ok(QuotientMap {
            projection: (0..d).map(|i| IntVector::unit(d, i)).collect(),
            section: (0..d).map(|i| IntVector::unit(d, i)).collect(),
        });
    }
    let k = kernel.len();
    let snf = smith_normal_form(&IntMatrix::from_columns(kernel, d));
    let diag = snf.diagonal();
    if diag.iter().any(|x| x.is_zero()) || diag.len() < k {
        return Err(Error::DependentGenerators);
    }
    if diag.iter().any(|x| !x.is_one()) {
        return Err(Error::NotSaturated);
    }
    let mut projection = Vec::new();
    let mut section = Vec::new();
    for i in k..d {
        let mut row = snf.u.row(i);
        let mut col = snf.u_inv.column(i);
        if row
            .iter()
            .find(|x| !x.is_zero())
            .is_some_and(|x| x.is_negative())
        {
            row = row.neg();
            col = col.neg();
        }
        projection.push(row);
        section.push(col);
    }
    Ok(QuotientMap {
        projection,
        section,
    })
}

/// A point of the half-open parallelotope `{sum lambda_i u_i : 0 <= lambda_i < 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelotopePoint {
    pub point: IntVector,
    pub lambda: Vec<Rational>,
}

impl ParallelotopePoint {
    /// True when every coordinate is strictly positive.
    pub fn is_interior(&self) -> bool {
        self.lambda.iter().all(|l| l.is_positive())
    }

    pub fn is_origin(&self) -> bool {
        self.lambda.iter().all(|l| l.is_zero())
    }
}

/// Lattice points of the half-open fundamental parallelotope of linearly
/// independent generators, sorted lexicographically by coordinates.
pub fn parallelotope_points(gens: &[IntVector], d: usize) -> Result<Vec<ParallelotopePoint>> {
    let k = gens.len();
    if k == 0 {
        return Ok(vec![ParallelotopePoint {
            point: IntVector::zero(d),
            lambda: Vec::new(),
        }]);
    }
    let a = IntMatrix::from_columns(gens, d);
    let transposed: Vec<Vec<Rational>> = gens.iter().map(|g| g.to_rational()).collect();
    let (_, pivot_rows) = linalg::row_echelon(&transposed);
    if pivot_rows.len() < k {
        return Err(Error::DependentGenerators);
    }
    let square: Vec<Vec<Rational>> = pivot_rows
        .iter()
        .map(|&i| {
            (0..k)
                .map(|j| Rational::from_integer(a.data[i][j].clone()))
                .collect()
        })
        .collect();
    let inv = linalg::inverse(&square).ok_or(Error::DependentGenerators)?;

    let lo: Vec<Int> = (0..d)
        .map(|c| gens.iter().map(|g| g.0[c].clone().min(Int::zero())).sum())
        .collect();
    let hi: Vec<Int> = (0..d)
        .map(|c| gens.iter().map(|g| g.0[c].clone().max(Int::zero())).sum())
        .collect();

    let mut out = Vec::new();
    let mut cur = lo.clone();
    loop {
        let n = IntVector(cur.clone());
        let sel: Vec<Rational> = pivot_rows
            .iter()
            .map(|&i| Rational::from_integer(n.0[i].clone()))
            .collect();
        let lambda: Vec<Rational> = inv
            .iter()
            .map(|row| row.iter().zip(&sel).map(|(a, b)| a * b).sum())
            .collect();
        if lambda
            .iter()
            .all(|l| !l.is_negative() && *l < Rational::one())
        {
            let recon: Vec<Rational> = (0..d)
                .map(|c| {
                    gens.iter()
                        .zip(&lambda)
                        .map(|(g, l)| l * Rational::from_integer(g.0[c].clone()))
                        .sum()
                })
                .collect();
            if recon == n.to_rational() {
                out.push(ParallelotopePoint { point: n, lambda });
            }
        }
        let mut c = d;
        loop {
            if c == 0 {
                return Ok(out);
            }
            c -= 1;
            if cur[c] < hi[c] {
                cur[c] += 1;
                break;
            }
            cur[c] = lo[c].clone();
        }
    }
}

/// The dual basis of a simplicial cone's generators in the dual of the
/// saturated lattice they span.
///
/// `duals[j]` is the primitive functional (in coordinates of `saturation`)
/// that vanishes on every generator except the `j`-th, where it takes the
/// positive value `pairings[j]`.
#[derive(Clone, Debug)]
pub struct DualBasis {
    pub saturation: Vec<IntVector>,
    pub duals: Vec<IntVector>,
    pub pairings: Vec<Int>,
    ambient: usize,
}

impl DualBasis {
    pub fn new(gens: &[IntVector], d: usize) -> Result<Self> {
        let k = gens.len();
        let saturation = saturation_basis(gens, d);
        if saturation.len() < k {
            return Err(Error::DependentGenerators);
        }
        let mut basis = DualBasis {
            saturation,
            duals: Vec::new(),
            pairings: Vec::new(),
            ambient: d,
        };
        let coords: Vec<Vec<Rational>> = gens
            .iter()
            .map(|g| {
                basis.coordinates(g).map(|c| {
                    c.iter()
                        .map(|x| Rational::from_integer(x.clone()))
                        .collect()
                })
            })
            .collect::<Option<_>>()
            .ok_or(Error::DependentGenerators)?;
        // Columns of `c` are generator coordinates; rows of its inverse are the duals.
        let c: Vec<Vec<Rational>> = (0..k)
            .map(|i| (0..k).map(|j| coords[j][i].clone()).collect())
            .collect();
        let inv = linalg::inverse(&c).ok_or(Error::DependentGenerators)?;
        for (j, row) in inv.iter().enumerate() {
            let lcm = row.iter().fold(Int::one(), |acc, x| acc.lcm(x.denom()));
            let m = IntVector(
                row.iter()
                    .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
                    .collect(),
            )
            .primitive();
            let pairing: Int = m
                .iter()
                .zip(&coords[j])
                .map(|(a, b)| Rational::from_integer(a.clone()) * b)
                .sum::<Rational>()
                .to_integer();
            let (m, pairing) = if pairing.is_negative() {
                (m.neg(), -pairing)
            } else {
                (m, pairing)
            };
            basis.duals.push(m);
            basis.pairings.push(pairing);
        }
        Ok(basis)
    }

    /// Integer coordinates of `n` in the saturation basis, if `n` lies in it.
    pub fn coordinates(&self, n: &IntVector) -> Option<Vec<Int>> {
        if self.saturation.is_empty() {
            return n.is_zero().then(Vec::new);
        }
        let a: Vec<Vec<Rational>> = (0..self.ambient)
            .map(|i| {
                self.saturation
                    .iter()
                    .map(|s| Rational::from_integer(s.0[i].clone()))
                    .collect()
            })
            .collect();
        let x = linalg::solve(&a, &n.to_rational())?;
        x.iter()
            .all(|v| v.is_integer())
            .then(|| x.iter().map(|v| v.to_integer()).collect())
    }

    /// `<m_j, n>` for a lattice vector `n` in the span.
    pub fn evaluate(&self, j: usize, n: &IntVector) -> Option<Int> {
        let c = self.coordinates(n)?;
        Some(self.duals[j].iter().zip(&c).map(|(a, b)| a * b).sum())
    }
}

/// A normal vector to the hyperplane spanned by `d - 1` independent vectors.
pub fn hyperplane_normal(vectors: &[IntVector], d: usize) -> IntVector {
    IntVector(
        (0..d)
            .map(|i| {
                let minor: Vec<Vec<Rational>> = vectors
                    .iter()
                    .map(|v| {
                        (0..d)
                            .filter(|&j| j != i)
                            .map(|j| Rational::from_integer(v.0[j].clone()))
                            .collect()
                    })
                    .collect();
                let det = linalg::determinant(&minor).to_integer();
                if i % 2 == 0 {
                    det
                } else {
                    -det
                }
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;
    use proptest::prelude::*;

    fn v(x: &[i64]) -> IntVector {
        IntVector::from_i64s(x)
    }

    #[test]
    fn saturation_examples() {
        assert_eq!(
            saturation_basis(&[v(&[1, 0]), v(&[1, 2])], 2),
            vec![v(&[1, 0]), v(&[0, 1])]
        );
        assert_eq!(saturation_basis(&[v(&[2, 0])], 2), vec![v(&[1, 0])]);
        assert_eq!(saturation_basis(&[v(&[2, 4, 6])], 3), vec![v(&[1, 2, 3])]);
    }

    #[test]
    fn quotient_examples() {
        let q = quotient_map(&[v(&[0, 1])], 2).unwrap();
        assert_eq!(q.projection, vec![v(&[1, 0])]);
        assert_eq!(q.project(&v(&[3, 7])), v(&[3]));
        assert_eq!(quotient_map(&[v(&[0, 2])], 2), Err(Error::NotSaturated));
    }

    #[test]
    fn parallelotope_of_index_two_cone() {
        let pts = parallelotope_points(&[v(&[1, 0]), v(&[1, 2])], 2).unwrap();
        assert_eq!(pts.len(), 2);
        let other = pts.iter().find(|p| !p.is_origin()).unwrap();
        assert_eq!(other.point, v(&[1, 1]));
        assert_eq!(other.lambda, vec![rat(1, 2), rat(1, 2)]);
        assert!(other.is_interior());
    }

    #[test]
    fn dual_of_single_ray() {
        let b = DualBasis::new(&[v(&[2, 1])], 2).unwrap();
        assert_eq!(b.duals, vec![v(&[1])]);
        assert_eq!(b.pairings, vec![Int::from(1)]);
    }

    #[test]
    fn dual_of_index_three_cone() {
        let gens = [v(&[0, 1]), v(&[-3, -1])];
        let b = DualBasis::new(&gens, 2).unwrap();
        for j in 0..2 {
            for (i, g) in gens.iter().enumerate() {
                let val = b.evaluate(j, g).unwrap();
                if i == j {
                    assert_eq!(val, b.pairings[j]);
                } else {
                    assert!(val.is_zero());
                }
            }
        }
    }

    fn arb_matrix(r: usize, c: usize) -> impl Strategy<Value = IntMatrix> {
        prop::collection::vec(-6i64..7, r * c).prop_map(move |xs| {
            let rows: Vec<IntVector> = xs.chunks(c).map(v).collect();
            IntMatrix::from_rows(&rows, c)
        })
    }

    fn det_abs(m: &IntMatrix) -> Int {
        linalg::determinant(&m.to_rational_rows())
            .to_integer()
            .abs()
    }

    proptest! {
        #[test]
        fn smith_form_is_a_factorization(a in (1usize..4, 1usize..4).prop_flat_map(|(r, c)| arb_matrix(r, c))) {
            let s = smith_normal_form(&a);
            prop_assert_eq!(s.u.mul(&a).mul(&s.v), s.d.clone());
            prop_assert_eq!(s.u.mul(&s.u_inv), IntMatrix::identity(a.rows()));
            prop_assert_eq!(det_abs(&s.u), Int::one());
            prop_assert_eq!(det_abs(&s.v), Int::one());
            let diag = s.diagonal();
            for w in diag.windows(2) {
                prop_assert!(w[1].is_zero() || w[1].is_multiple_of(&w[0]));
            }
            for i in 0..s.d.rows() {
                for j in 0..s.d.cols() {
                    if i != j { prop_assert!(s.d.get(i, j).is_zero()); }
                }
            }
            prop_assert_eq!(s.rank(), a.rank());
        }

        #[test]
        fn parallelotope_size_is_index(a in arb_matrix(2, 3)) {
            let gens: Vec<IntVector> = (0..2).map(|i| a.row(i)).collect();
            prop_assume!(IntMatrix::from_rows(&gens, 3).rank() == 2);
            let pts = parallelotope_points(&gens, 3).unwrap();
            let index: Int = smith_normal_form(&IntMatrix::from_columns(&gens, 3)).diagonal().iter().product();
            prop_assert_eq!(Int::from(pts.len()), index);
            prop_assert_eq!(pts.iter().filter(|p| p.is_origin()).count(), 1);
        }

        #[test]
        fn quotient_section_splits(a in arb_matrix(1, 3)) {
            let gens = vec![a.row(0)];
            prop_assume!(!gens[0].is_zero());
            let sat = saturation_basis(&gens, 3);
            let q = quotient_map(&sat, 3).unwrap();
            for (i, s) in q.section.iter().enumerate() {
                prop_assert_eq!(q.project(s), IntVector::unit(2, i));
            }
            prop_assert!(q.project(&sat[0]).is_zero());
        }
    }
}
