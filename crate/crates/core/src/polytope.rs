//! Full-dimensional lattice polytopes of dimension at most 3: facets, the
//! face lattice, normal fans and lattice-point counts.

use std::collections::{BTreeSet, HashMap};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fan::{ConeId, Fan};
use crate::intersect::DivisorClass;
use crate::lattice::{hyperplane_normal, IntMatrix, IntVector};
use crate::scalars::{Int, Rational};

/// A facet `{m in P : <m, normal> = -offset}` with `normal` the primitive
/// inward normal, so that `P = {m : <m, u_F> >= -a_F for all F}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Facet {
    #[serde(serialize_with = "crate::io::ser_int_vector")]
    pub normal: IntVector,
    #[serde(serialize_with = "crate::io::ser_int")]
    pub offset: Int,
    pub vertices: Vec<usize>,
}

/// A nonempty face, recorded by its vertices and the facets containing it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub vertices: Vec<usize>,
    pub facets: Vec<usize>,
    pub dim: usize,
}

/// Where to count lattice points.
#[derive(Clone, Copy, Debug)]
pub enum Region<'a> {
    Polytope,
    Interior,
    Face(usize),
    FaceInterior(usize),
    Subcomplex(&'a PolytopalSubcomplex),
}

#[derive(Clone, Debug)]
pub struct LatticePolytope {
    rank: usize,
    vertices: Vec<IntVector>,
    facets: Vec<Facet>,
    faces: Vec<Face>,
    by_facets: HashMap<Vec<usize>, usize>,
}

impl LatticePolytope {
    /// Builds a polytope from its vertex list. Every listed point must be a
    /// vertex of the convex hull.
    pub fn new(vertices: Vec<IntVector>) -> Result<Self> {
        let rank = vertices
            .first()
            .map(|v| v.dim())
            .ok_or(Error::NotFullDimensional)?;
        if vertices.iter().any(|v| v.dim() != rank) {
            return Err(Error::InvalidInput(
                "vertices have different lengths".into(),
            ));
        }
        if rank > 3 {
            return Err(Error::RankTooHigh { rank });
        }
        if rank == 0 {
            return Err(Error::NotFullDimensional);
        }
        if vertices.iter().collect::<BTreeSet<_>>().len() != vertices.len() {
            return Err(Error::InvalidInput("repeated vertex".into()));
        }
        let diffs: Vec<IntVector> = vertices[1..].iter().map(|v| v.sub(&vertices[0])).collect();
        if diffs.is_empty() || IntMatrix::from_rows(&diffs, rank).rank() < rank {
            return Err(Error::NotFullDimensional);
        }

        let facets = compute_facets(&vertices, rank);
        for (i, v) in vertices.iter().enumerate() {
            let tight: Vec<IntVector> = facets
                .iter()
                .filter(|f| f.normal.dot(v) == -&f.offset)
                .map(|f| f.normal.clone())
                .collect();
            if IntMatrix::from_rows(&tight, rank).rank() < rank {
                return Err(Error::InvalidInput(format!(
                    "point {i} is not a vertex of the convex hull"
                )));
            }
        }

        let mut sets: BTreeSet<Vec<usize>> = facets.iter().map(|f| f.vertices.clone()).collect();
        sets.insert((0..vertices.len()).collect());
        loop {
            let list: Vec<Vec<usize>> = sets.iter().cloned().collect();
            let mut added = false;
            for (i, a) in list.iter().enumerate() {
                for b in &list[i + 1..] {
                    let c: Vec<usize> = a.iter().copied().filter(|x| b.contains(x)).collect();
                    if !c.is_empty() && sets.insert(c) {
                        added = true;
                    }
                }
            }
            if !added {
                break;
            }
        }
        let mut faces: Vec<Face> = sets
            .into_iter()
            .map(|vs| {
                let facet_ids: Vec<usize> = facets
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| vs.iter().all(|v| f.vertices.contains(v)))
                    .map(|(i, _)| i)
                    .collect();
                let dim = if vs.len() == 1 {
                    0
                } else {
                    let d: Vec<IntVector> = vs[1..]
                        .iter()
                        .map(|&v| vertices[v].sub(&vertices[vs[0]]))
                        .collect();
                    IntMatrix::from_rows(&d, rank).rank()
                };
                Face {
                    vertices: vs,
                    facets: facet_ids,
                    dim,
                }
            })
            .collect();
        faces.sort_by(|a, b| a.dim.cmp(&b.dim).then_with(|| a.vertices.cmp(&b.vertices)));
        let by_facets = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.facets.clone(), i))
            .collect();
        Ok(LatticePolytope {
            rank,
            vertices,
            facets,
            faces,
            by_facets,
        })
    }

    pub fn from_i64(vertices: &[&[i64]]) -> Result<Self> {
        Self::new(vertices.iter().map(|v| IntVector::from_i64s(v)).collect())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn vertices(&self) -> &[IntVector] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// All nonempty faces, sorted by dimension then vertex list. The last
    /// entry is the polytope itself.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, id: usize) -> &Face {
        &self.faces[id]
    }

    /// Id of the face with exactly these vertices.
    pub fn face_with_vertices(&self, vertices: &[usize]) -> Option<usize> {
        let mut v = vertices.to_vec();
        v.sort_unstable();
        self.faces.iter().position(|f| f.vertices == v)
    }

    pub fn whole_face(&self) -> usize {
        self.faces.len() - 1
    }

    /// Whether every vertex lies on exactly `rank` facets.
    pub fn is_simple(&self) -> bool {
        self.faces
            .iter()
            .filter(|f| f.dim == 0)
            .all(|f| f.facets.len() == self.rank)
    }

    pub fn contains(&self, m: &IntVector, dilation: u64) -> bool {
        let l = Int::from(dilation);
        self.facets
            .iter()
            .all(|f| f.normal.dot(m) >= -(&f.offset * &l))
    }

    /// The face whose relative interior contains `m`, which must lie in `l * P`
    /// with `l >= 1`.
    fn carrier(&self, m: &IntVector, l: &Int) -> Option<usize> {
        let mut tight = Vec::new();
        for (i, f) in self.facets.iter().enumerate() {
            let v = f.normal.dot(m) + &f.offset * l;
            if v.is_negative() {
                return None;
            }
            if v.is_zero() {
                tight.push(i);
            }
        }
        self.by_facets.get(&tight).copied()
    }

    /// Number of lattice points of `l * P` in the relative interior of each
    /// face, indexed by face id. With `l = 0` every face contributes its
    /// single point.
    pub fn relint_counts(&self, dilation: u64) -> Vec<Int> {
        let mut counts = vec![Int::zero(); self.faces.len()];
        if dilation == 0 {
            return vec![Int::from(1); self.faces.len()];
        }
        let l = Int::from(dilation);
        let lo: Vec<Int> = (0..self.rank)
            .map(|c| self.vertices.iter().map(|v| &v.0[c] * &l).min().unwrap())
            .collect();
        let hi: Vec<Int> = (0..self.rank)
            .map(|c| self.vertices.iter().map(|v| &v.0[c] * &l).max().unwrap())
            .collect();
        let mut cur = lo.clone();
        loop {
            if let Some(q) = self.carrier(&IntVector(cur.clone()), &l) {
                counts[q] += 1;
            }
            let mut c = self.rank;
            loop {
                if c == 0 {
                    return counts;
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

    /// Lattice points of `l * P` in a region. With `l = 0` the dilate is a
    /// single point, counted once in every nonempty region.
    pub fn count_points(&self, region: Region<'_>, dilation: u64) -> Int {
        let relint = self.relint_counts(dilation);
        if dilation == 0 {
            return match region {
                Region::Subcomplex(s) if s.is_empty() => Int::zero(),
                _ => Int::from(1),
            };
        }
        let sum = |pred: &dyn Fn(usize) -> bool| -> Int {
            relint
                .iter()
                .enumerate()
                .filter(|(i, _)| pred(*i))
                .map(|(_, c)| c.clone())
                .sum()
        };
        match region {
            Region::Polytope => sum(&|_| true),
            Region::Interior => relint[self.whole_face()].clone(),
            Region::Face(q) => sum(&|i| self.is_face_of(i, q)),
            Region::FaceInterior(q) => relint[q].clone(),
            Region::Subcomplex(s) => sum(&|i| s.contains(i)),
        }
    }

    /// Whether face `a` is contained in face `b`.
    pub fn is_face_of(&self, a: usize, b: usize) -> bool {
        self.faces[a]
            .vertices
            .iter()
            .all(|v| self.faces[b].vertices.contains(v))
    }

    /// The inner normal fan, with rays in facet order, together with the
    /// cone `sigma_Q` of every face.
    pub fn normal_fan(&self) -> Result<NormalFan> {
        for f in self.faces.iter().filter(|f| f.dim == 0) {
            if f.facets.len() != self.rank {
                return Err(Error::NotSimple {
                    vertex: f.vertices[0],
                });
            }
        }
        let rays = self.facets.iter().map(|f| f.normal.clone()).collect();
        let max_cones = self
            .faces
            .iter()
            .filter(|f| f.dim == 0)
            .map(|f| f.facets.clone())
            .collect();
        let fan = Fan::new(self.rank, rays, max_cones)?;
        let face_cones = self
            .faces
            .iter()
            .map(|f| {
                fan.cone_id(&f.facets)
                    .expect("face cone belongs to the normal fan")
            })
            .collect();
        Ok(NormalFan { fan, face_cones })
    }

    /// The torus-invariant divisor `D_P = sum_F a_F D_F` on the normal fan.
    pub fn divisor(&self) -> DivisorClass {
        DivisorClass::new(
            self.facets
                .iter()
                .enumerate()
                .map(|(i, f)| (i, Rational::from_integer(f.offset.clone()))),
        )
    }
}

/// Convenience alias for [`LatticePolytope::divisor`].
pub fn polytope_divisor(p: &LatticePolytope) -> DivisorClass {
    p.divisor()
}

#[derive(Clone, Debug)]
pub struct NormalFan {
    pub fan: Fan,
    /// `face_cones[q]` is the cone of the normal fan dual to face `q`.
    pub face_cones: Vec<ConeId>,
}

/// A set of faces closed under taking faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopalSubcomplex {
    faces: BTreeSet<usize>,
}

impl PolytopalSubcomplex {
    /// The smallest subcomplex containing the given faces.
    pub fn generated_by(
        p: &LatticePolytope,
        faces: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut out = BTreeSet::new();
        for q in faces {
            if q >= p.faces().len() {
                return Err(Error::InvalidInput(format!("no face with id {q}")));
            }
            out.extend((0..p.faces().len()).filter(|&a| p.is_face_of(a, q)));
        }
        Ok(PolytopalSubcomplex { faces: out })
    }

    /// Checks that `faces` is already closed under taking faces.
    pub fn closed(p: &LatticePolytope, faces: impl IntoIterator<Item = usize>) -> Result<Self> {
        let faces: BTreeSet<usize> = faces.into_iter().collect();
        let closure = Self::generated_by(p, faces.iter().copied())?;
        if closure.faces != faces {
            let missing = closure.faces.difference(&faces).next().copied().unwrap();
            return Err(Error::InvalidInput(format!(
                "face with vertices {:?} is missing from the subcomplex",
                p.face(missing).vertices
            )));
        }
        Ok(closure)
    }

    pub fn whole(p: &LatticePolytope) -> Self {
        PolytopalSubcomplex {
            faces: (0..p.faces().len()).collect(),
        }
    }

    pub fn boundary(p: &LatticePolytope) -> Self {
        PolytopalSubcomplex {
            faces: (0..p.faces().len() - 1).collect(),
        }
    }

    /// A facet together with all of its faces.
    pub fn facet_closure(p: &LatticePolytope, facet: usize) -> Result<Self> {
        let f = p
            .facets()
            .get(facet)
            .ok_or_else(|| Error::InvalidInput(format!("no facet {facet}")))?;
        let q = p.face_with_vertices(&f.vertices).expect("facet is a face");
        Self::generated_by(p, [q])
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.faces.iter().copied()
    }

    pub fn contains(&self, q: usize) -> bool {
        self.faces.contains(&q)
    }

    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }
}

fn compute_facets(points: &[IntVector], d: usize) -> Vec<Facet> {
    let n = points.len();
    let mut seen: BTreeSet<IntVector> = BTreeSet::new();
    let mut facets = Vec::new();
    let mut combo: Vec<usize> = (0..d).collect();
    loop {
        let base = &points[combo[0]];
        let diffs: Vec<IntVector> = combo[1..].iter().map(|&i| points[i].sub(base)).collect();
        let normal = hyperplane_normal(&diffs, d).primitive();
        if !normal.is_zero() {
            let c = normal.dot(base);
            let values: Vec<Int> = points.iter().map(|p| normal.dot(p)).collect();
            let oriented = if values.iter().all(|v| *v >= c) {
                Some((normal.clone(), -c.clone()))
            } else if values.iter().all(|v| *v <= c) {
                Some((normal.neg(), c.clone()))
            } else {
                None
            };
            if let Some((u, a)) = oriented {
                if seen.insert(u.clone()) {
                    let vertices = (0..n).filter(|&i| u.dot(&points[i]) == -&a).collect();
                    facets.push(Facet {
                        normal: u,
                        offset: a,
                        vertices,
                    });
                }
            }
        }
        // next combination
        let mut i = d;
        loop {
            if i == 0 {
                facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));
                return facets;
            }
            i -= 1;
            if combo[i] < n - d + i {
                combo[i] += 1;
                for j in i + 1..d {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}
