//! Simplicial fans: validation, cone multiplicities, the finite groups
//! attached to cones, completeness and star fans.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex};

use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{
    hyperplane_normal, parallelotope_points, quotient_map, saturation_basis, smith_normal_form,
    DualBasis, IntMatrix, IntVector,
};
use crate::linalg;
use crate::scalars::{CyclotomicScalar, Rational};

/// Index of a cone in [`Fan::cones`].
pub type ConeId = usize;

/// A root of unity `exp(2 pi i * power / order)` with `power / order` reduced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RootOfUnity {
    pub order: u64,
    pub power: u64,
}

impl RootOfUnity {
    /// The root `exp(2 pi i q)` for `q` in `[0, 1)`.
    pub fn from_fraction(q: &Rational) -> Self {
        let order = q.denom().to_u64().expect("root order fits in u64");
        let power = q
            .numer()
            .mod_floor(q.denom())
            .to_u64()
            .expect("power fits in u64");
        RootOfUnity { order, power }
    }

    pub fn is_one(&self) -> bool {
        self.power == 0
    }

    /// The root as an element of `Q(zeta_n)`; `n` must be a multiple of the order.
    pub fn to_scalar(&self, n: u64) -> CyclotomicScalar {
        assert_eq!(
            n % self.order,
            0,
            "order {} does not divide {n}",
            self.order
        );
        CyclotomicScalar::zeta_power(n, self.power * (n / self.order))
    }
}

impl fmt::Display for RootOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            write!(f, "1")
        } else {
            write!(f, "zeta_{}^{}", self.order, self.power)
        }
    }
}

/// An element `g` of the group `G_sigma`, given by its parallelotope
/// representative and the characters `a_rho(g)` for the rays of the cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupElement {
    pub representative: IntVector,
    /// `gamma_rho(g)` in `[0, 1)`, one per ray of the cone, in ray order.
    pub gamma: Vec<Rational>,
    pub characters: Vec<RootOfUnity>,
    /// True when no character is trivial.
    pub interior: bool,
}

/// The finite group `G_sigma = N_sigma / (lattice spanned by the rays)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeGroup {
    pub multiplicity: u64,
    pub elements: Vec<GroupElement>,
}

impl ConeGroup {
    pub fn interior_elements(&self) -> impl Iterator<Item = &GroupElement> {
        self.elements.iter().filter(|g| g.interior)
    }
}

#[derive(Clone, Debug)]
pub struct Cone {
    /// Sorted ray indices.
    pub rays: Vec<usize>,
    pub multiplicity: u64,
    pub group: ConeGroup,
}

impl Cone {
    pub fn dim(&self) -> usize {
        self.rays.len()
    }

    pub fn contains_ray(&self, rho: usize) -> bool {
        self.rays.binary_search(&rho).is_ok()
    }
}

pub(crate) type KernelCache = Mutex<HashMap<(Vec<usize>, ConeId), Arc<Vec<(ConeId, Rational)>>>>;

/// A simplicial fan in `N_R = R^d`, closed under faces.
///
/// Cones are stored sorted by dimension and then lexicographically by ray
/// indices, so the zero cone has id 0.
pub struct Fan {
    rank: usize,
    rays: Vec<IntVector>,
    cones: Vec<Cone>,
    index: HashMap<Vec<usize>, ConeId>,
    maximal: Vec<ConeId>,
    complete: bool,
    pub(crate) kernel_cache: KernelCache,
}

impl Clone for Fan {
    fn clone(&self) -> Self {
        Fan {
            rank: self.rank,
            rays: self.rays.clone(),
            cones: self.cones.clone(),
            index: self.index.clone(),
            maximal: self.maximal.clone(),
            complete: self.complete,
            kernel_cache: Mutex::new(HashMap::new()),
        }
    }
}

impl fmt::Debug for Fan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Fan")
            .field("rank", &self.rank)
            .field("rays", &self.rays)
            .field(
                "maximal",
                &self
                    .maximal
                    .iter()
                    .map(|&c| &self.cones[c].rays)
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

impl Fan {
    /// Validates the data and builds the fan generated by `max_cones`.
    pub fn new(rank: usize, rays: Vec<IntVector>, max_cones: Vec<Vec<usize>>) -> Result<Fan> {
        for (i, r) in rays.iter().enumerate() {
            if r.dim() != rank {
                return Err(Error::InvalidInput(format!(
                    "ray {i} has length {} but the lattice rank is {rank}",
                    r.dim()
                )));
            }
            if !r.is_primitive() {
                return Err(Error::NonPrimitiveRay { ray: i });
            }
        }
        let distinct: BTreeSet<&IntVector> = rays.iter().collect();
        if distinct.len() != rays.len() {
            return Err(Error::InvalidInput("repeated ray".into()));
        }

        let mut generators: Vec<Vec<usize>> = Vec::new();
        for cone in max_cones {
            let mut c = cone.clone();
            c.sort_unstable();
            c.dedup();
            if c.len() != cone.len() {
                return Err(Error::InvalidInput(format!("cone {cone:?} repeats a ray")));
            }
            if let Some(&bad) = c.iter().find(|&&i| i >= rays.len()) {
                return Err(Error::InvalidInput(format!(
                    "cone {cone:?} refers to missing ray {bad}"
                )));
            }
            let gens: Vec<IntVector> = c.iter().map(|&i| rays[i].clone()).collect();
            if IntMatrix::from_rows(&gens, rank).rank() < c.len() {
                return Err(Error::NotSimplicial { cone: c });
            }
            generators.push(c);
        }
        let used: BTreeSet<usize> = generators.iter().flatten().copied().collect();
        if let Some(unused) = (0..rays.len()).find(|i| !used.contains(i)) {
            return Err(Error::InvalidInput(format!(
                "ray {unused} does not belong to any cone"
            )));
        }

        let mut all: BTreeSet<Vec<usize>> = BTreeSet::new();
        all.insert(Vec::new());
        for g in &generators {
            for mask in 0u64..(1u64 << g.len()) {
                let face: Vec<usize> = g
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| mask >> j & 1 == 1)
                    .map(|(_, &r)| r)
                    .collect();
                all.insert(face);
            }
        }
        let mut sorted: Vec<Vec<usize>> = all.into_iter().collect();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

        let is_subset = |a: &[usize], b: &[usize]| a.iter().all(|x| b.binary_search(x).is_ok());
        let maximal_sets: Vec<&Vec<usize>> = sorted
            .iter()
            .filter(|c| !sorted.iter().any(|d| d.len() > c.len() && is_subset(c, d)))
            .collect();
        for (i, a) in maximal_sets.iter().enumerate() {
            for b in &maximal_sets[i + 1..] {
                if !meet_properly(&rays, rank, a, b)? {
                    return Err(Error::BadIntersection {
                        first: (*a).clone(),
                        second: (*b).clone(),
                    });
                }
            }
        }

        let mut cones = Vec::with_capacity(sorted.len());
        let mut index = HashMap::new();
        for (id, raylist) in sorted.iter().enumerate() {
            let gens: Vec<IntVector> = raylist.iter().map(|&i| rays[i].clone()).collect();
            let group = cone_group_data(&gens, rank)?;
            index.insert(raylist.clone(), id);
            cones.push(Cone {
                rays: raylist.clone(),
                multiplicity: group.multiplicity,
                group,
            });
        }
        let maximal = maximal_sets.iter().map(|c| index[*c]).collect();

        let mut fan = Fan {
            rank,
            rays,
            cones,
            index,
            maximal,
            complete: false,
            kernel_cache: Mutex::new(HashMap::new()),
        };
        fan.complete = fan.check_complete();
        Ok(fan)
    }

    /// Convenience constructor from small integer data.
    pub fn from_i64(rank: usize, rays: &[&[i64]], max_cones: &[&[usize]]) -> Result<Fan> {
        Fan::new(
            rank,
            rays.iter().map(|r| IntVector::from_i64s(r)).collect(),
            max_cones.iter().map(|c| c.to_vec()).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rays(&self) -> &[IntVector] {
        &self.rays
    }

    pub fn num_rays(&self) -> usize {
        self.rays.len()
    }

    pub fn cones(&self) -> &[Cone] {
        &self.cones
    }

    pub fn cone(&self, id: ConeId) -> &Cone {
        &self.cones[id]
    }

    pub fn cone_ids(&self) -> std::ops::Range<ConeId> {
        0..self.cones.len()
    }

    /// Looks up a cone by its rays (in any order).
    pub fn cone_id(&self, rays: &[usize]) -> Option<ConeId> {
        let mut key = rays.to_vec();
        key.sort_unstable();
        self.index.get(&key).copied()
    }

    pub fn zero_cone(&self) -> ConeId {
        0
    }

    pub fn maximal_cones(&self) -> &[ConeId] {
        &self.maximal
    }

    pub fn cones_of_dim(&self, k: usize) -> impl Iterator<Item = ConeId> + '_ {
        self.cone_ids().filter(move |&c| self.cones[c].dim() == k)
    }

    pub fn multiplicity(&self, id: ConeId) -> u64 {
        self.cones[id].multiplicity
    }

    pub fn group(&self, id: ConeId) -> &ConeGroup {
        &self.cones[id].group
    }

    /// Dimension of the torus orbit of a cone, `d - dim(sigma)`.
    pub fn orbit_dim(&self, id: ConeId) -> usize {
        self.rank - self.cones[id].dim()
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn is_smooth(&self) -> bool {
        self.cones.iter().all(|c| c.multiplicity == 1)
    }

    /// True when the rays do not span `N_R`.
    pub fn has_torus_factor(&self) -> bool {
        IntMatrix::from_rows(&self.rays, self.rank).rank() < self.rank
    }

    pub fn singular_cones(&self) -> impl Iterator<Item = ConeId> + '_ {
        self.cone_ids().filter(|&c| self.cones[c].multiplicity > 1)
    }

    /// Cones having `id` as a face (including `id` itself), in id order.
    pub fn star_cones(&self, id: ConeId) -> Vec<ConeId> {
        let rays = &self.cones[id].rays;
        self.cone_ids()
            .filter(|&c| rays.iter().all(|r| self.cones[c].contains_ray(*r)))
            .collect()
    }

    /// The cone spanned by `id` and one more ray, if it is in the fan.
    pub fn join_ray(&self, id: ConeId, rho: usize) -> Option<ConeId> {
        let cone = &self.cones[id];
        if cone.contains_ray(rho) {
            return None;
        }
        let mut key = cone.rays.clone();
        let pos = key.binary_search(&rho).unwrap_err();
        key.insert(pos, rho);
        self.index.get(&key).copied()
    }

    fn check_complete(&self) -> bool {
        let d = self.rank;
        if d == 0 {
            return true;
        }
        if self.maximal.iter().any(|&c| self.cones[c].dim() != d) {
            return false;
        }
        let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); self.maximal.len()];
        let position: HashMap<ConeId, usize> = self
            .maximal
            .iter()
            .enumerate()
            .map(|(i, &c)| (c, i))
            .collect();
        for ridge in self.cones_of_dim(d - 1) {
            let owners: Vec<ConeId> = self
                .maximal
                .iter()
                .copied()
                .filter(|&m| {
                    self.cones[ridge]
                        .rays
                        .iter()
                        .all(|r| self.cones[m].contains_ray(*r))
                })
                .collect();
            if owners.len() != 2 {
                return false;
            }
            let ridge_rays: Vec<IntVector> = self.cones[ridge]
                .rays
                .iter()
                .map(|&r| self.rays[r].clone())
                .collect();
            let normal = hyperplane_normal(&ridge_rays, d);
            let side = |m: ConeId| {
                let apex = self.cones[m]
                    .rays
                    .iter()
                    .find(|r| !self.cones[ridge].contains_ray(**r))
                    .unwrap();
                normal.dot(&self.rays[*apex]).signum()
            };
            if side(owners[0]) == side(owners[1]) {
                return false;
            }
            let (a, b) = (position[&owners[0]], position[&owners[1]]);
            adjacency[a].push(b);
            adjacency[b].push(a);
        }
        let mut seen = vec![false; self.maximal.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(i) = queue.pop_front() {
            for &j in &adjacency[i] {
                if !seen[j] {
                    seen[j] = true;
                    queue.push_back(j);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return false;
        }
        sample_directions(d).iter().all(|v| self.in_support(v))
    }

    /// Whether a lattice vector lies in the support of the fan.
    pub fn in_support(&self, v: &IntVector) -> bool {
        self.maximal.iter().any(|&m| {
            let cone = &self.cones[m];
            if cone.rays.is_empty() {
                return v.is_zero();
            }
            let a: Vec<Vec<Rational>> = (0..self.rank)
                .map(|i| {
                    cone.rays
                        .iter()
                        .map(|&r| Rational::from_integer(self.rays[r].0[i].clone()))
                        .collect()
                })
                .collect();
            match linalg::solve(&a, &v.to_rational()) {
                Some(x) => {
                    let recon: Vec<Rational> = (0..self.rank)
                        .map(|i| a[i].iter().zip(&x).map(|(p, q)| p * q).sum())
                        .collect();
                    recon == v.to_rational() && x.iter().all(|l| !l.is_negative())
                }
                None => false,
            }
        })
    }

    /// The fan `Star(sigma)` in `N / N_sigma`, whose toric variety is the
    /// orbit closure `V_sigma`.
    pub fn star_fan(&self, sigma: ConeId) -> Result<StarFan> {
        let d = self.rank;
        let cone = &self.cones[sigma];
        let gens: Vec<IntVector> = cone.rays.iter().map(|&r| self.rays[r].clone()).collect();
        let q = quotient_map(&saturation_basis(&gens, d), d)?;
        let adjacent: Vec<usize> = (0..self.rays.len())
            .filter(|&r| self.join_ray(sigma, r).is_some())
            .collect();
        let star_rays: Vec<IntVector> = adjacent
            .iter()
            .map(|&r| q.project(&self.rays[r]).primitive())
            .collect();
        let local = |r: usize| adjacent.binary_search(&r).expect("adjacent ray");
        let max_cones: Vec<Vec<usize>> = self
            .maximal
            .iter()
            .filter(|&&m| cone.rays.iter().all(|r| self.cones[m].contains_ray(*r)))
            .map(|&m| {
                self.cones[m]
                    .rays
                    .iter()
                    .filter(|r| !cone.contains_ray(**r))
                    .map(|&r| local(r))
                    .collect()
            })
            .collect();
        let fan = Fan::new(d - cone.dim(), star_rays, max_cones)?;
        let to_ambient = fan
            .cones
            .iter()
            .map(|c| {
                let mut rays: Vec<usize> = c.rays.iter().map(|&i| adjacent[i]).collect();
                rays.extend(cone.rays.iter().copied());
                self.cone_id(&rays)
                    .expect("star cone corresponds to an ambient cone")
            })
            .collect();
        Ok(StarFan {
            fan,
            to_ambient,
            center: sigma,
            adjacent_rays: adjacent,
        })
    }

    /// Validates that `ids` is closed under passing to cones containing a member.
    pub fn star_closed_subset(&self, ids: impl IntoIterator<Item = ConeId>) -> Result<ConeSubset> {
        let cones: BTreeSet<ConeId> = ids.into_iter().collect();
        if let Some(&bad) = cones.iter().find(|&&c| c >= self.cones.len()) {
            return Err(Error::InvalidInput(format!("no cone with id {bad}")));
        }
        for &c in &cones {
            for t in self.star_cones(c) {
                if !cones.contains(&t) {
                    return Err(Error::NotStarClosed {
                        member: self.cones[c].rays.clone(),
                        face: self.cones[t].rays.clone(),
                    });
                }
            }
        }
        Ok(ConeSubset { cones })
    }

    /// Every cone of the fan, as a star-closed subset.
    pub fn all_cones(&self) -> ConeSubset {
        ConeSubset {
            cones: self.cone_ids().collect(),
        }
    }

    pub fn report(&self) -> FanReport {
        let mut cone_counts = vec![0usize; self.rank + 1];
        for c in &self.cones {
            cone_counts[c.dim()] += 1;
        }
        FanReport {
            lattice_rank: self.rank,
            num_rays: self.rays.len(),
            cone_counts,
            simplicial: true,
            smooth: self.is_smooth(),
            complete: self.complete,
            torus_factor: self.has_torus_factor(),
            singular_cones: self
                .singular_cones()
                .map(|c| SingularCone {
                    rays: self.cones[c].rays.clone(),
                    multiplicity: self.cones[c].multiplicity,
                })
                .collect(),
        }
    }
}

/// `Star(sigma)` together with the correspondence of its cones to the cones
/// of the ambient fan containing `sigma`.
#[derive(Clone, Debug)]
pub struct StarFan {
    pub fan: Fan,
    /// Ambient cone id of each star cone.
    pub to_ambient: Vec<ConeId>,
    pub center: ConeId,
    /// Ambient index of each star ray.
    pub adjacent_rays: Vec<usize>,
}

/// A star-closed set of cones of a fan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeSubset {
    cones: BTreeSet<ConeId>,
}

impl ConeSubset {
    pub fn iter(&self) -> impl Iterator<Item = ConeId> + '_ {
        self.cones.iter().copied()
    }

    pub fn contains(&self, c: ConeId) -> bool {
        self.cones.contains(&c)
    }

    pub fn len(&self) -> usize {
        self.cones.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cones.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularCone {
    pub rays: Vec<usize>,
    pub multiplicity: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FanReport {
    pub lattice_rank: usize,
    pub num_rays: usize,
    /// Number of cones of each dimension.
    pub cone_counts: Vec<usize>,
    pub simplicial: bool,
    pub smooth: bool,
    pub complete: bool,
    pub torus_factor: bool,
    pub singular_cones: Vec<SingularCone>,
}

fn cone_group_data(gens: &[IntVector], d: usize) -> Result<ConeGroup> {
    if gens.is_empty() {
        let identity = GroupElement {
            representative: IntVector::zero(d),
            gamma: Vec::new(),
            characters: Vec::new(),
            interior: true,
        };
        return Ok(ConeGroup {
            multiplicity: 1,
            elements: vec![identity],
        });
    }
    let snf = smith_normal_form(&IntMatrix::from_columns(gens, d));
    let index: num_bigint::BigInt = snf.diagonal().iter().product();
    let multiplicity = index
        .to_u64()
        .ok_or_else(|| Error::InvalidInput("cone multiplicity too large".into()))?;
    let duals = DualBasis::new(gens, d)?;
    let points = parallelotope_points(gens, d)?;
    debug_assert_eq!(points.len() as u64, multiplicity);
    let mut elements = Vec::with_capacity(points.len());
    for p in points {
        let gamma: Vec<Rational> = (0..gens.len())
            .map(|j| {
                let num = duals
                    .evaluate(j, &p.point)
                    .expect("parallelotope point lies in N_sigma");
                Rational::new(num, duals.pairings[j].clone())
            })
            .collect();
        debug_assert_eq!(gamma, p.lambda);
        let characters: Vec<RootOfUnity> = gamma.iter().map(RootOfUnity::from_fraction).collect();
        let interior = characters.iter().all(|c| !c.is_one());
        elements.push(GroupElement {
            representative: p.point,
            gamma,
            characters,
            interior,
        });
    }
    Ok(ConeGroup {
        multiplicity,
        elements,
    })
}

fn sample_directions(d: usize) -> Vec<IntVector> {
    let mut out = Vec::new();
    for i in 0..d {
        out.push(IntVector::unit(d, i));
        out.push(IntVector::unit(d, i).neg());
        for j in i + 1..d {
            for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                let mut v = IntVector::zero(d);
                v.0[i] = si.into();
                v.0[j] = sj.into();
                out.push(v);
            }
        }
    }
    out
}

/// Whether two simplicial cones meet in their common face.
///
/// Modulo the span of the common rays, the remaining generators of each cone
/// stay independent, and the cones meet properly exactly when the two
/// projected cones share only the origin. That is tested by looking for a
/// circuit of `P ∪ -Q` whose coefficients all have one sign.
fn meet_properly(rays: &[IntVector], d: usize, a: &[usize], b: &[usize]) -> Result<bool> {
    let common: Vec<usize> = a.iter().copied().filter(|r| b.contains(r)).collect();
    let common_gens: Vec<IntVector> = common.iter().map(|&r| rays[r].clone()).collect();
    let q = quotient_map(&saturation_basis(&common_gens, d), d)?;
    let mut vectors: Vec<IntVector> = Vec::new();
    for &r in a.iter().filter(|r| !common.contains(r)) {
        vectors.push(q.project(&rays[r]));
    }
    for &r in b.iter().filter(|r| !common.contains(r)) {
        vectors.push(q.project(&rays[r]).neg());
    }
    let n = vectors.len();
    let e = q.quotient_rank();
    for mask in 1u64..(1u64 << n) {
        let subset: Vec<&IntVector> = (0..n)
            .filter(|j| mask >> j & 1 == 1)
            .map(|j| &vectors[j])
            .collect();
        if subset.len() > e + 1 {
            continue;
        }
        let m: Vec<Vec<Rational>> = (0..e)
            .map(|i| {
                subset
                    .iter()
                    .map(|v| Rational::from_integer(v.0[i].clone()))
                    .collect()
            })
            .collect();
        let kernel = if e == 0 {
            if subset.len() == 1 {
                vec![vec![Rational::one()]]
            } else {
                continue;
            }
        } else {
            linalg::nullspace(&m, subset.len())
        };
        if kernel.len() != 1 {
            continue;
        }
        let k = &kernel[0];
        if k.iter().all(|x| x.is_positive()) || k.iter().all(|x| x.is_negative()) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    fn p2() -> Fan {
        Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -1]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        )
        .unwrap()
    }

    #[test]
    fn projective_plane() {
        let f = p2();
        assert_eq!(f.cones().len(), 7);
        assert!(f.is_complete());
        assert!(f.is_smooth());
        assert!(!f.has_torus_factor());
    }

    #[test]
    fn weighted_plane_group() {
        let f = Fan::from_i64(
            2,
            &[&[1, 0], &[0, 1], &[-1, -2]],
            &[&[0, 1], &[1, 2], &[2, 0]],
        )
        .unwrap();
        let c = f.cone_id(&[0, 2]).unwrap();
        assert_eq!(f.multiplicity(c), 2);
        let g = f.group(c);
        assert_eq!(g.elements.len(), 2);
        let nontrivial: Vec<_> = g.interior_elements().collect();
        assert_eq!(nontrivial.len(), 1);
        assert_eq!(nontrivial[0].gamma, vec![rat(1, 2), rat(1, 2)]);
        assert!(nontrivial[0]
            .characters
            .iter()
            .all(|c| *c == RootOfUnity { order: 2, power: 1 }));
        assert!(f.is_complete());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            Fan::from_i64(2, &[&[2, 0]], &[&[0]]).unwrap_err(),
            Error::NonPrimitiveRay { ray: 0 }
        );
        let overlap = Fan::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1], &[1, 2]]);
        assert!(matches!(overlap, Err(Error::BadIntersection { .. })));
        let dependent = Fan::from_i64(2, &[&[1, 0], &[0, 1], &[1, 1]], &[&[0, 1, 2]]);
        assert!(matches!(dependent, Err(Error::NotSimplicial { .. })));
        let unused = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0]]);
        assert!(matches!(unused, Err(Error::InvalidInput(_))));
    }

    #[test]
    fn incomplete_fans() {
        let quadrant = Fan::from_i64(2, &[&[1, 0], &[0, 1]], &[&[0, 1]]).unwrap();
        assert!(!quadrant.is_complete());
        let line = Fan::from_i64(2, &[&[1, 0], &[-1, 0]], &[&[0], &[1]]).unwrap();
        assert!(!line.is_complete());
        assert!(line.has_torus_factor());
    }

    #[test]
    fn star_of_a_ray() {
        let f = p2();
        let s = f.star_fan(f.cone_id(&[0]).unwrap()).unwrap();
        assert_eq!(s.fan.rank(), 1);
        assert_eq!(s.fan.num_rays(), 2);
        assert!(s.fan.is_complete());
        assert_eq!(s.to_ambient[0], f.cone_id(&[0]).unwrap());
        let top = f.star_fan(f.cone_id(&[0, 1]).unwrap()).unwrap();
        assert_eq!(top.fan.rank(), 0);
        assert_eq!(top.fan.cones().len(), 1);
    }

    #[test]
    fn star_closure_witness() {
        let f = p2();
        let ray = f.cone_id(&[0]).unwrap();
        let err = f.star_closed_subset([ray]).unwrap_err();
        assert!(matches!(err, Error::NotStarClosed { .. }));
        let ok = f.star_closed_subset(f.star_cones(ray)).unwrap();
        assert_eq!(ok.len(), 3);
    }
}
