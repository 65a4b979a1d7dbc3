//! JSON formats for fans, polytopes, subcomplexes and cycle classes.
//!
//! Integers are written as JSON numbers when they fit in an `i64` and as
//! decimal strings otherwise; both forms are accepted on input.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fan::{ConeId, ConeSubset, Fan};
use crate::intersect::CycleClass;
use crate::lattice::IntVector;
use crate::polytope::{LatticePolytope, PolytopalSubcomplex};
use crate::scalars::{format_rational, Int, Rational, YRational};

pub(crate) fn ser_int<S: Serializer>(n: &Int, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

pub(crate) fn ser_int_vector<S: Serializer>(
    v: &IntVector,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.dim()))?;
    for x in v.iter() {
        seq.serialize_element(&JsonInt::from(x))?;
    }
    seq.end()
}

/// An integer as it appears in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Big(String),
}

impl JsonInt {
    pub fn to_int(&self) -> Result<Int> {
        match self {
            JsonInt::Small(n) => Ok(Int::from(*n)),
            JsonInt::Big(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("'{s}' is not an integer"))),
        }
    }
}

impl From<&Int> for JsonInt {
    fn from(n: &Int) -> Self {
        match n.to_i64() {
            Some(v) => JsonInt::Small(v),
            None => JsonInt::Big(n.to_string()),
        }
    }
}

fn to_vectors(rows: &[Vec<JsonInt>]) -> Result<Vec<IntVector>> {
    rows.iter()
        .map(|r| {
            Ok(IntVector(
                r.iter().map(JsonInt::to_int).collect::<Result<_>>()?,
            ))
        })
        .collect()
}

fn from_vectors(vs: &[IntVector]) -> Vec<Vec<JsonInt>> {
    vs.iter()
        .map(|v| v.iter().map(JsonInt::from).collect())
        .collect()
}

fn parse_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable value")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FanJson {
    pub lattice_rank: usize,
    pub rays: Vec<Vec<JsonInt>>,
    pub max_cones: Vec<Vec<usize>>,
}

impl FanJson {
    pub fn from_fan(fan: &Fan) -> Self {
        FanJson {
            lattice_rank: fan.rank(),
            rays: from_vectors(fan.rays()),
            max_cones: fan
                .maximal_cones()
                .iter()
                .map(|&c| fan.cone(c).rays.clone())
                .collect(),
        }
    }

    pub fn to_fan(&self) -> Result<Fan> {
        Fan::new(
            self.lattice_rank,
            to_vectors(&self.rays)?,
            self.max_cones.clone(),
        )
    }
}

pub fn parse_fan(text: &str) -> Result<Fan> {
    parse_json::<FanJson>(text)?.to_fan()
}

pub fn fan_to_json(fan: &Fan) -> String {
    to_json(&FanJson::from_fan(fan))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeJson {
    pub vertices: Vec<Vec<JsonInt>>,
}

pub fn parse_polytope(text: &str) -> Result<LatticePolytope> {
    let p: PolytopeJson = parse_json(text)?;
    LatticePolytope::new(to_vectors(&p.vertices)?)
}

pub fn polytope_to_json(p: &LatticePolytope) -> String {
    to_json(&PolytopeJson {
        vertices: from_vectors(p.vertices()),
    })
}

/// A subcomplex: listed faces (by vertex indices) with all their faces, or
/// the boundary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SubcomplexJson {
    Faces { faces: Vec<Vec<usize>> },
    Boundary { boundary: bool },
}

pub fn parse_subcomplex(text: &str, p: &LatticePolytope) -> Result<PolytopalSubcomplex> {
    match parse_json::<SubcomplexJson>(text)? {
        SubcomplexJson::Boundary { boundary: true } => Ok(PolytopalSubcomplex::boundary(p)),
        SubcomplexJson::Boundary { boundary: false } => Ok(PolytopalSubcomplex::whole(p)),
        SubcomplexJson::Faces { faces } => {
            let mut ids = Vec::new();
            for f in faces {
                let mut vs = f.clone();
                vs.sort_unstable();
                vs.dedup();
                let q = p.face_with_vertices(&vs).ok_or_else(|| {
                    Error::InvalidInput(format!("vertices {f:?} do not span a face"))
                })?;
                ids.push(q);
            }
            PolytopalSubcomplex::generated_by(p, ids)
        }
    }
}

pub fn subcomplex_to_json(p: &LatticePolytope, s: &PolytopalSubcomplex) -> String {
    to_json(&SubcomplexJson::Faces {
        faces: s.iter().map(|q| p.face(q).vertices.clone()).collect(),
    })
}

/// A star-closed set of cones, each given by its ray indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeSubsetJson {
    pub cones: Vec<Vec<usize>>,
}

pub fn parse_cone_subset(text: &str, fan: &Fan) -> Result<ConeSubset> {
    let json: ConeSubsetJson = parse_json(text)?;
    let mut ids = Vec::with_capacity(json.cones.len());
    for c in &json.cones {
        let mut rays = c.clone();
        rays.sort_unstable();
        rays.dedup();
        ids.push(
            fan.cone_id(&rays)
                .ok_or_else(|| Error::InvalidInput(format!("{c:?} is not a cone of the fan")))?,
        );
    }
    fan.star_closed_subset(ids)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleEntry {
    pub cone: Vec<usize>,
    pub orbit_dim: usize,
    pub coefficient: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CycleReport {
    pub kind: String,
    pub normalized: bool,
    pub y: Option<String>,
    pub cycle: Vec<CycleEntry>,
}

/// Entries in cone order, zero coefficients omitted.
pub fn cycle_entries(fan: &Fan, c: &CycleClass) -> Vec<CycleEntry> {
    c.terms()
        .map(|(s, v)| CycleEntry {
            cone: fan.cone(s).rays.clone(),
            orbit_dim: fan.orbit_dim(s),
            coefficient: v.to_string(),
        })
        .collect()
}

pub fn cycle_from_entries(fan: &Fan, entries: &[CycleEntry]) -> Result<CycleClass> {
    let mut c = CycleClass::zero();
    for e in entries {
        let mut rays = e.cone.clone();
        rays.sort_unstable();
        let sigma: ConeId = fan
            .cone_id(&rays)
            .ok_or_else(|| Error::InvalidInput(format!("{:?} is not a cone of the fan", e.cone)))?;
        if fan.orbit_dim(sigma) != e.orbit_dim {
            return Err(Error::InvalidInput(format!(
                "cone {:?} has orbit dimension {}",
                e.cone,
                fan.orbit_dim(sigma)
            )));
        }
        let v: YRational = e.coefficient.parse()?;
        c.add_term(sigma, &v);
    }
    Ok(c)
}

impl CycleReport {
    pub fn new(
        fan: &Fan,
        kind: &str,
        normalized: bool,
        y: Option<&Rational>,
        c: &CycleClass,
    ) -> Self {
        CycleReport {
            kind: kind.to_string(),
            normalized,
            y: y.map(format_rational),
            cycle: cycle_entries(fan, c),
        }
    }

    pub fn to_json(&self) -> String {
        to_json(self)
    }

    pub fn parse(text: &str) -> Result<Self> {
        parse_json(text)
    }

    pub fn class(&self, fan: &Fan) -> Result<CycleClass> {
        cycle_from_entries(fan, &self.cycle)
    }
}
