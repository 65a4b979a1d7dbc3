//! Characteristic classes of simplicial toric varieties and their subsets.

mod identities;
pub(crate) mod lrr;
mod orbit;
mod tclass;

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fan::{ConeSubset, Fan};
use crate::intersect::CycleClass;
use crate::scalars::{format_rational, rat, Rational};

pub use identities::{verify_identities, IdentityCheck, IdentityReport};
pub use lrr::{
    correction_series, hirzebruch_class, hirzebruch_decomposed, mock_hirzebruch, normalize_class,
    todd_lrr, todd_omega,
};
pub use orbit::{chi_y_subset, orbit_classes_subset, orbit_closure_class};
pub use tclass::{
    alpha, correction_at_one, mock_l_class, mock_t_class, t_class, t_class_suite, TClassSuite,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassKind {
    ToddLRR,
    ToddOmega,
    HirzebruchUnnormalized,
    HirzebruchNormalized,
    MockHirzebruch,
    ChernEhler,
    ToddSubset,
    TClass,
    MockTClass,
}

impl ClassKind {
    pub const ALL: [ClassKind; 9] = [
        ClassKind::ToddLRR,
        ClassKind::ToddOmega,
        ClassKind::HirzebruchUnnormalized,
        ClassKind::HirzebruchNormalized,
        ClassKind::MockHirzebruch,
        ClassKind::ChernEhler,
        ClassKind::ToddSubset,
        ClassKind::TClass,
        ClassKind::MockTClass,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassKind::ToddLRR => "todd",
            ClassKind::ToddOmega => "todd-omega",
            ClassKind::HirzebruchUnnormalized => "hirzebruch",
            ClassKind::HirzebruchNormalized => "hirzebruch-normalized",
            ClassKind::MockHirzebruch => "mock",
            ClassKind::ChernEhler => "chern",
            ClassKind::ToddSubset => "todd-subset",
            ClassKind::TClass => "t-class",
            ClassKind::MockTClass => "mock-t-class",
        }
    }

    /// Whether the class depends on `y`.
    pub fn has_parameter(self) -> bool {
        matches!(
            self,
            ClassKind::HirzebruchUnnormalized
                | ClassKind::HirzebruchNormalized
                | ClassKind::MockHirzebruch
        )
    }

    pub fn is_normalized(self) -> bool {
        matches!(
            self,
            ClassKind::HirzebruchNormalized | ClassKind::MockHirzebruch | ClassKind::ChernEhler
        )
    }

    /// Whether the class can be restricted to a star-closed subset.
    pub fn accepts_subset(self) -> bool {
        matches!(
            self,
            ClassKind::HirzebruchUnnormalized
                | ClassKind::HirzebruchNormalized
                | ClassKind::ChernEhler
                | ClassKind::ToddSubset
        )
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClassKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClassKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown class kind '{s}'")))
    }
}

fn check_specialization(kind: ClassKind, y: &Rational) -> Result<()> {
    let fail = |reason: &str| {
        Err(Error::InvalidSpecialization {
            value: format_rational(y),
            reason: reason.into(),
        })
    };
    if !kind.has_parameter() {
        return fail("class has no y parameter");
    }
    if *y == rat(-1, 1) && !kind.is_normalized() {
        return fail("y = -1 needs a normalized class");
    }
    Ok(())
}

/// Computes a class, optionally restricted to `subset` and specialized at `y`.
pub fn compute_class(
    fan: &Fan,
    kind: ClassKind,
    y: Option<&Rational>,
    subset: Option<&ConeSubset>,
) -> Result<CycleClass> {
    if let Some(y) = y {
        check_specialization(kind, y)?;
    }
    if subset.is_some() && !kind.accepts_subset() {
        return Err(Error::InvalidInput(format!(
            "class kind '{kind}' does not take a subcomplex"
        )));
    }
    let all = fan.all_cones();
    let subset = subset.unwrap_or(&all);
    let whole = subset.len() == all.len();
    let class = match kind {
        ClassKind::ToddLRR => todd_lrr(fan)?,
        ClassKind::ToddOmega => todd_omega(fan)?,
        ClassKind::HirzebruchUnnormalized | ClassKind::HirzebruchNormalized => {
            let normalized = kind == ClassKind::HirzebruchNormalized;
            if whole {
                hirzebruch_class(fan, normalized)?
            } else {
                orbit_classes_subset(fan, subset, normalized)?
            }
        }
        ClassKind::MockHirzebruch => mock_hirzebruch(fan, None)?,
        ClassKind::ChernEhler => {
            orbit_classes_subset(fan, subset, true)?.specialize(&rat(-1, 1))?
        }
        ClassKind::ToddSubset => {
            orbit_classes_subset(fan, subset, false)?.specialize(&rat(0, 1))?
        }
        ClassKind::TClass => t_class(fan)?,
        ClassKind::MockTClass => mock_t_class(fan, None)?,
    };
    match y {
        Some(y) => class.specialize(y),
        None => Ok(class),
    }
}
