//! Characteristic classes of simplicial toric varieties, computed exactly,
//! and the lattice point counts they encode.

pub mod classes;
pub mod counting;
pub mod error;
pub mod fan;
pub mod intersect;
pub mod io;
pub mod lattice;
mod linalg;
pub mod polytope;
pub mod scalars;
pub mod series;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/scalars.md")]
    mod scalars {}
    #[doc = include_str!("../../../book/src/fans.md")]
    mod fans {}
    #[doc = include_str!("../../../book/src/intersection.md")]
    mod intersection {}
    #[doc = include_str!("../../../book/src/classes.md")]
    mod classes {}
    #[doc = include_str!("../../../book/src/counting.md")]
    mod counting {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
