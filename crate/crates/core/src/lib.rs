//! Exact multigraded regularity for toric Cox rings.
//!
//! A [`ring::GradedRing`] fixes the grading group `ℤ^r`, the irrelevant
//! ideal `B` and the configuration `C`. On top of it:
//!
//! - [`cohomology`] computes `H^i_B` of shifted free modules exactly and
//!   extracts `reg(S)`;
//! - [`region`] stores regions as finitely generated `ℕC`-modules and
//!   converts between resolution degrees and regularity;
//! - [`resolution`] builds minimal resolutions of monomial ideals and checks
//!   syzygy degree boxes;
//! - [`coarsen`] handles single coarse gradings;
//! - [`family`] works with the decomposition of `B` along a fan.
//!
//! Arithmetic is exact throughout. Answers that cannot be certified are
//! returned as [`lattice::Decision::Unknown`], as upper bounds, or as
//! regions marked with the window they were checked in.
//!
//! ```
//! use multireg::cohomology::{Dim, LocalCohomology};
//! use multireg::lattice::DegreeVector;
//! use multireg::ring::catalog;
//!
//! let ring = catalog::projective_plane()?;
//! let eng = LocalCohomology::for_ring(&ring)?;
//! assert_eq!(eng.piece_dim(3, &DegreeVector::from([-4])), Dim::finite(3));
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod caps;
pub mod coarsen;
pub mod cohomology;
pub mod error;
pub mod family;
pub mod lattice;
pub mod linalg;
pub mod region;
pub mod resolution;
pub mod selftest;
pub mod ring;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/rings.md")]
    mod rings {}
    #[doc = include_str!("../../../book/src/cohomology.md")]
    mod cohomology {}
    #[doc = include_str!("../../../book/src/regions.md")]
    mod regions {}
    #[doc = include_str!("../../../book/src/resolutions.md")]
    mod resolutions {}
    #[doc = include_str!("../../../book/src/coarsening.md")]
    mod coarsening {}
    #[doc = include_str!("../../../book/src/families.md")]
    mod families {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
