//! Exact algebra of bounded chain complexes of finitely presented modules over
//! `Z` and `Z/m`.
//!
//! The crate decides null-homotopy (with witnesses), computes Hom complexes
//! and homotopy-category Hom groups, builds pullbacks and mapping cones, and
//! decides whether a complex `N` lies in the subprojectivity domain of a
//! complex `M` by three independent routes that cross-check each other.

pub mod complex;
pub mod document;
pub mod error;
pub mod homotopy;
pub mod linalg;
pub mod modules;
pub mod par;
pub mod ring;
pub mod subprojectivity;

pub use complex::{ChainMap, Complex};
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use modules::{ModuleMorphism, PresentedModule};
pub use ring::Ring;
