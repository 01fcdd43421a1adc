//! Centrosymmetric matrix algebras `S_n(R)` over exact rings.
//!
//! The crate builds the canonical f-basis and structure constants of
//! `S_n(R)`, and ships machine-checkable witnesses for its Frobenius
//! structure, its small-`n` presentations, the isomorphisms with matrix
//! algebras over `R[C_2]`, the Wedderburn splitting when 2 is invertible, and
//! its cellular and quasi-hereditary structure. All arithmetic is exact.

pub mod error;
pub mod linalg;
pub mod matrices;
pub mod rings;
pub mod censym;
pub mod report;
pub mod algebra;
pub mod frobenius;
pub mod structure;
pub mod cellular;
pub mod cli;

pub use error::{Error, Result};
pub use matrices::Matrix;
pub use rings::{Elem, RingElt, RingSpec};
