//! Exact computation of nonsymmetric and interpolation Macdonald polynomials.
//!
//! The polynomials E_eta(z;q,t) and their interpolation analogues are built
//! recursively from 1 by Hecke-algebra switching operators and raising
//! operators, following a minimal-length operator word derived from the
//! target composition. On top of the two base families the crate derives
//! symmetric, antisymmetric and prescribed-symmetry Macdonald polynomials,
//! Hall-Littlewood and Schur polynomials, and Pieri-type expansion
//! coefficients, all over the exact field Q(q,t).

pub mod coeff;
pub mod compositions;
pub mod error;
pub mod families;
pub mod generator;
pub mod ops;
pub mod pieri;
pub mod poly;
pub mod verify;

pub use coeff::{QtPoly, QtRat};
pub use compositions::{Composition, GenerationPlan, Permutation};
pub use error::{Error, Result};
pub use families::PrescribedResult;
pub use generator::{Family, GenState, Generator};
pub use pieri::ExpansionTable;
pub use poly::MPoly;
