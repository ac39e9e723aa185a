//! Exact-arithmetic knot Floer homology for cable knots.
//!
//! The crate works with filtered chain complexes over the integers: finitely
//! many generators, each carrying a Maslov grading and an Alexander filtration
//! level, with an integer differential that drops the Maslov grading by one
//! and never increases the filtration.  From such a complex it computes
//! homology of filtration levels by Smith normal form, assembles knot Floer
//! homology tables of (2, 2n+1) and (p, pn +/- 1) cables from the structure
//! of the input complex, and cross-checks the results against Alexander
//! polynomial and symmetry identities.  Torus knot complexes for the (2, k)
//! family and for T(3, 7) are built in.

pub mod alexander;
pub mod cable;
pub mod complex;
pub mod homalg;
pub mod io;
pub mod render;
pub mod torus;
pub mod verify;

pub use alexander::LaurentPoly;
pub use cable::{CableParams, CableTable, TopGroups, ValidRange};
pub use complex::{Edge, FilteredComplex, Generator, HFKTable};
pub use homalg::{AbelianGroup, GradedGroup, IntMatrix};
