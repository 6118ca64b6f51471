//! Exact computations for left pre-Jacobi-Jordan algebras over the rationals:
//! axioms, representations, (anti)derivations, cohomology, linear deformations,
//! Nijenhuis and Rota-Baxter operators.

pub mod algebra;
pub mod catalog;
pub mod cli;
pub mod deformation;
pub mod cohomology;
pub mod derivation;
pub mod error;
pub mod io;
pub mod ratlinalg;
pub mod representation;

pub use error::{Error, Result};
