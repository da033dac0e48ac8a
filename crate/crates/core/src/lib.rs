//! Minimisation of genus one models given by (2,2)-forms, 3x3x3 cubes and
//! 2x2x2x2 hypercubes, together with the invariant theory they rely on.

pub mod constructions;
pub mod error;
pub mod exactnum;

pub use error::{Error, Result};
pub mod models;
pub mod invariants;
pub mod residue;
pub mod minimiser;
pub mod weierstrass;
