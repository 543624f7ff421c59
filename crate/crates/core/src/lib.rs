//! Exact quasideterminants over noncommutative rings.
//!
//! The engine is generic over a [`scalar::Ring`]; concrete rings cover exact
//! rationals, `d x d` rational matrices, truncated power series and
//! q-series. Identities are certified by evaluating both sides at random
//! exact points (see [`harness`]).

pub mod error;
pub mod formula;
pub mod harness;
pub mod io;
pub mod linalg;
pub mod contfrac;
pub mod matrix;
pub mod pluecker;
pub mod quasidet;
pub mod sample;
pub mod scalar;
pub mod symmfn;

pub use error::{Error, Result};
pub use formula::{evaluate, EvalAssignment, FormulaRing, RatFormula};
pub use matrix::NcMatrix;
pub use quasidet::{qdet, Method};
