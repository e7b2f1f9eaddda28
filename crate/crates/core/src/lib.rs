//! Exact algebra for singular reduced phase spaces and their quantization.
//!
//! All arithmetic is over ℚ(i); nothing in the verification paths uses
//! floating point.

#![allow(clippy::needless_range_loop)]

pub mod bounds;
pub mod checks;
pub mod error;
pub mod exactalg;
pub mod fock;
pub mod lie;
pub mod lierinehart;
pub mod poisson;
pub mod reduction;
pub mod repcount;
pub mod sample;

pub use error::{Error, Result};
pub use exactalg::{Matrix, Monomial, Poly, Rational, RewriteSystem, Scalar, VarSet};
