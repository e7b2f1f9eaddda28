//! Exact scalars, polynomials, rewrite normal forms and linear algebra.

mod linalg;
mod matrix;
mod poly;
mod rewrite;
mod scalar;
pub mod text;

pub use linalg::{determinant, exact_rank, independent_rows, integer_rank, leading_principal_minors};
pub use matrix::Matrix;
pub use poly::{monomials_of_degree, Monomial, Poly, VarSet};
pub use rewrite::{RewriteSystem, Rule};
pub use scalar::{parse_rational, rat, Rational, Scalar};
pub use text::{parse_poly, poly_from_json, poly_to_json, PolyJson};
