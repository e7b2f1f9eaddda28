//! The Bargmann–Fock space on ℂ^{sℓ}, its O(s)-invariant subspaces, the
//! quantized 𝔲(ℓ) action and the restriction maps between rank levels.

mod basis;
mod inner;
mod model;

pub use basis::{
    costratified_restrict, gram, invariant_basis, invariant_basis_with, is_positive_definite, restriction_kernel_dim,
    span_dim, InvariantBasis,
};
pub use inner::{bargmann_inner, monomial_norm, oracle, FockPoly};
pub use model::FockModel;
