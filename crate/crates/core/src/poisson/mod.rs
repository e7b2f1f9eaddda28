//! Finitely presented Poisson algebras and the Lie–Poisson structure on 𝔰𝔭(ℓ,ℝ).

mod algebra;
mod descriptor;
mod lie_poisson;

pub use algebra::{PresentedPoissonAlgebra, Verdict};
pub use descriptor::{AlgebraDescriptor, BracketEntry, DifferentialRule, ADJOINT_QUOTIENT_JSON, SEMICONE_JSON};
pub use lie_poisson::LiePoissonSpace;
