//! The Lie–Rinehart algebra of a Poisson algebra, its central extension and
//! prequantization.

mod differentials;
mod extension;
mod prequantum;

pub use differentials::{DiffElement, LieRinehart};
pub use extension::ExtElement;
pub use prequantum::PrequantumModule;
