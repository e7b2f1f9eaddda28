//! Momentum maps, the zero angular momentum level and its orbit-closure
//! image, and the SL(2,ℂ) adjoint quotient.

mod adjoint;
mod phase;

pub use adjoint::{adjoint_point, steinberg_general, AdjointPoint};
pub use phase::{sample_zero_level, PhasePoint, SymMatrixC};
