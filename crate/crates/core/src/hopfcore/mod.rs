//! Hopf-algebra layer over rewriting presentations.

mod character;
mod presentation;
mod rmatrix;
mod tensor;

pub use character::{hit_action, Character, Side};
pub use presentation::HopfPresentation;
pub use rmatrix::{check_quasitriangular, r_matrix};
pub use tensor::TensorPoly;
