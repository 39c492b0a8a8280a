//! Involutions: `*` on the cusp, `†` and `ϑ` on matrices, the Cartan
//! involution and Hopf `*` on `H_σ`, and their compatibility with the action.

mod checks;
mod hopf;
mod matrix;

pub use checks::{
    hopf_star_on_generators, module_star_check, orbit_involution_check, pushforward_star_operators, real_point_check,
    sigma_self_conjugate,
    verify_star,
};
pub use hopf::{
    cartan_involution, check_hopf_star_axioms, closed_form_star, describe, dictionary_star, GeneratorInvolution,
};
pub use matrix::{dagger, evaluate, theta_end, vartheta, vartheta_transpose_mismatch, InvolutivePermutation, PermutationError};
