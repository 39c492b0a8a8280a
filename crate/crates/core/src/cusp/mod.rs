//! The cusp `k[t², t³]`, its quantum automorphism `σ`, the operators read off
//! from `σ`, and the Hopf algebra `H_σ` acting on it.

mod checks;
mod hsigma;
mod operator;
mod sigma;

pub use checks::{
    braiding_check, decomposition_checks, e_in_h_sigma, h_sigma_checks, h_sigma_hopf_checks, h_sigma_rewriting_checks, hit_action_checks, kernel_checks,
    module_algebra_check, sigma_checks, truncation_independence, u_sigma_checks, verify_cusp,
    verify_operator_identities,
};
pub use hsigma::{basis_word, basis_words, h_sigma, represent, Representation, H_SIGMA_TEXT};
pub use operator::TruncatedOperator;
pub use sigma::{
    build_sigma, closed_form_image, induced_operators, closed_form_operator, laurent_d, laurent_parity, laurent_y0, laurent_y1,
    sigma_x, sigma_y, t_matrix, CuspSigma, OperatorName, TruncationTooSmall, MIN_TRUNCATION,
};

/// Default truncation degree of the cusp.
pub const DEFAULT_MAX_DEGREE: i64 = 24;
/// Default bound on the `Y`-exponent of `H_σ` basis words.
pub const DEFAULT_HOPF_DEGREE: u32 = 6;
