//! The dual Hopf algebra `A_σ`, its pairing with `H_σ`, the dual basis and
//! the coideal embedding of the cusp.

mod basis;
mod checks;
mod embed;
mod pairing;
mod presentations;

pub use basis::{dual_basis, dual_basis_check, dual_basis_table, dual_indices, normalized_dual_basis, DualBasisOutcome};
pub use checks::{
    a_basis_words, a_sigma_checks, embedding_checks, gram_rank, pairing_checks, pairing_compatibility,
    structural_checks, verify_dual,
};
pub use embed::{
    algebra_check, coideal_check, embed_cusp, embedding_images, injectivity_check, iota_monomial, unit_preserved,
    EmbeddingData,
};
pub use pairing::{
    a_exponents, closed_coproduct_power, closed_pairing, h_exponents, matrix_coefficient, monomial_letters,
    oracle_pairing, Letter, PairingEntry, PairingOracle, PairingTable,
};
pub use presentations::{
    a_sigma, a_sigma_abc, a_sigma_delta, abc_to_gamma_phi_psi, check_hopf_map, gamma_phi_psi_to_abc,
    translation_checks, A_SIGMA_ABC_TEXT, A_SIGMA_DELTA_TEXT, A_SIGMA_TEXT,
};
