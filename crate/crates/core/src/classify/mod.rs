//! Upper-triangular quantum automorphisms of `k(t)` and when they restrict to
//! the cusp, with closed-form decisions for sizes 2 and 3.

mod lemma;
mod sweep;
mod triangular;

pub use lemma::{classify_n2, classify_n3, n2_matrix, n3_matrix, Coupling, N2Case, N2Decision, N3Decision};
pub use sweep::{classify_checks, sweep_n2, sweep_n3, SweepSummary, DEFAULT_INSTANCES, SUPPORT};
pub use triangular::{
    cusp_obstruction, degree_bound_validate, extend_to_ratfunc, moebius_validate, quantum_number, restricts_to_cusp,
    MoebiusParams, TriangularT,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassifyError {
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("Möbius parameters have zero determinant")]
    SingularMoebius,
    #[error("entry ({0}, {1}) lies below the diagonal or outside the matrix")]
    NotTriangular(usize, usize),
    #[error("denominator vanishes on diagonal entry {0}")]
    SingularDenominator(usize),
}
