//! Exact computer algebra for the quantum automorphism of the cusp `k[t², t³]`
//! and the Hopf algebras built from it.

pub mod exactalg;
pub mod linalg;
pub mod rewrite;
pub mod cusp;
pub mod ncmatrix;
pub mod report;
pub mod hopfcore;
pub mod dual;
pub mod classify;
pub mod star;
