//! Free-algebra arithmetic and reduction systems checked with the diamond lemma.

mod ncpoly;
mod search;
mod system;
mod text;

pub use ncpoly::{NCPoly, Sym, Word};
pub use search::{bounded_inverse_search, bounded_matrix_inverse};
pub use system::{
    Alphabet, Ambiguity, AmbiguityKind, ConfluenceReport, ReductionSystem, Rule, REDUCTION_FUSE,
};
pub use text::{format_system, parse_poly, parse_system};
pub(crate) use text::{split_coeff, split_signed_terms};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("reduction did not terminate within {0} steps")]
    FuseExceeded(usize),
    #[error("rule {lhs} -> ... has non-decreasing term {term}")]
    NotDecreasing { lhs: String, term: String },
    #[error("invalid reduction system: {0}")]
    Invalid(String),
    #[error("parse error: {0}")]
    Parse(String),
}
