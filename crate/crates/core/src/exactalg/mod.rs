//! Exact arithmetic over `k = ℚ(i)`: scalars, Laurent polynomials, rational
//! functions and the cusp subalgebra `k[t², t³]`.

mod cusppoly;
mod laurent;
mod ratfunc;
mod scalar;

pub use cusppoly::{cusp_exponents, cusp_membership, CuspPoly};
pub use laurent::LaurentPoly;
pub use ratfunc::{poly_divrem, poly_gcd, RationalFunction};
pub use scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("zero input where a nonzero value is required")]
    ZeroInput,
    #[error("not an element of k[t^2, t^3]: {0}")]
    NotInCusp(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Binary operation selector for [`ratfunc_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Mul,
    Inv,
}

/// `f op g`; `Inv` ignores `g`.
pub fn ratfunc_arith(f: &RationalFunction, g: &RationalFunction, op: RatOp) -> Result<RationalFunction, AlgError> {
    match op {
        RatOp::Add => Ok(f + g),
        RatOp::Mul => Ok(f * g),
        RatOp::Inv => f.inv(),
    }
}
