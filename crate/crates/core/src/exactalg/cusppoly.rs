//! Elements of the cusp algebra `k[t², t³]`, the span of `t^n` with `n ≠ 1, n ≥ 0`.

use std::fmt;

use super::{AlgError, LaurentPoly};

/// True iff the support avoids exponent 1 and every negative exponent.
pub fn cusp_membership(p: &LaurentPoly) -> bool {
    p.terms().all(|(e, _)| e == 0 || e >= 2)
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CuspPoly {
    underlying: LaurentPoly,
}

impl CuspPoly {
    pub fn new(p: LaurentPoly) -> Result<Self, AlgError> {
        if cusp_membership(&p) {
            Ok(CuspPoly { underlying: p })
        } else {
            Err(AlgError::NotInCusp(p.to_string()))
        }
    }

    pub fn as_laurent(&self) -> &LaurentPoly {
        &self.underlying
    }

    pub fn into_laurent(self) -> LaurentPoly {
        self.underlying
    }

    /// Smallest `d` with `self ∈ F_d = span{1, t², t³, …, t^d}`.
    pub fn filtration_degree(&self) -> Result<i64, AlgError> {
        self.underlying.max_exp().ok_or(AlgError::ZeroInput)
    }

    pub fn mul(&self, o: &CuspPoly) -> CuspPoly {
        CuspPoly { underlying: &self.underlying * &o.underlying }
    }
}

impl fmt::Display for CuspPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.underlying, f)
    }
}

impl fmt::Debug for CuspPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.underlying, f)
    }
}

/// The exponents `0, 2, 3, …, n` indexing the monomial basis of `F_n`.
pub fn cusp_exponents(n: i64) -> impl Iterator<Item = i64> {
    (0..=n).filter(|e| *e != 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Scalar;

    fn t(e: i64) -> LaurentPoly {
        LaurentPoly::t_pow(e)
    }

    #[test]
    fn membership_examples() {
        assert!(cusp_membership(&(&t(2) + &t(3).scale(&Scalar::from_int(5)))));
        assert!(cusp_membership(&LaurentPoly::zero()));
        assert!(!cusp_membership(&t(1).scale(&Scalar::from_int(2))));
        assert!(!cusp_membership(&t(-2)));
    }

    #[test]
    fn filtration_degrees() {
        let d = |p: LaurentPoly| CuspPoly::new(p).unwrap().filtration_degree().unwrap();
        assert_eq!(d(t(3)), 3);
        assert_eq!(d(&LaurentPoly::one() + &t(4)), 4);
        assert_eq!(d(&t(2) + &t(3)), 3);
        assert!(CuspPoly::default().filtration_degree().is_err());
    }

    #[test]
    fn exponent_listing() {
        assert_eq!(cusp_exponents(4).collect::<Vec<_>>(), vec![0, 2, 3, 4]);
    }
}
