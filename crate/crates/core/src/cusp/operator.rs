//! Linear endomorphisms of the degree-`≤ N` part of `k[t², t³]`.

use std::fmt;

use num_traits::{One, Zero};

use crate::exactalg::{cusp_exponents, cusp_membership, LaurentPoly, Scalar};
use crate::linalg;

/// A linear map given by its values on `t^n`, `n ∈ {0, 2, 3, …, N}`.
///
/// Every image is a cusp polynomial of degree at most `N`, so the operator
/// preserves the truncated space and composition is exact.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruncatedOperator {
    n: i64,
    // Indexed by exponent; slot 1 is always zero and never read.
    images: Vec<LaurentPoly>,
}

impl TruncatedOperator {
    /// Builds the operator from a rule on monomials. Images outside the
    /// truncated cusp space are rejected.
    pub fn from_fn(n: i64, f: impl Fn(i64) -> LaurentPoly) -> Result<Self, String> {
        let mut images = vec![LaurentPoly::zero(); (n + 1) as usize];
        for e in cusp_exponents(n) {
            let img = f(e);
            if !cusp_membership(&img) || img.max_exp().is_some_and(|d| d > n) {
                return Err(format!("image of t^{e} leaves the truncated cusp space: {img}"));
            }
            images[e as usize] = img;
        }
        Ok(TruncatedOperator { n, images })
    }

    pub fn identity(n: i64) -> Self {
        Self::from_fn(n, LaurentPoly::t_pow).expect("identity preserves the space")
    }

    pub fn zero(n: i64) -> Self {
        Self::from_fn(n, |_| LaurentPoly::zero()).expect("zero preserves the space")
    }

    pub fn scalar(n: i64, c: &Scalar) -> Self {
        Self::identity(n).scale(c)
    }

    pub fn degree_bound(&self) -> i64 {
        self.n
    }

    /// Image of `t^e`; `e` must be a cusp exponent `≤ N`.
    pub fn image(&self, e: i64) -> &LaurentPoly {
        assert!(e == 0 || (2..=self.n).contains(&e), "t^{e} outside the truncated basis");
        &self.images[e as usize]
    }

    /// Applies the operator to a cusp polynomial of degree `≤ N`.
    pub fn apply(&self, p: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e, c) in p.terms() {
            for (f, v) in self.image(e).terms() {
                out.add_term(f, &(c * v));
            }
        }
        out
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "truncation mismatch");
        let mut images = vec![LaurentPoly::zero(); self.images.len()];
        for e in cusp_exponents(self.n) {
            images[e as usize] = self.apply(&other.images[e as usize]);
        }
        TruncatedOperator { n: self.n, images }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "truncation mismatch");
        let images = self.images.iter().zip(&other.images).map(|(a, b)| a + b).collect();
        TruncatedOperator { n: self.n, images }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        TruncatedOperator { n: self.n, images: self.images.iter().map(|p| p.scale(c)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(LaurentPoly::is_zero)
    }

    /// Conjugation `θ(f) = * ∘ f ∘ *` with `*` conjugating coefficients.
    pub fn conj(&self) -> Self {
        TruncatedOperator { n: self.n, images: self.images.iter().map(LaurentPoly::conj).collect() }
    }

    /// The same operator on a smaller truncation.
    pub fn restrict(&self, m: i64) -> Self {
        assert!(m <= self.n);
        Self::from_fn(m, |e| self.images[e as usize].clone()).expect("filtered operator restricts")
    }

    /// True iff every `F_d`, `d ≤ N`, is mapped into itself.
    pub fn preserves_filtration(&self) -> bool {
        cusp_exponents(self.n).all(|e| self.images[e as usize].max_exp().is_none_or(|d| d <= e))
    }

    /// Matrix in the monomial basis: entry `(row, col)` is the coefficient of
    /// the `row`-th basis monomial in the image of the `col`-th.
    pub fn matrix(&self) -> Vec<Vec<Scalar>> {
        let exps: Vec<i64> = cusp_exponents(self.n).collect();
        exps.iter()
            .map(|r| exps.iter().map(|c| self.images[*c as usize].coeff(*r)).collect())
            .collect()
    }

    /// Rank of the map on the truncated space.
    pub fn rank(&self) -> usize {
        linalg::dense_rank(&self.matrix())
    }

    /// Two-sided inverse on the truncated space, if it exists.
    pub fn inverse(&self) -> Option<Self> {
        let exps: Vec<i64> = cusp_exponents(self.n).collect();
        let m = self.matrix();
        let mut images = vec![LaurentPoly::zero(); self.images.len()];
        for (j, target) in exps.iter().enumerate() {
            let eqs = m
                .iter()
                .enumerate()
                .map(|(r, row)| {
                    let sparse = row
                        .iter()
                        .enumerate()
                        .filter(|(_, v)| !v.is_zero())
                        .map(|(c, v)| (c, v.clone()))
                        .collect();
                    (sparse, if r == j { Scalar::one() } else { Scalar::zero() })
                })
                .collect();
            let x = linalg::solve(eqs, exps.len())?;
            images[*target as usize] = LaurentPoly::from_terms(exps.iter().zip(x).map(|(e, c)| (*e, c)));
        }
        let inv = TruncatedOperator { n: self.n, images };
        // A square system can be solvable column by column only if it is
        // invertible, but confirm both sides anyway.
        (inv.compose(self) == Self::identity(self.n)).then_some(inv)
    }
}

impl fmt::Debug for TruncatedOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Op[N={}]{{", self.n)?;
        for e in cusp_exponents(self.n) {
            let img = &self.images[e as usize];
            if !img.is_zero() {
                write!(f, " t^{e} -> {img};")?;
            }
        }
        write!(f, " }}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parity(n: i64) -> TruncatedOperator {
        TruncatedOperator::from_fn(n, |e| LaurentPoly::t_pow(e).scale(&Scalar::sign(e))).unwrap()
    }

    #[test]
    fn rejects_exponent_one() {
        assert!(TruncatedOperator::from_fn(6, |e| LaurentPoly::t_pow(e - 1)).is_err());
    }

    #[test]
    fn parity_is_an_involution() {
        let k = parity(10);
        assert_eq!(k.compose(&k), TruncatedOperator::identity(10));
        assert_eq!(k.inverse().unwrap(), k);
    }

    #[test]
    fn nilpotent_has_no_inverse() {
        let d = TruncatedOperator::from_fn(8, |e| {
            if e % 2 == 1 { LaurentPoly::t_pow(e - 1) } else { LaurentPoly::zero() }
        })
        .unwrap();
        assert!(d.inverse().is_none());
        assert!(d.compose(&d).is_zero());
    }

    #[test]
    fn restriction_commutes_with_composition() {
        let k = parity(12);
        assert_eq!(k.compose(&k).restrict(6), k.restrict(6).compose(&k.restrict(6)));
    }
}
