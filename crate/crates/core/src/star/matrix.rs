//! The involutive index permutation `i ↦ ī` and the induced `†` on `Mₙ(B)`
//! and `ϑ` on `Mₙ(End B)`.

use serde::Serialize;

use crate::cusp::TruncatedOperator;
use crate::exactalg::LaurentPoly;
use crate::ncmatrix::RingMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvolutivePermutation {
    /// 0-based images.
    images: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PermutationError {
    #[error("image {0} out of range")]
    OutOfRange(usize),
    #[error("not an involution at {0}")]
    NotInvolutive(usize),
}

impl InvolutivePermutation {
    /// From 1-based images `ī` for `i = 1..n`.
    pub fn new(images: &[usize]) -> Result<Self, PermutationError> {
        let n = images.len();
        let images: Vec<usize> = images
            .iter()
            .map(|&i| if (1..=n).contains(&i) { Ok(i - 1) } else { Err(PermutationError::OutOfRange(i)) })
            .collect::<Result<_, _>>()?;
        if let Some(i) = (0..n).find(|&i| images[images[i]] != i) {
            return Err(PermutationError::NotInvolutive(i + 1));
        }
        Ok(InvolutivePermutation { images })
    }

    pub fn identity(n: usize) -> Self {
        InvolutivePermutation { images: (0..n).collect() }
    }

    /// `ī = n + 1 − i`.
    pub fn reversal(n: usize) -> Self {
        InvolutivePermutation { images: (0..n).rev().collect() }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// `ī` for a 0-based `i`.
    pub fn bar(&self, i: usize) -> usize {
        self.images[i]
    }
}

/// `θ(f) = * ∘ f ∘ *` for `*` the coefficientwise conjugation on `B`.
pub fn theta_end(f: &TruncatedOperator) -> TruncatedOperator {
    f.conj()
}

/// `(m†)_ij = (m_{j̄ ī})*`.
pub fn dagger(m: &RingMatrix<LaurentPoly>, s: &InvolutivePermutation) -> RingMatrix<LaurentPoly> {
    let n = m.size();
    RingMatrix::from_rows((0..n).map(|i| (0..n).map(|j| m.get(s.bar(j), s.bar(i)).conj()).collect()).collect())
}

/// `ϑ(m)_ij = θ(m_{ī j̄})`.
pub fn vartheta(m: &RingMatrix<TruncatedOperator>, s: &InvolutivePermutation) -> RingMatrix<TruncatedOperator> {
    let n = m.size();
    RingMatrix::from_rows((0..n).map(|i| (0..n).map(|j| theta_end(m.get(s.bar(i), s.bar(j)))).collect()).collect())
}

/// First entry `(i, j)` (1-based) where `ϑ(m)ᵀ ≠ m`.
pub fn vartheta_transpose_mismatch(m: &RingMatrix<TruncatedOperator>, s: &InvolutivePermutation) -> Option<(usize, usize)> {
    let v = vartheta(m, s).transpose();
    let n = m.size();
    (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| v.get(i, j) != m.get(i, j)).map(|(i, j)| (i + 1, j + 1))
}

/// `σ(b)` as a matrix of cusp polynomials.
pub fn evaluate(m: &RingMatrix<TruncatedOperator>, b: &LaurentPoly) -> RingMatrix<LaurentPoly> {
    m.map(|f| f.apply(b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cusp::build_sigma;
    use crate::exactalg::Scalar;

    #[test]
    fn permutations() {
        assert!(InvolutivePermutation::new(&[3, 2, 1]).is_ok());
        assert_eq!(InvolutivePermutation::new(&[2, 3, 1]), Err(PermutationError::NotInvolutive(1)));
        assert_eq!(InvolutivePermutation::new(&[4, 2, 1]), Err(PermutationError::OutOfRange(4)));
        assert_eq!(InvolutivePermutation::reversal(3), InvolutivePermutation::new(&[3, 2, 1]).unwrap());
    }

    #[test]
    fn dagger_of_identity_and_involution() {
        let one = RingMatrix::identity_like(3, &LaurentPoly::one());
        for s in [InvolutivePermutation::identity(3), InvolutivePermutation::reversal(3)] {
            assert_eq!(dagger(&one, &s), one);
        }
        let t = crate::cusp::t_matrix();
        let s = InvolutivePermutation::reversal(3);
        assert_eq!(dagger(&dagger(&t, &s), &s), t);
    }

    #[test]
    fn cusp_sigma_is_self_conjugate_for_the_reversal() {
        let sig = build_sigma(12).unwrap();
        assert_eq!(vartheta_transpose_mismatch(sig.matrix(), &InvolutivePermutation::reversal(3)), None);
        assert!(vartheta_transpose_mismatch(sig.matrix(), &InvolutivePermutation::identity(3)).is_some());
        let s = InvolutivePermutation::reversal(3);
        let b = LaurentPoly::monomial(Scalar::i(), 3);
        assert_eq!(evaluate(sig.matrix(), &b.conj()), dagger(&evaluate(sig.matrix(), &b), &s));
    }
}
