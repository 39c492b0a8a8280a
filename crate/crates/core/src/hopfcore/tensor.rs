//! Tensor powers of a presented algebra, with every leg kept in normal form.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::exactalg::Scalar;
use crate::rewrite::{Alphabet, NCPoly, Word};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TensorPoly {
    rank: usize,
    terms: BTreeMap<Vec<Word>, Scalar>,
}

impl TensorPoly {
    pub fn zero(rank: usize) -> Self {
        TensorPoly { rank, terms: BTreeMap::new() }
    }

    /// `1 ⊗ … ⊗ 1`.
    pub fn one(rank: usize) -> Self {
        TensorPoly::pure(Scalar::from_int(1), vec![Vec::new(); rank])
    }

    pub fn pure(c: Scalar, legs: Vec<Word>) -> Self {
        let mut t = TensorPoly::zero(legs.len());
        t.add_term(legs, &c);
        t
    }

    /// `a ⊗ b` for polynomials.
    pub fn from_pair(a: &NCPoly, b: &NCPoly) -> Self {
        let mut t = TensorPoly::zero(2);
        for (u, x) in a.terms() {
            for (v, y) in b.terms() {
                t.add_term(vec![u.clone(), v.clone()], &(x * y));
            }
        }
        t
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn add_term(&mut self, legs: Vec<Word>, c: &Scalar) {
        assert_eq!(legs.len(), self.rank, "tensor rank mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&legs) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&legs);
                }
            }
            None => {
                self.terms.insert(legs, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, o: &TensorPoly, c: &Scalar) {
        for (legs, v) in &o.terms {
            self.add_term(legs.clone(), &(v * c));
        }
    }

    pub fn add(&self, o: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        out.add_scaled(o, &Scalar::from_int(1));
        out
    }

    pub fn sub(&self, o: &TensorPoly) -> TensorPoly {
        let mut out = self.clone();
        out.add_scaled(o, &Scalar::from_int(-1));
        out
    }

    pub fn scale(&self, c: &Scalar) -> TensorPoly {
        let mut out = TensorPoly::zero(self.rank);
        out.add_scaled(self, c);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Word>, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, legs: &[Word]) -> Scalar {
        self.terms.get(legs).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Permutes legs: leg `k` of the result is leg `perm[k]` of `self`.
    pub fn permute(&self, perm: &[usize]) -> TensorPoly {
        let mut out = TensorPoly::zero(self.rank);
        for (legs, c) in &self.terms {
            out.add_term(perm.iter().map(|&k| legs[k].clone()).collect(), c);
        }
        out
    }

    /// `a ⊗ b ↦ b ⊗ a` on rank two.
    pub fn flip(&self) -> TensorPoly {
        self.permute(&[1, 0])
    }

    /// Inserts a unit leg at position `at`, e.g. `R₁₃` from `R` with `at = 1`.
    pub fn insert_unit(&self, at: usize) -> TensorPoly {
        let mut out = TensorPoly::zero(self.rank + 1);
        for (legs, c) in &self.terms {
            let mut l = legs.clone();
            l.insert(at, Vec::new());
            out.add_term(l, c);
        }
        out
    }

    pub fn show(&self, a: &Alphabet) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(legs, c)| {
                let body: Vec<String> = legs.iter().map(|w| a.show_word(w)).collect();
                format!("{c}*{}", body.join(" ⊗ "))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_and_cancel() {
        let mut t = TensorPoly::pure(Scalar::from_int(2), vec![vec![0], vec![]]);
        t.add_term(vec![vec![], vec![0]], &Scalar::from_int(3));
        let f = t.flip();
        assert_eq!(f.coeff(&[vec![], vec![0]]), Scalar::from_int(2));
        assert!(t.sub(&t).is_zero());
    }

    #[test]
    fn unit_insertion() {
        let t = TensorPoly::pure(Scalar::from_int(1), vec![vec![0], vec![1]]);
        let r13 = t.insert_unit(1);
        assert_eq!(r13.coeff(&[vec![0], vec![], vec![1]]), Scalar::from_int(1));
    }
}
