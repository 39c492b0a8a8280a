//! Ring carriers for matrices.

use std::fmt::Debug;

use num_traits::One;

use super::RingMatrix;
use crate::cusp::TruncatedOperator;
use crate::exactalg::{LaurentPoly, RationalFunction, Scalar};
use crate::rewrite::{bounded_matrix_inverse, NCPoly};

/// A unital, possibly noncommutative ring. `zero_like`/`one_like` take a
/// prototype because some carriers (truncated operators) need size data.
pub trait Ring: Clone + PartialEq + Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    /// Element inversion hook; `None` when not a unit (or not decidable).
    fn inverse(&self) -> Option<Self>;

    /// Optional bounded search for a two-sided matrix inverse.
    fn bounded_inverse(_m: &RingMatrix<Self>, _bound: usize) -> Option<RingMatrix<Self>> {
        None
    }
}

/// The opposite ring: same additive group, `a ·op b = b a`.
#[derive(Clone, PartialEq, Debug)]
pub struct Opposite<R>(pub R);

impl<R: Ring> Ring for Opposite<R> {
    fn zero_like(&self) -> Self {
        Opposite(self.0.zero_like())
    }
    fn one_like(&self) -> Self {
        Opposite(self.0.one_like())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Opposite(self.0.add(&o.0))
    }
    fn neg(&self) -> Self {
        Opposite(self.0.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        Opposite(o.0.mul(&self.0))
    }
    fn inverse(&self) -> Option<Self> {
        self.0.inverse().map(Opposite)
    }
    fn bounded_inverse(m: &RingMatrix<Self>, bound: usize) -> Option<RingMatrix<Self>> {
        // N is an inverse of M over P^op iff Nᵀ is an inverse of Mᵀ over P.
        let base = m.transpose().map(|x| x.0.clone());
        R::bounded_inverse(&base, bound).map(|inv| inv.transpose().map(|x| Opposite(x.clone())))
    }
}

impl Ring for Scalar {
    fn zero_like(&self) -> Self {
        num_traits::Zero::zero()
    }
    fn one_like(&self) -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        num_traits::Zero::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Ring for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero()
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    /// Units of `k[t, t⁻¹]` are the nonzero monomials.
    fn inverse(&self) -> Option<Self> {
        if self.len() != 1 {
            return None;
        }
        let (e, c) = self.terms().next()?;
        Some(LaurentPoly::monomial(c.inv().ok()?, -e))
    }
}

impl Ring for RationalFunction {
    fn zero_like(&self) -> Self {
        RationalFunction::zero()
    }
    fn one_like(&self) -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inverse(&self) -> Option<Self> {
        self.inv().ok()
    }
}

impl Ring for TruncatedOperator {
    fn zero_like(&self) -> Self {
        TruncatedOperator::zero(self.degree_bound())
    }
    fn one_like(&self) -> Self {
        TruncatedOperator::identity(self.degree_bound())
    }
    fn is_zero(&self) -> bool {
        TruncatedOperator::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        TruncatedOperator::add(self, o)
    }
    fn neg(&self) -> Self {
        self.scale(&-Scalar::one())
    }
    fn mul(&self, o: &Self) -> Self {
        self.compose(o)
    }
    fn inverse(&self) -> Option<Self> {
        TruncatedOperator::inverse(self)
    }
}

/// Free-algebra carrier. Element inversion only recognizes nonzero scalars;
/// matrices fall back to the graded search.
impl Ring for NCPoly {
    fn zero_like(&self) -> Self {
        NCPoly::zero()
    }
    fn one_like(&self) -> Self {
        NCPoly::one()
    }
    fn is_zero(&self) -> bool {
        NCPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn neg(&self) -> Self {
        -self
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn inverse(&self) -> Option<Self> {
        if self.len() == 1 && self.degree() == Some(0) {
            return Some(NCPoly::constant(self.constant_term().inv().ok()?));
        }
        None
    }
    fn bounded_inverse(m: &RingMatrix<Self>, bound: usize) -> Option<RingMatrix<Self>> {
        let nsyms = m
            .entries()
            .iter()
            .flatten()
            .flat_map(|p| p.terms().flat_map(|(w, _)| w.iter().copied()).collect::<Vec<_>>())
            .max()
            .map_or(1, |s| s as usize + 1);
        bounded_matrix_inverse(m.entries(), nsyms, bound).map(RingMatrix::from_rows)
    }
}
