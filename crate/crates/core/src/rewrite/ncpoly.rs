//! Free-algebra elements: finite linear combinations of words.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exactalg::Scalar;

/// A generator index; its meaning comes from an [`super::Alphabet`].
pub type Sym = u8;
pub type Word = Vec<Sym>;

#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct NCPoly {
    terms: BTreeMap<Word, Scalar>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        NCPoly::word(Vec::new())
    }

    pub fn constant(c: Scalar) -> Self {
        NCPoly::term(c, Vec::new())
    }

    pub fn word(w: Word) -> Self {
        NCPoly::term(Scalar::one(), w)
    }

    pub fn sym(s: Sym) -> Self {
        NCPoly::word(vec![s])
    }

    pub fn term(c: Scalar, w: Word) -> Self {
        let mut p = NCPoly::zero();
        p.add_term(w, &c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(it: I) -> Self {
        let mut p = NCPoly::zero();
        for (w, c) in it {
            p.add_term(w, &c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(e) => {
                *e += c;
                if e.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &NCPoly, c: &Scalar) {
        for (w, v) in &other.terms {
            self.add_term(w.clone(), &(v * c));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &[Sym]) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Coefficient of the empty word.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&[])
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return NCPoly::zero();
        }
        NCPoly { terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect() }
    }

    /// Total length of the longest word, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// Applies `f` to every coefficient, keeping words.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    /// Reverses every word (the anti-automorphism fixing generators).
    pub fn reversed(&self) -> Self {
        NCPoly::from_terms(self.terms.iter().map(|(w, c)| {
            let mut r = w.clone();
            r.reverse();
            (r, c.clone())
        }))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = NCPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }
}

impl Add<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn add(self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(o, &Scalar::one());
        out
    }
}

impl Sub<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn sub(self, o: &NCPoly) -> NCPoly {
        let mut out = self.clone();
        out.add_scaled(o, &-Scalar::one());
        out
    }
}

impl Mul<&NCPoly> for &NCPoly {
    type Output = NCPoly;
    fn mul(self, o: &NCPoly) -> NCPoly {
        let mut out = NCPoly::zero();
        for (u, a) in &self.terms {
            for (v, b) in &o.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                out.add_term(w, &(a * b));
            }
        }
        out
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&-Scalar::one())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $m(self, o: NCPoly) -> NCPoly {
                (&self).$m(&o)
            }
        }
        impl $tr<&NCPoly> for NCPoly {
            type Output = NCPoly;
            fn $m(self, o: &NCPoly) -> NCPoly {
                (&self).$m(o)
            }
        }
        impl $tr<NCPoly> for &NCPoly {
            type Output = NCPoly;
            fn $m(self, o: NCPoly) -> NCPoly {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn concatenation_product() {
        let x = NCPoly::sym(0);
        let y = NCPoly::sym(1);
        let p = &x * &y;
        assert_eq!(p, NCPoly::word(vec![0, 1]));
        assert_ne!(&x * &y, &y * &x);
    }

    #[test]
    fn zero_coefficients_vanish() {
        let x = NCPoly::sym(0);
        assert!((&x - &x).is_empty());
        assert_eq!((&x + &x).coeff(&[0]), Scalar::from_int(2));
    }
}
