//! Sparse Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{AlgError, Scalar};

/// Finite sum `Σ c_e t^e`; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn monomial(c: Scalar, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// `t^e` with coefficient one.
    pub fn t_pow(e: i64) -> Self {
        LaurentPoly::monomial(Scalar::one(), e)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Scalar)>>(it: I) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in it {
            p.add_term(e, &c);
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> Scalar {
        self.terms.get(&e).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Scalar)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Scalar> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    /// Multiply by `t^k`. Fails if an exponent leaves the `i64` range.
    pub fn shift(&self, k: i64) -> Result<Self, AlgError> {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            terms.insert(e.checked_add(k).ok_or(AlgError::ExponentOverflow)?, c.clone());
        }
        Ok(LaurentPoly { terms })
    }

    /// Coefficientwise conjugation, fixing every `t^n`.
    pub fn conj(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c.conj())).collect(),
        }
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, AlgError> {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e = e1.checked_add(*e2).ok_or(AlgError::ExponentOverflow)?;
                out.add_term(e, &(c1 * c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// True iff only nonnegative exponents occur.
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    /// Formal derivative `d/dt`.
    pub fn derivative(&self) -> Self {
        LaurentPoly::from_terms(
            self.terms
                .iter()
                .filter(|(e, _)| **e != 0)
                .map(|(e, c)| (e - 1, c * Scalar::from_int(*e))),
        )
    }

    /// Evaluate at a scalar point; negative exponents need a nonzero point.
    pub fn eval(&self, x: &Scalar) -> Result<Scalar, AlgError> {
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let p = if *e >= 0 {
                x.pow(*e as u32)
            } else {
                x.inv()?.pow((-*e) as u32)
            };
            acc += c * p;
        }
        Ok(acc)
    }

    /// Keep only the terms with exponent `<= n`.
    pub fn truncate_above(&self, n: i64) -> Self {
        LaurentPoly {
            terms: self.terms.range(..=n).map(|(e, c)| (*e, c.clone())).collect(),
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(*e, &-c);
        }
        out
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on exponent overflow; see [`LaurentPoly::checked_mul`].
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(o).expect("Laurent exponent overflow")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        self.scale(&-Scalar::one())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                (&self).$m(&o)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: &LaurentPoly) -> LaurentPoly {
                (&self).$m(o)
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, o: LaurentPoly) -> LaurentPoly {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl serde::Serialize for LaurentPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(self.terms.len()))?;
        for (e, c) in &self.terms {
            m.serialize_entry(&e.to_string(), c)?;
        }
        m.end()
    }
}

impl<'de> serde::Deserialize<'de> for LaurentPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, Scalar>::deserialize(d)?;
        let mut p = LaurentPoly::zero();
        for (k, c) in raw {
            let e: i64 = k
                .trim()
                .parse()
                .map_err(|_| serde::de::Error::custom(format!("bad exponent {k:?}")))?;
            p.add_term(e, &c);
        }
        Ok(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: i64) -> LaurentPoly {
        LaurentPoly::t_pow(e)
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = &t(3) - &t(3);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn product_of_binomials() {
        let p = &(&t(1) + &LaurentPoly::one()) * &(&t(1) - &LaurentPoly::one());
        assert_eq!(p, &t(2) - &LaurentPoly::one());
    }

    #[test]
    fn negative_exponents() {
        assert_eq!(&t(-1) * &t(1), LaurentPoly::one());
        assert_eq!(t(-2).min_exp(), Some(-2));
    }

    #[test]
    fn overflow_is_reported() {
        let big = t(i64::MAX);
        assert!(matches!(big.checked_mul(&t(1)), Err(AlgError::ExponentOverflow)));
    }

    #[test]
    fn derivative_of_cube() {
        assert_eq!(t(3).derivative(), t(2).scale(&Scalar::from_int(3)));
        assert!(LaurentPoly::one().derivative().is_zero());
    }

    #[test]
    fn json_shape() {
        let p = &t(2).scale(&Scalar::ratio(1, 3)) + &t(-1);
        let js = serde_json::to_value(&p).unwrap();
        assert_eq!(js["2"]["re"], "1/3");
        assert_eq!(js["-1"]["re"], "1");
        let back: LaurentPoly = serde_json::from_value(js).unwrap();
        assert_eq!(back, p);
    }
}
