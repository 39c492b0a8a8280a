//! Rational functions `p/q` in `t` kept in lowest terms with monic `q`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{AlgError, LaurentPoly, Scalar};

/// Division with remainder of polynomials (nonnegative exponents only).
pub fn poly_divrem(a: &LaurentPoly, b: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly), AlgError> {
    let db = b.max_exp().ok_or(AlgError::DivisionByZero)?;
    let lead_inv = b.leading_coeff().expect("nonzero").inv()?;
    let mut q = LaurentPoly::zero();
    let mut r = a.clone();
    while let Some(dr) = r.max_exp() {
        if dr < db {
            break;
        }
        let c = r.leading_coeff().expect("nonzero") * &lead_inv;
        let step = LaurentPoly::monomial(c, dr - db);
        r = &r - &(&step * b);
        q = &q + &step;
    }
    Ok((q, r))
}

fn make_monic(p: &LaurentPoly) -> LaurentPoly {
    match p.leading_coeff() {
        Some(c) => p.scale(&c.inv().expect("nonzero leading coefficient")),
        None => LaurentPoly::zero(),
    }
}

/// Monic gcd; `gcd(0, 0) = 0`.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let (mut x, mut y) = (a.clone(), b.clone());
    while !y.is_zero() {
        let (_, r) = poly_divrem(&x, &y).expect("nonzero divisor");
        x = y;
        y = r;
    }
    make_monic(&x)
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFunction {
    /// Builds `num/den` from arbitrary Laurent numerator and denominator.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgError> {
        if den.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        // Clear negative exponents on both sides with a common power of t.
        let shift = -num.min_exp().unwrap_or(0).min(0) - den.min_exp().unwrap_or(0).min(0);
        let num = num.shift(shift)?;
        let den = den.shift(shift)?;
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let g = poly_gcd(&num, &den);
        let (mut n, _) = poly_divrem(&num, &g).expect("gcd divides");
        let (mut d, _) = poly_divrem(&den, &g).expect("gcd divides");
        let lc = d.leading_coeff().expect("nonzero").inv().expect("nonzero");
        n = n.scale(&lc);
        d = d.scale(&lc);
        RationalFunction { num: n, den: d }
    }

    pub fn zero() -> Self {
        RationalFunction { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from_laurent(LaurentPoly::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_laurent(LaurentPoly::constant(c))
    }

    /// `t^e` for any integer `e`.
    pub fn t_pow(e: i64) -> Self {
        Self::from_laurent(LaurentPoly::t_pow(e))
    }

    pub fn from_laurent(p: LaurentPoly) -> Self {
        RationalFunction::new(p, LaurentPoly::one()).expect("unit denominator")
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// The Laurent polynomial equal to `self`, if the denominator is a power of `t`.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.den.len() != 1 {
            return None;
        }
        let k = self.den.max_exp()?;
        self.num.shift(-k).ok()
    }

    pub fn inv(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        RationalFunction::new(self.den.clone(), self.num.clone())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = RationalFunction::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `max(deg num, deg den)`; zero has degree 0.
    pub fn degree(&self) -> i64 {
        self.num.max_exp().unwrap_or(0).max(self.den.max_exp().unwrap_or(0))
    }

    /// Evaluate a polynomial `p` at this rational function.
    pub fn compose_poly(p: &LaurentPoly, at: &RationalFunction) -> Result<Self, AlgError> {
        let mut acc = RationalFunction::zero();
        for (e, c) in p.terms() {
            let base = if e >= 0 { at.pow(e as u32) } else { at.inv()?.pow((-e) as u32) };
            acc = &acc + &base.scale(c);
        }
        Ok(acc)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, o: &RationalFunction) -> RationalFunction {
        if self.den == o.den {
            return RationalFunction::reduce(&self.num + &o.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &o.den) + &(&o.num * &self.den),
            &self.den * &o.den,
        )
    }
}

impl Sub<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, o: &RationalFunction) -> RationalFunction {
        self + &-o
    }
}

impl Mul<&RationalFunction> for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, o: &RationalFunction) -> RationalFunction {
        RationalFunction::reduce(&self.num * &o.num, &self.den * &o.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl serde::Serialize for RationalFunction {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("num", &self.num)?;
        m.serialize_entry("den", &self.den)?;
        m.end()
    }
}

impl<'de> serde::Deserialize<'de> for RationalFunction {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Raw {
            num: LaurentPoly,
            den: Option<LaurentPoly>,
        }
        let raw = Raw::deserialize(d)?;
        RationalFunction::new(raw.num, raw.den.unwrap_or_else(LaurentPoly::one))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(e: i64) -> LaurentPoly {
        LaurentPoly::t_pow(e)
    }

    fn c(n: i64) -> LaurentPoly {
        LaurentPoly::constant(Scalar::from_int(n))
    }

    #[test]
    fn inverse_pair_collapses() {
        let f = RationalFunction::t_pow(-1);
        let g = RationalFunction::t_pow(1);
        assert_eq!(&f * &g, RationalFunction::one());
    }

    #[test]
    fn common_denominator() {
        let f = RationalFunction::new(c(1), &t(1) - &c(1)).unwrap();
        let g = RationalFunction::new(c(1), &t(1) + &c(1)).unwrap();
        let want = RationalFunction::new(t(1).scale(&Scalar::from_int(2)), &t(2) - &c(1)).unwrap();
        assert_eq!(&f + &g, want);
    }

    #[test]
    fn inverse_of_square() {
        let f = RationalFunction::t_pow(2).inv().unwrap();
        assert_eq!(f.num(), &c(1));
        assert_eq!(f.den(), &t(2));
        assert_eq!(f.to_laurent(), Some(t(-2)));
    }

    #[test]
    fn zero_handling() {
        assert!(RationalFunction::zero().inv().is_err());
        assert!(RationalFunction::new(c(1), LaurentPoly::zero()).is_err());
    }

    #[test]
    fn canonical_form_is_monic_and_reduced() {
        // (2t^2 - 2) / (4t - 4) = (t + 1) / 2
        let f = RationalFunction::new(&t(2).scale(&Scalar::from_int(2)) - &c(2), &t(1).scale(&Scalar::from_int(4)) - &c(4))
            .unwrap();
        assert_eq!(f.den(), &c(1));
        assert_eq!(f.num(), &(&t(1) + &c(1)).scale(&Scalar::ratio(1, 2)));
    }
}
