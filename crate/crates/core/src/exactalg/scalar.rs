//! Gaussian rationals `re + im·i` with exact arithmetic.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::AlgError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real scalar. Panics on `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    pub fn complex(re: Scalar, im: Scalar) -> Self {
        re + im * Scalar::i()
    }

    pub fn i() -> Self {
        Scalar::new(BigRational::zero(), BigRational::one())
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Scalar::new(self.re.clone(), -self.im.clone())
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self, AlgError> {
        if self.is_zero() {
            return Err(AlgError::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(Scalar::new(&self.re / &n, -(&self.im / &n)))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc *= self;
        }
        acc
    }

    /// `(-1)^e` for any integer exponent.
    pub fn sign(e: i64) -> Self {
        if e.rem_euclid(2) == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }

    /// The rational value as an `i64` when it is a real integer that fits.
    pub fn to_i64(&self) -> Option<i64> {
        use num_traits::ToPrimitive;
        if self.is_real() && self.re.is_integer() {
            self.re.to_integer().to_i64()
        } else {
            None
        }
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rat(s: &str) -> Result<BigRational, AlgError> {
    let s = s.trim();
    let bad = || AlgError::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(AlgError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl Scalar {
    /// Rational strings used by the JSON encoding, `("p/q", "p/q")`.
    pub fn to_parts(&self) -> (String, String) {
        (fmt_rat(&self.re), fmt_rat(&self.im))
    }

    pub fn from_parts(re: &str, im: &str) -> Result<Self, AlgError> {
        Ok(Scalar::new(parse_rat(re)?, parse_rat(im)?))
    }
}

impl FromStr for Scalar {
    type Err = AlgError;

    /// Accepts `p/q`, `i`, `-i`, `p/q*i`, and sums such as `1/2+3i`,
    /// optionally in parentheses as printed by `Display`.
    fn from_str(s: &str) -> Result<Self, AlgError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let s = match s.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
            Some(inner) => inner.to_string(),
            None => s,
        };
        if s.is_empty() {
            return Err(AlgError::Parse("empty scalar".into()));
        }
        let mut total = Scalar::zero();
        let mut start = 0;
        let bytes = s.as_bytes();
        for k in 1..=bytes.len() {
            let at_split = k == bytes.len()
                || ((bytes[k] == b'+' || bytes[k] == b'-') && bytes[k - 1] != b'/');
            if !at_split {
                continue;
            }
            let term = &s[start..k];
            start = k;
            let (body, imag) = match term.strip_suffix('i') {
                Some(b) => (b.strip_suffix('*').unwrap_or(b), true),
                None => (term, false),
            };
            let value = match body {
                "" | "+" => BigRational::one(),
                "-" => -BigRational::one(),
                b => parse_rat(b.strip_prefix('+').unwrap_or(b))?,
            };
            total += if imag {
                Scalar::new(BigRational::zero(), value)
            } else {
                Scalar::new(value, BigRational::zero())
            };
        }
        Ok(total)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rat(&self.re)),
            (true, false) => write!(f, "{}i", fmt_rat(&self.im)),
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "({}{}{}i)", fmt_rat(&self.re), sign, fmt_rat(&self.im.abs()))
            }
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::new(BigRational::one(), BigRational::zero())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re, -self.im)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::new(-self.re.clone(), -self.im.clone())
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, o: &Scalar) -> Scalar {
        Scalar::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, o: &Scalar) -> Scalar {
        Scalar::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, o: &Scalar) -> Scalar {
        if self.im.is_zero() && o.im.is_zero() {
            return Scalar::new(&self.re * &o.re, BigRational::zero());
        }
        Scalar::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div<&Scalar> for &Scalar {
    type Output = Scalar;
    /// Panics on division by zero; use [`Scalar::inv`] for a checked version.
    fn div(self, o: &Scalar) -> Scalar {
        self * &o.inv().expect("division by zero scalar")
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                (&self).$m(&o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                (&self).$m(o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                self.$m(&o)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        self.re += &o.re;
        self.im += &o.im;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, o: Scalar) {
        *self += &o;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        self.re -= &o.re;
        self.im -= &o.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, o: &Scalar) {
        *self = &*self * o;
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |a, b| a + b)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let (re, im) = self.to_parts();
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("re", &re)?;
        m.serialize_entry("im", &im)?;
        m.end()
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        struct Parts {
            re: String,
            #[serde(default = "zero_str")]
            im: String,
        }
        fn zero_str() -> String {
            "0".into()
        }
        let p = Parts::deserialize(d)?;
        Scalar::from_parts(&p.re, &p.im).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(Scalar::i() * Scalar::i(), -Scalar::one());
    }

    #[test]
    fn two_and_three_invert() {
        let half = Scalar::from_int(2).inv().unwrap();
        assert_eq!(half, Scalar::ratio(1, 2));
        assert_eq!(Scalar::from_int(3) * Scalar::ratio(1, 3), Scalar::one());
    }

    #[test]
    fn gaussian_inverse() {
        let z = Scalar::from_int(1) + Scalar::i();
        assert_eq!(&z * &z.inv().unwrap(), Scalar::one());
        assert!(Scalar::zero().inv().is_err());
    }

    #[test]
    fn parse_forms() {
        assert_eq!("1/2".parse::<Scalar>().unwrap(), Scalar::ratio(1, 2));
        assert_eq!("i".parse::<Scalar>().unwrap(), Scalar::i());
        assert_eq!("-i".parse::<Scalar>().unwrap(), -Scalar::i());
        let z: Scalar = "1/2-3/4i".parse().unwrap();
        assert_eq!(z, Scalar::ratio(1, 2) - Scalar::ratio(3, 4) * Scalar::i());
        assert_eq!("-2/3".parse::<Scalar>().unwrap(), Scalar::ratio(-2, 3));
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn json_round_trip() {
        let z = Scalar::ratio(-7, 3) + Scalar::ratio(5, 2) * Scalar::i();
        let js = serde_json::to_string(&z).unwrap();
        assert_eq!(js, r#"{"re":"-7/3","im":"5/2"}"#);
        let back: Scalar = serde_json::from_str(&js).unwrap();
        assert_eq!(back, z);
    }
}
