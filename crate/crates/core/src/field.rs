//! Exact scalar fields: the rationals and prime fields 𝔽_p.
//!
//! A [`Field`] value is a context object; its elements carry no reference to
//! the field, so every arithmetic operation goes through the context.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(&self) -> u32 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::Prime(p) => *p,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    /// Accepts `Q`, `QQ`, `rationals`, `F<p>`, `Fp<p>` and `GF(<p>)`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let lower = t.to_ascii_lowercase();
        if matches!(lower.as_str(), "q" | "qq" | "rationals" | "rational") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = lower
            .strip_prefix("gf(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| lower.strip_prefix("fp"))
            .or_else(|| lower.strip_prefix('f'))
            .ok_or_else(|| Error::Field(format!("unrecognised field {t:?}")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::Field(format!("unrecognised field {t:?}")))?;
        PrimeField::new(p).map(|k| FieldSpec::Prime(k.p))
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Arithmetic context of an exact field.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn spec(&self) -> FieldSpec;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Parses an integer or a fraction `p/q`.
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;
    /// Sampling distribution for randomized checks: uniform on {-2,...,2}
    /// over the rationals and uniform over 𝔽_p.
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem;

    /// `acc += x * y`.
    #[inline]
    fn mul_add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem, y: &Self::Elem) {
        let t = self.mul(x, y);
        *acc = self.add(acc, &t);
    }

    #[inline]
    fn add_assign(&self, acc: &mut Self::Elem, x: &Self::Elem) {
        *acc = self.add(acc, x);
    }

    #[inline]
    fn sign(&self, negative: bool) -> Self::Elem {
        if negative {
            self.neg(&self.one())
        } else {
            self.one()
        }
    }
}

fn split_fraction(s: &str) -> Result<(BigInt, BigInt)> {
    let bad = |reason: &str| Error::Scalar {
        input: s.to_string(),
        reason: reason.to_string(),
    };
    let t = s.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad("numerator is not an integer"))?;
    let d: BigInt = den.parse().map_err(|_| bad("denominator is not an integer"))?;
    if d.is_zero() {
        return Err(bad("zero denominator"));
    }
    Ok((n, d))
}

/// The field ℚ with arbitrary precision elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Rationals
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    #[inline]
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    #[inline]
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    #[inline]
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero()).then(|| a.recip())
    }
    #[inline]
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        let (n, d) = split_fraction(s)?;
        Ok(BigRational::new(n, d))
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BigRational {
        self.from_i64(rng.gen_range(-2..=2))
    }
    #[inline]
    fn mul_add_assign(&self, acc: &mut BigRational, x: &BigRational, y: &BigRational) {
        if !x.is_zero() && !y.is_zero() {
            *acc += x * y;
        }
    }
    #[inline]
    fn add_assign(&self, acc: &mut BigRational, x: &BigRational) {
        if !x.is_zero() {
            *acc += x;
        }
    }
}

/// Element of a prime field, always reduced into `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp(pub u32);

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The prime field 𝔽_p for a prime `2 <= p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p >= 1 << 31 {
            return Err(Error::Field(format!("modulus {p} outside 2..2^31")));
        }
        let mut d = 2u64;
        while d * d <= p {
            if p % d == 0 {
                return Err(Error::Field(format!("modulus {p} is not prime")));
            }
            d += 1;
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u32 {
        let p = BigInt::from(self.p);
        let mut r = n % &p;
        if r.is_negative() {
            r += &p;
        }
        u32::try_from(r).expect("residue fits in u32")
    }

    fn pow(&self, base: u32, mut exp: u32) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        acc as u32
    }
}

impl Field for PrimeField {
    type Elem = Fp;

    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn zero(&self) -> Fp {
        Fp(0)
    }
    fn one(&self) -> Fp {
        Fp(1 % self.p)
    }
    fn from_i64(&self, n: i64) -> Fp {
        Fp(n.rem_euclid(self.p as i64) as u32)
    }
    #[inline]
    fn add(&self, a: &Fp, b: &Fp) -> Fp {
        let s = a.0 as u64 + b.0 as u64;
        let p = self.p as u64;
        Fp(if s >= p { s - p } else { s } as u32)
    }
    #[inline]
    fn sub(&self, a: &Fp, b: &Fp) -> Fp {
        if a.0 >= b.0 {
            Fp(a.0 - b.0)
        } else {
            Fp(a.0 + (self.p - b.0))
        }
    }
    #[inline]
    fn mul(&self, a: &Fp, b: &Fp) -> Fp {
        Fp((a.0 as u64 * b.0 as u64 % self.p as u64) as u32)
    }
    #[inline]
    fn neg(&self, a: &Fp) -> Fp {
        if a.0 == 0 {
            Fp(0)
        } else {
            Fp(self.p - a.0)
        }
    }
    fn inv(&self, a: &Fp) -> Option<Fp> {
        (a.0 != 0).then(|| Fp(self.pow(a.0, self.p - 2)))
    }
    #[inline]
    fn is_zero(&self, a: &Fp) -> bool {
        a.0 == 0
    }
    fn parse(&self, s: &str) -> Result<Fp> {
        let (n, d) = split_fraction(s)?;
        let d = Fp(self.reduce_big(&d));
        let inv = self.inv(&d).ok_or_else(|| Error::Scalar {
            input: s.to_string(),
            reason: format!("denominator vanishes modulo {}", self.p),
        })?;
        Ok(self.mul(&Fp(self.reduce_big(&n)), &inv))
    }
    fn format(&self, a: &Fp) -> String {
        a.0.to_string()
    }
    fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Fp {
        Fp(rng.gen_range(0..self.p))
    }
    #[inline]
    fn mul_add_assign(&self, acc: &mut Fp, x: &Fp, y: &Fp) {
        let s = (acc.0 as u64 + x.0 as u64 * y.0 as u64) % self.p as u64;
        acc.0 = s as u32;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_round_trip() {
        for s in ["Q", "F2", "F3", "F101"] {
            let spec: FieldSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert_eq!("GF(7)".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(7));
        assert!("F4".parse::<FieldSpec>().is_err());
        assert!("F1".parse::<FieldSpec>().is_err());
        assert!("R".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn rational_parsing() {
        let q = Rationals;
        assert_eq!(q.format(&q.parse("6/4").unwrap()), "3/2");
        assert_eq!(q.format(&q.parse("-3").unwrap()), "-3");
        assert!(q.parse("1/0").is_err());
        assert!(q.parse("x").is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let k = PrimeField::new(7).unwrap();
        assert_eq!(k.parse("1/2").unwrap(), Fp(4));
        assert_eq!(k.parse("-1").unwrap(), Fp(6));
        assert!(k.parse("1/7").is_err());
        for a in 1..7 {
            let inv = k.inv(&Fp(a)).unwrap();
            assert_eq!(k.mul(&Fp(a), &inv), Fp(1));
        }
        assert_eq!(k.inv(&Fp(0)), None);
        let mut acc = Fp(5);
        k.mul_add_assign(&mut acc, &Fp(3), &Fp(4));
        assert_eq!(acc, Fp(3));
    }

    #[test]
    fn composite_moduli_rejected() {
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(2_147_483_647).is_ok());
    }
}
