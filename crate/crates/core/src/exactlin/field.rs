//! Exact scalar fields: the rationals and prime fields `F_p`.
//!
//! Everything downstream is generic over [`Field`], which extends
//! [`num_traits::Num`] with the few things exact linear algebra needs:
//! a runtime descriptor, conversion from and to integer fractions, and
//! (for finite fields) an enumeration of all elements.

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldDesc {
    Rationals,
    PrimeField(u64),
}

impl FieldDesc {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDesc::Rationals => 0,
            FieldDesc::PrimeField(p) => *p,
        }
    }

    pub fn prime(p: u64) -> Result<Self, Error> {
        if is_prime(p) {
            Ok(FieldDesc::PrimeField(p))
        } else {
            Err(Error::InvalidParameter(format!("{p} is not prime")))
        }
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDesc::Rationals => write!(f, "Q"),
            FieldDesc::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for FieldDesc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "Q" {
            return Ok(FieldDesc::Rationals);
        }
        let digits = s
            .strip_prefix('F')
            .ok_or_else(|| Error::InvalidParameter(format!("unknown field `{s}` (expected Q or F<p>)")))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| Error::InvalidParameter(format!("bad modulus in `{s}`")))?;
        FieldDesc::prime(p)
    }
}

pub const fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An exact field usable as the scalar type of an algebra.
pub trait Field:
    Num + Neg<Output = Self> + Clone + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn descriptor() -> FieldDesc;

    fn characteristic() -> u64 {
        Self::descriptor().characteristic()
    }

    /// `num / den`, or `None` when `den` is not invertible in the field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self>;

    /// Canonical integer fraction: lowest terms with positive denominator
    /// for Q, the residue in `[0, p)` over one for `F_p`.
    fn to_ratio(&self) -> (BigInt, BigInt);

    /// All elements, for finite fields only.
    fn elements() -> Option<Vec<Self>> {
        None
    }

    fn from_i64(v: i64) -> Self {
        Self::from_ratio(&BigInt::from(v), &BigInt::one()).expect("1 is a unit")
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

impl Field for BigRational {
    fn descriptor() -> FieldDesc {
        FieldDesc::Rationals
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        (self.numer().clone(), self.denom().clone())
    }
}

/// Residue class modulo the prime `P`, stored in `[0, P)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const PRIME_CHECK: () = assert!(is_prime(P), "Fp modulus must be prime");

    pub fn new(v: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME_CHECK;
        Fp(v.rem_euclid(P as i64) as u64)
    }

    pub fn residue(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1 % P);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl<const P: u64> fmt::Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 + P as u128 - rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F{P}");
        self * rhs.pow(P - 2)
    }
}

// Every nonzero element divides every element exactly.
impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in F{P}");
        Fp(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;

    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        let v = i64::from_str_radix(s, radix)?;
        Ok(Fp::new(v))
    }
}

impl<const P: u64> Field for Fp<P> {
    fn descriptor() -> FieldDesc {
        FieldDesc::PrimeField(P)
    }

    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let p = BigInt::from(P);
        let reduce = |v: &BigInt| -> Fp<P> {
            let r = ((v % &p) + &p) % &p;
            Fp(r.to_u64().expect("residue fits in u64"))
        };
        let d = reduce(den);
        if d.is_zero() {
            None
        } else {
            Some(reduce(num) / d)
        }
    }

    fn to_ratio(&self) -> (BigInt, BigInt) {
        (BigInt::from(self.0), BigInt::one())
    }

    fn elements() -> Option<Vec<Self>> {
        Some((0..P).map(Fp).collect())
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }
}

/// Formats a scalar as an exact fraction string (`"3"`, `"-1/2"`).
pub fn format_scalar<F: Field>(x: &F) -> String {
    let (n, d) = x.to_ratio();
    if d.is_one() {
        n.to_string()
    } else {
        format!("{n}/{d}")
    }
}

/// Parses `"n"` or `"n/d"` into a scalar of `F`.
pub fn parse_scalar<F: Field>(s: &str) -> Result<F, Error> {
    let s = s.trim();
    let bad = || Error::InvalidParameter(format!("bad scalar `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (
            n.trim().parse::<BigInt>().map_err(|_| bad())?,
            d.trim().parse::<BigInt>().map_err(|_| bad())?,
        ),
        None => (s.parse::<BigInt>().map_err(|_| bad())?, BigInt::one()),
    };
    if d.is_zero() {
        return Err(Error::InvalidParameter(format!("zero denominator in `{s}`")));
    }
    F::from_ratio(&n, &d)
        .ok_or_else(|| Error::InvalidParameter(format!("denominator of `{s}` is not invertible in {}", F::descriptor())))
}

#[cfg(test)]
mod tests {
    use super::*;

    type F7 = Fp<7>;

    #[test]
    fn prime_field_inverse() {
        for a in 1..7 {
            let x = F7::new(a);
            assert_eq!(x * x.inverse().unwrap(), F7::one());
        }
        assert!(F7::zero().inverse().is_none());
    }

    #[test]
    fn negative_residues_wrap() {
        assert_eq!(F7::new(-1).residue(), 6);
        assert_eq!(F7::from_i64(-15).residue(), 6);
        assert_eq!(-F7::new(0), F7::new(0));
    }

    #[test]
    fn ratio_reduction_mod_p() {
        let half = F7::from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half * F7::new(2), F7::one());
        assert!(F7::from_ratio(&BigInt::from(1), &BigInt::from(14)).is_none());
    }

    #[test]
    fn rational_canonical_form() {
        let x = BigRational::from_ratio(&BigInt::from(4), &BigInt::from(-6)).unwrap();
        assert_eq!(x.to_ratio(), (BigInt::from(-2), BigInt::from(3)));
        assert_eq!(format_scalar(&x), "-2/3");
        assert_eq!(parse_scalar::<BigRational>("-2/3").unwrap(), x);
    }

    #[test]
    fn field_desc_parse() {
        assert_eq!("Q".parse::<FieldDesc>().unwrap(), FieldDesc::Rationals);
        assert_eq!("F5".parse::<FieldDesc>().unwrap(), FieldDesc::PrimeField(5));
        assert!("F4".parse::<FieldDesc>().is_err());
        assert!("F1".parse::<FieldDesc>().is_err());
        assert!("R".parse::<FieldDesc>().is_err());
    }
}
