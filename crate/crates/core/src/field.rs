//! Exact scalars over the rationals or a prime field.

use crate::error::{Error, Result};
use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// The coefficient field of a presentation: the rationals or GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u32),
}

const MAX_PRIME: u64 = (1 << 31) - 1;

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p % 2 == 0 {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldSpec {
    /// Builds GF(p), rejecting composite or oversized moduli.
    pub fn prime_field(p: u64) -> Result<Self> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p as u32))
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(p) => Scalar::Fp { p: *p, value: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            FieldSpec::PrimeField(p) => {
                let p64 = *p as i64;
                let r = ((v % p64) + p64) % p64;
                Scalar::Fp { p: *p, value: r as u32 }
            }
        }
    }

    /// Parses "a/b" (rationals) or a decimal residue (GF(p)).
    pub fn parse(&self, s: &str) -> Result<Scalar> {
        let s = s.trim();
        match self {
            FieldSpec::Rationals => {
                let r: BigRational = s
                    .parse()
                    .map_err(|_| Error::Invalid(format!("cannot parse rational `{s}`")))?;
                Ok(Scalar::Rat(r))
            }
            FieldSpec::PrimeField(p) => {
                let v: i64 = s
                    .parse()
                    .map_err(|_| Error::Invalid(format!("cannot parse GF({p}) residue `{s}`")))?;
                Ok(self.from_i64(v))
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF {p}"),
        }
    }
}

/// An element of a [`FieldSpec`]. Prime-field values carry their modulus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { p: u32, value: u32 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rat(_) => FieldSpec::Rationals,
            Scalar::Fp { p, .. } => FieldSpec::PrimeField(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { p: *p, value: ((*a as u64 + *b as u64) % *p as u64) as u32 }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { p, value } => {
                Scalar::Fp { p: *p, value: if *value == 0 { 0 } else { p - value } }
            }
        }
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, value: a }, Scalar::Fp { p: q, value: b }) => {
                assert_eq!(p, q, "mixed prime fields");
                Scalar::Fp { p: *p, value: ((*a as u64 * *b as u64) % *p as u64) as u32 }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                Scalar::Rat(a.recip())
            }
            Scalar::Fp { p, value } => {
                assert!(*value != 0, "inverse of zero");
                // Fermat: value^(p-2) mod p.
                let mut base = *value as u64;
                let mut exp = *p as u64 - 2;
                let m = *p as u64;
                let mut acc = 1u64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % m;
                    }
                    base = base * base % m;
                    exp >>= 1;
                }
                Scalar::Fp { p: *p, value: acc as u32 }
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }

    /// Signed integer preimage of least magnitude, used by the iso search to
    /// bias random combinations away from zero.
    pub fn from_signed(field: &FieldSpec, v: i64) -> Scalar {
        field.from_i64(v)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

/// Renders a scalar as a human-readable coefficient prefix: "" for 1,
/// "-" for -1, "c·" otherwise.
pub fn coeff_prefix(s: &Scalar) -> String {
    if s.is_one() {
        String::new()
    } else if let Scalar::Rat(r) = s {
        if (-r).is_one() {
            "-".to_string()
        } else {
            format!("{s}·")
        }
    } else {
        format!("{s}·")
    }
}

pub(crate) fn rat_is_negative(s: &Scalar) -> bool {
    match s {
        Scalar::Rat(r) => r.is_negative(),
        Scalar::Fp { .. } => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_check_accepts_primes_and_rejects_composites() {
        assert!(FieldSpec::prime_field(2).is_ok());
        assert!(FieldSpec::prime_field(5).is_ok());
        assert!(FieldSpec::prime_field(2147483647).is_ok()); // 2^31 - 1 is prime
        assert!(FieldSpec::prime_field(1).is_err());
        assert!(FieldSpec::prime_field(91).is_err()); // 7 * 13
        assert!(FieldSpec::prime_field(1 << 32).is_err());
    }

    #[test]
    fn gf5_arithmetic() {
        let f = FieldSpec::prime_field(5).unwrap();
        let a = f.from_i64(3);
        let b = f.from_i64(4);
        assert_eq!(a.add(&b), f.from_i64(2));
        assert_eq!(a.mul(&b), f.from_i64(2));
        assert_eq!(a.inv().mul(&a), f.one());
        assert_eq!(f.from_i64(-1), f.from_i64(4));
    }

    #[test]
    fn rational_parse_and_display() {
        let f = FieldSpec::Rationals;
        let x = f.parse("2/3").unwrap();
        let y = f.parse("-1/3").unwrap();
        assert_eq!(x.add(&y).to_string(), "1/3");
        assert_eq!(x.mul(&f.from_i64(3)).to_string(), "2");
    }
}
