use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use super::PolyError;

/// Coefficients are exact rationals. Over a prime field they are kept as
/// integer representatives in `0..p`.
pub type Coeff = BigRational;

/// The ground field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoefficientField {
    Rationals,
    PrimeField(u64),
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl CoefficientField {
    pub fn prime_field(p: u64) -> Result<Self, PolyError> {
        if is_prime(p) {
            Ok(CoefficientField::PrimeField(p))
        } else {
            Err(PolyError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoefficientField::Rationals => 0,
            CoefficientField::PrimeField(p) => *p,
        }
    }

    /// Brings an arbitrary rational into canonical form for this field.
    /// Fails only over `F_p` when the denominator is divisible by `p`.
    pub fn normalize(&self, c: Coeff) -> Result<Coeff, PolyError> {
        match self {
            CoefficientField::Rationals => Ok(c),
            CoefficientField::PrimeField(p) => {
                let p = BigInt::from(*p);
                let num = c.numer().mod_floor(&p);
                let den = c.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(PolyError::DivisionByZero);
                }
                let inv = mod_inverse(&den, &p).ok_or(PolyError::DivisionByZero)?;
                Ok(BigRational::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    pub fn from_i64(&self, v: i64) -> Coeff {
        self.normalize(BigRational::from_integer(BigInt::from(v)))
            .expect("integers are always representable")
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.wrap(a + b)
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.wrap(a - b)
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.wrap(a * b)
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        self.wrap(-a)
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!a.is_zero(), "inverse of zero coefficient");
        match self {
            CoefficientField::Rationals => a.recip(),
            CoefficientField::PrimeField(p) => {
                let p = BigInt::from(*p);
                let v = mod_inverse(a.numer(), &p).expect("nonzero residue is invertible");
                BigRational::from_integer(v)
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    // integer representatives stay integers under +,-,*, so only a mod is needed
    fn wrap(&self, c: Coeff) -> Coeff {
        match self {
            CoefficientField::Rationals => c,
            CoefficientField::PrimeField(p) => {
                if c.is_integer() {
                    let p = BigInt::from(*p);
                    BigRational::from_integer(c.numer().mod_floor(&p))
                } else {
                    self.normalize(c).expect("closed operation")
                }
            }
        }
    }

    /// Reduces a rational coefficient modulo `p` as a `u64` residue.
    pub fn residue(c: &Coeff, p: u64) -> Option<u64> {
        let pb = BigInt::from(p);
        let num = c.numer().mod_floor(&pb);
        let den = c.denom().mod_floor(&pb);
        if den.is_zero() {
            return None;
        }
        let inv = mod_inverse(&den, &pb)?;
        (num * inv).mod_floor(&pb).to_u64()
    }
}

impl fmt::Display for CoefficientField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoefficientField::Rationals => write!(f, "QQ"),
            CoefficientField::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

fn mod_inverse(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(p).extended_gcd(p);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(p))
    } else {
        None
    }
}

/// Formats a coefficient as an integer or `p/q`.
pub fn format_coeff(c: &Coeff) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

pub(crate) fn is_one_abs(c: &Coeff) -> bool {
    c.abs().is_one()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Coeff {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn prime_field_normalizes_fractions() {
        let f = CoefficientField::prime_field(5).unwrap();
        // 1/2 = 3 mod 5
        assert_eq!(f.normalize(q(1, 2)).unwrap(), q(3, 1));
        assert_eq!(f.normalize(q(-1, 1)).unwrap(), q(4, 1));
        assert!(f.normalize(q(1, 5)).is_err());
    }

    #[test]
    fn inverse_in_prime_field() {
        let f = CoefficientField::PrimeField(7);
        for a in 1..7 {
            let c = f.from_i64(a);
            assert_eq!(f.mul(&c, &f.inv(&c)), f.from_i64(1));
        }
    }

    #[test]
    fn composite_rejected() {
        assert!(CoefficientField::prime_field(9).is_err());
        assert!(CoefficientField::prime_field(1).is_err());
    }
}
