use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A Laurent polynomial in the Lefschetz class `L`, stored as exponent to
/// nonzero integer coefficient.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MotiveClass {
    coeffs: BTreeMap<i64, BigInt>,
}

impl MotiveClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `L`.
    pub fn lefschetz() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * L^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        let c = c.into();
        let mut coeffs = BTreeMap::new();
        if !c.is_zero() {
            coeffs.insert(e, c);
        }
        MotiveClass { coeffs }
    }

    pub fn l_pow(e: i64) -> Self {
        Self::monomial(1, e)
    }

    pub fn from_integer(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// From `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut out = MotiveClass::zero();
        for (e, c) in terms {
            out = &out + &MotiveClass::monomial(c, e);
        }
        out
    }

    pub fn coeffs(&self) -> &BTreeMap<i64, BigInt> {
        &self.coeffs
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.coeffs.get(&e).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Top exponent; `None` stands for the dimension of the empty class.
    pub fn dim(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// `Some((sign, e))` when the class is `+-L^e`.
    pub fn as_unit(&self) -> Option<(i8, i64)> {
        if self.coeffs.len() != 1 {
            return None;
        }
        let (e, c) = self.coeffs.iter().next().expect("one term");
        if c.is_one() {
            Some((1, *e))
        } else if (-c).is_one() {
            Some((-1, *e))
        } else {
            None
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        MotiveClass {
            coeffs: self.coeffs.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MotiveClass {
            coeffs: self.coeffs.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact value at `L = q`.
    pub fn evaluate_at_q(&self, q: i64) -> BigRational {
        let q = BigRational::from_integer(BigInt::from(q));
        let mut acc = BigRational::zero();
        for (e, c) in &self.coeffs {
            let pw = if *e >= 0 {
                num_traits::pow(q.clone(), *e as usize)
            } else {
                num_traits::pow(q.recip(), (-*e) as usize)
            };
            acc += BigRational::from_integer(c.clone()) * pw;
        }
        acc
    }

    /// Exact division by a unit `+-L^e`.
    pub fn div_unit(&self, sign: i8, e: i64) -> Self {
        let s = if sign < 0 { -self.clone() } else { self.clone() };
        s.shift(-e)
    }

    fn insert_add(&mut self, e: i64, c: BigInt) {
        let entry = self.coeffs.entry(e).or_default();
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&e);
        }
    }
}

impl Add for &MotiveClass {
    type Output = MotiveClass;
    fn add(self, rhs: &MotiveClass) -> MotiveClass {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.insert_add(*e, c.clone());
        }
        out
    }
}

impl Sub for &MotiveClass {
    type Output = MotiveClass;
    fn sub(self, rhs: &MotiveClass) -> MotiveClass {
        let mut out = self.clone();
        for (e, c) in &rhs.coeffs {
            out.insert_add(*e, -c.clone());
        }
        out
    }
}

impl Mul for &MotiveClass {
    type Output = MotiveClass;
    fn mul(self, rhs: &MotiveClass) -> MotiveClass {
        let mut out = MotiveClass::zero();
        for (e1, c1) in &self.coeffs {
            for (e2, c2) in &rhs.coeffs {
                out.insert_add(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for MotiveClass {
    type Output = MotiveClass;
    fn neg(self) -> MotiveClass {
        MotiveClass {
            coeffs: self.coeffs.into_iter().map(|(e, c)| (e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MotiveClass {
            type Output = MotiveClass;
            fn $m(self, rhs: MotiveClass) -> MotiveClass {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Descending powers, e.g. `3L^2 - 2L + L^-1`.
impl fmt::Display for MotiveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.coeffs.iter().rev().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mono = match *e {
                0 => String::new(),
                1 => "L".to_string(),
                e => format!("L^{e}"),
            };
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}{mono}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct ClassJson {
    #[serde(rename = "L_coeffs")]
    l_coeffs: BTreeMap<String, serde_json::Value>,
}

fn int_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::from(c.to_string()),
    }
}

impl Serialize for MotiveClass {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        // keys sorted numerically, not lexicographically
        use serde::ser::SerializeMap;
        struct Inner<'a>(&'a MotiveClass);
        impl Serialize for Inner<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.coeffs.len()))?;
                for (e, c) in &self.0.coeffs {
                    m.serialize_entry(&e.to_string(), &int_json(c))?;
                }
                m.end()
            }
        }
        let mut m = s.serialize_map(Some(1))?;
        m.serialize_entry("L_coeffs", &Inner(self))?;
        m.end()
    }
}

impl<'de> Deserialize<'de> for MotiveClass {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let j = ClassJson::deserialize(d)?;
        let mut out = MotiveClass::zero();
        for (k, v) in j.l_coeffs {
            let e: i64 = k.parse().map_err(D::Error::custom)?;
            let c: BigInt = match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| D::Error::custom("coefficient must be an integer"))?,
                serde_json::Value::String(s) => s.parse().map_err(D::Error::custom)?,
                _ => return Err(D::Error::custom("coefficient must be an integer")),
            };
            out = &out + &MotiveClass::monomial(c, e);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l() -> MotiveClass {
        MotiveClass::lefschetz()
    }

    #[test]
    fn arithmetic() {
        assert_eq!(&l() * &MotiveClass::l_pow(-1), MotiveClass::one());
        let c = MotiveClass::from_terms([(2, 3), (1, -2)]);
        assert_eq!(c.to_string(), "3L^2 - 2L");
        assert_eq!((&c * &c).to_string(), "9L^4 - 12L^3 + 4L^2");
        assert_eq!((&c - &c), MotiveClass::zero());
    }

    #[test]
    fn dims() {
        assert_eq!(MotiveClass::from_terms([(3, 1), (1, -1)]).dim(), Some(3));
        assert_eq!(MotiveClass::zero().dim(), None);
        assert_eq!(MotiveClass::from_terms([(2, 3), (1, -2)]).dim(), Some(2));
    }

    #[test]
    fn evaluation() {
        let c = MotiveClass::from_terms([(2, 3), (1, -2)]);
        assert_eq!(c.evaluate_at_q(3), BigRational::from_integer(21.into()));
        assert_eq!(
            MotiveClass::l_pow(-1).evaluate_at_q(2),
            BigRational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn json() {
        let c = MotiveClass::from_terms([(-1, 2), (0, 1), (10, -4)]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"L_coeffs":{"-1":2,"0":1,"10":-4}}"#);
        let back: MotiveClass = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
    }

    #[test]
    fn units() {
        assert_eq!(MotiveClass::monomial(-1, 3).as_unit(), Some((-1, 3)));
        assert_eq!(MotiveClass::monomial(2, 0).as_unit(), None);
    }
}
