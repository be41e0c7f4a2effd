use serde::{Deserialize, Serialize};

use super::{MotiveClass, MotiveError};

/// Power series in `t` over `Z[L, L^-1]`, truncated after `t^T`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotiveSeries {
    #[serde(rename = "T")]
    t: usize,
    coeffs: Vec<MotiveClass>,
}

impl MotiveSeries {
    /// Pads with zeros or truncates so that exactly `T + 1` coefficients remain.
    pub fn new(t: usize, mut coeffs: Vec<MotiveClass>) -> Self {
        coeffs.resize(t + 1, MotiveClass::zero());
        MotiveSeries { t, coeffs }
    }

    pub fn zero(t: usize) -> Self {
        Self::new(t, Vec::new())
    }

    /// `c * (1 + t + ... + t^T)`.
    pub fn geometric(t: usize, c: &MotiveClass) -> Self {
        Self::new(t, vec![c.clone(); t + 1])
    }

    pub fn order(&self) -> usize {
        self.t
    }

    pub fn coeffs(&self) -> &[MotiveClass] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &MotiveClass {
        &self.coeffs[n]
    }

    pub fn truncate(&self, t: usize) -> Self {
        assert!(t <= self.t, "cannot extend a truncated series");
        Self::new(t, self.coeffs[..=t].to_vec())
    }

    fn check(&self, other: &Self) -> Result<(), MotiveError> {
        if self.t != other.t {
            return Err(MotiveError::IncompatibleTruncation(self.t, other.t));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, MotiveError> {
        self.check(other)?;
        Ok(Self::new(
            self.t,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        ))
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MotiveError> {
        self.check(other)?;
        Ok(Self::new(
            self.t,
            self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn mul(&self, other: &Self) -> Result<Self, MotiveError> {
        self.check(other)?;
        let mut out = vec![MotiveClass::zero(); self.t + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.t - i].iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Ok(Self::new(self.t, out))
    }

    pub fn scale(&self, c: &MotiveClass) -> Self {
        Self::new(self.t, self.coeffs.iter().map(|a| a * c).collect())
    }

    /// `t -> t^r`; the truncation order becomes `r * T`.
    pub fn substitute_t_power(&self, r: usize) -> Self {
        assert!(r >= 1, "substitution exponent must be positive");
        let mut out = vec![MotiveClass::zero(); self.t * r + 1];
        for (n, c) in self.coeffs.iter().enumerate() {
            out[n * r] = c.clone();
        }
        Self::new(self.t * r, out)
    }

    /// Keeps the terms `t^n` with `n = offset (mod q)`.
    pub fn star_filter(&self, q: usize, offset: usize) -> Self {
        assert!(q >= 1, "filter modulus must be positive");
        Self::new(
            self.t,
            self.coeffs
                .iter()
                .enumerate()
                .map(|(n, c)| if n % q == offset % q { c.clone() } else { MotiveClass::zero() })
                .collect(),
        )
    }

    /// `t^b * L^a * S`, truncated at the same order.
    pub fn shifted(&self, a: i64, b: usize) -> Self {
        let mut out = vec![MotiveClass::zero(); b.min(self.t + 1)];
        out.extend(self.coeffs.iter().map(|c| c.shift(a)));
        Self::new(self.t, out)
    }

    /// Truncated value at `t = L^-1`.
    pub fn evaluate_at_l_inverse(&self) -> MotiveClass {
        self.coeffs
            .iter()
            .enumerate()
            .fold(MotiveClass::zero(), |acc, (n, c)| &acc + &c.shift(-(n as i64)))
    }
}

/// Quotient of two polynomials in `t` with Laurent coefficients; the
/// denominator has constant term `+-L^a`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotiveRational {
    num: Vec<MotiveClass>,
    den: Vec<MotiveClass>,
}

impl MotiveRational {
    pub fn new(num: Vec<MotiveClass>, den: Vec<MotiveClass>) -> Result<Self, MotiveError> {
        let num = trim(num);
        let den = trim(den);
        match den.first() {
            Some(c) if c.as_unit().is_some() => Ok(MotiveRational { num, den }),
            _ => Err(MotiveError::NonUnitDenominator),
        }
    }

    pub fn numerator(&self) -> &[MotiveClass] {
        &self.num
    }

    pub fn denominator(&self) -> &[MotiveClass] {
        &self.den
    }

    /// The unique series `S` with `S * den = num` up to `t^T`.
    pub fn expand(&self, t: usize) -> MotiveSeries {
        let (sign, e) = self.den[0].as_unit().expect("unit constant term");
        let mut s: Vec<MotiveClass> = Vec::with_capacity(t + 1);
        for n in 0..=t {
            let mut acc = self.num.get(n).cloned().unwrap_or_default();
            for k in 1..self.den.len().min(n + 1) {
                acc = &acc - &(&self.den[k] * &s[n - k]);
            }
            s.push(acc.div_unit(sign, e));
        }
        MotiveSeries::new(t, s)
    }

    /// Whether the denominator divides `target` in `Z[L, L^-1][t]`.
    pub fn denominator_divides(&self, target: &[MotiveClass]) -> bool {
        tpoly_divides(&self.den, target)
    }
}

/// Product of polynomials in `t`.
pub fn tpoly_mul(a: &[MotiveClass], b: &[MotiveClass]) -> Vec<MotiveClass> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![MotiveClass::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = &out[i + j] + &(x * y);
        }
    }
    trim(out)
}

/// Whether `a` divides `b`; `a` must have a unit constant term.
pub fn tpoly_divides(a: &[MotiveClass], b: &[MotiveClass]) -> bool {
    let a = trim(a.to_vec());
    let b = trim(b.to_vec());
    if b.is_empty() {
        return true;
    }
    let Some((sign, e)) = a.first().and_then(|c| c.as_unit()) else {
        return false;
    };
    if a.len() > b.len() {
        return false;
    }
    let qlen = b.len() - a.len() + 1;
    let mut q: Vec<MotiveClass> = Vec::with_capacity(qlen);
    for n in 0..qlen {
        let mut acc = b[n].clone();
        for k in 1..a.len().min(n + 1) {
            acc = &acc - &(&a[k] * &q[n - k]);
        }
        q.push(acc.div_unit(sign, e));
    }
    tpoly_mul(&a, &q) == b
}

fn trim(mut v: Vec<MotiveClass>) -> Vec<MotiveClass> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(terms: &[(i64, i64)]) -> MotiveClass {
        MotiveClass::from_terms(terms.iter().copied())
    }

    fn ints(v: &[i64]) -> Vec<MotiveClass> {
        v.iter().map(|&x| MotiveClass::from_integer(x)).collect()
    }

    #[test]
    fn star_filter_and_substitution() {
        let s = MotiveSeries::new(3, ints(&[1, 1, 1, 1]));
        assert_eq!(s.star_filter(2, 0), MotiveSeries::new(3, ints(&[1, 0, 1, 0])));
        let u = MotiveSeries::new(1, ints(&[1, 1]));
        assert_eq!(u.substitute_t_power(2), MotiveSeries::new(2, ints(&[1, 0, 1])));
    }

    #[test]
    fn evaluation_at_l_inverse() {
        let s = MotiveSeries::geometric(3, &MotiveClass::l_pow(-1));
        assert_eq!(
            s.evaluate_at_l_inverse(),
            c(&[(-1, 1), (-2, 1), (-3, 1), (-4, 1)])
        );
    }

    #[test]
    fn expansions() {
        let geo = MotiveRational::new(ints(&[1]), ints(&[1, -1])).unwrap();
        assert_eq!(geo.expand(3), MotiveSeries::new(3, ints(&[1, 1, 1, 1])));

        let a1 = MotiveRational::new(vec![MotiveClass::l_pow(-1)], ints(&[1, -1])).unwrap();
        assert_eq!(a1.expand(2), MotiveSeries::geometric(2, &MotiveClass::l_pow(-1)));

        // L + (L-1)s + (L^2-L)s^5 + L^2 s^6 over (1 - L s^6)(1 - s)
        let num = vec![
            c(&[(1, 1)]),
            c(&[(1, 1), (0, -1)]),
            MotiveClass::zero(),
            MotiveClass::zero(),
            MotiveClass::zero(),
            c(&[(2, 1), (1, -1)]),
            c(&[(2, 1)]),
        ];
        let den = tpoly_mul(
            &[MotiveClass::one(), MotiveClass::zero(), MotiveClass::zero(), MotiveClass::zero(),
              MotiveClass::zero(), MotiveClass::zero(), -MotiveClass::lefschetz()],
            &ints(&[1, -1]),
        );
        let theta = MotiveRational::new(num, den).unwrap();
        let s = theta.expand(6);
        assert_eq!(s.coeff(0), &c(&[(1, 1)]));
        assert_eq!(s.coeff(1), &c(&[(1, 2), (0, -1)]));
    }

    #[test]
    fn non_unit_denominator_rejected() {
        assert!(MotiveRational::new(ints(&[1]), ints(&[2, 1])).is_err());
        assert!(MotiveRational::new(ints(&[1]), vec![]).is_err());
    }

    #[test]
    fn divisibility() {
        let a = ints(&[1, -1]);
        let b = tpoly_mul(&a, &[MotiveClass::one(), MotiveClass::lefschetz()]);
        assert!(tpoly_divides(&a, &b));
        assert!(!tpoly_divides(&b, &a));
        assert!(!tpoly_divides(&ints(&[1, -2]), &a));
    }

    #[test]
    fn shift() {
        let s = MotiveSeries::new(3, ints(&[1, 2, 3, 4]));
        assert_eq!(
            s.shifted(1, 1),
            MotiveSeries::new(3, vec![MotiveClass::zero(), c(&[(1, 1)]), c(&[(1, 2)]), c(&[(1, 3)])])
        );
    }

    #[test]
    fn json_layout() {
        let s = MotiveSeries::new(1, ints(&[1, 0]));
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"T":1,"coeffs":[{"L_coeffs":{"0":1}},{"L_coeffs":{}}]}"#
        );
    }
}
