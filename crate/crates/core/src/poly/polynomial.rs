use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::field::{format_coeff, is_one_abs};
use super::{Coeff, Monomial, PolyError, Ring};

/// A polynomial with its terms kept sorted descending in the ring's order.
/// No zero coefficients are ever stored.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Coeff::one())
    }

    pub fn constant(ring: &Ring, c: Coeff) -> Self {
        Self::from_terms(ring, vec![(ring.one_monomial(), c)])
    }

    pub fn from_i64(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(c))
    }

    pub fn var(ring: &Ring, index: usize) -> Self {
        assert!(index < ring.nvars(), "variable index out of range");
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), index, 1), Coeff::one())],
        }
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Coeff) -> Self {
        Self::from_terms(ring, vec![(m, c)])
    }

    /// Builds a polynomial from arbitrary terms: like terms are merged,
    /// coefficients normalized into the field, zeros dropped.
    pub fn from_terms(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        let field = ring.field();
        let mut acc: HashMap<Monomial, Coeff> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity mismatch");
            let e = acc.entry(m).or_insert_with(Coeff::zero);
            *e += c;
        }
        let mut out: Vec<(Monomial, Coeff)> = acc
            .into_iter()
            .filter_map(|(m, c)| {
                let c = field.normalize(c).expect("coefficient not representable in field");
                (!c.is_zero()).then_some((m, c))
            })
            .collect();
        let order = ring.order();
        out.sort_by(|a, b| order.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms: out,
        }
    }

    /// Trusted constructor: terms already sorted, normalized, nonzero.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<(Monomial, Coeff)>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Coeff)> {
        self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn coeff_of(&self, m: &Monomial) -> Coeff {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Coeff::zero)
    }

    /// Occurrence flag per ring variable.
    pub fn occurring(&self) -> Vec<bool> {
        let mut occ = vec![false; self.ring.nvars()];
        for (m, _) in &self.terms {
            for i in m.support() {
                occ[i] = true;
            }
        }
        occ
    }

    pub fn contains_var(&self, v: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(v) > 0)
    }

    pub fn degree_in(&self, v: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.add_scaled(other, &Coeff::one()))
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let m1 = self.ring.field().from_i64(-1);
        Ok(self.add_scaled(other, &m1))
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    /// `self + c * other`, merging the sorted term lists.
    pub fn add_scaled(&self, other: &Polynomial, c: &Coeff) -> Polynomial {
        self.add_scaled_shifted(other, c, None)
    }

    /// `self + c * m * other`.
    pub fn add_scaled_shifted(
        &self,
        other: &Polynomial,
        c: &Coeff,
        m: Option<&Monomial>,
    ) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let field = self.ring.field();
        let order = self.ring.order();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        let shift = |t: &Monomial| match m {
            Some(m) => t.mul(m),
            None => t.clone(),
        };
        let mut next_b: Option<Monomial> = b.first().map(|(t, _)| shift(t));
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), next_b.as_ref()) {
                (Some((ma, _)), Some(mb)) => order.cmp(ma, mb),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let mb = next_b.take().unwrap();
                    out.push((mb, field.mul(c, &b[j].1)));
                    j += 1;
                    next_b = b.get(j).map(|(t, _)| shift(t));
                }
                Ordering::Equal => {
                    let mb = next_b.take().unwrap();
                    let s = field.add(&a[i].1, &field.mul(c, &b[j].1));
                    if !s.is_zero() {
                        out.push((mb, s));
                    }
                    i += 1;
                    j += 1;
                    next_b = b.get(j).map(|(t, _)| shift(t));
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    fn mul_unchecked(&self, other: &Polynomial) -> Polynomial {
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        if other.terms.len() == 1 {
            let (m, c) = &other.terms[0];
            return self.mul_term(m, c);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            return other.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Coeff> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert_with(Coeff::zero);
                *e += ca * cb;
            }
        }
        Polynomial::from_terms(&self.ring, acc.into_iter().collect())
    }

    /// Multiplication by a single term; order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(t, d)| (t.mul(m), field.mul(c, d)))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        self.mul_term(&self.ring.one_monomial(), c)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&self.ring.field().from_i64(-1))
    }

    pub fn pow(&self, n: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => {
                let inv = self.ring.field().inv(c);
                self.scale(&inv)
            }
        }
    }

    /// Evaluates at images of every ring variable. The images must all live in
    /// one target ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.ring.nvars() {
            return Err(PolyError::MissingImage(
                self.ring
                    .variables()
                    .get(images.len())
                    .cloned()
                    .unwrap_or_default(),
            ));
        }
        let target = match images.first() {
            Some(p) => p.ring.clone(),
            None => self.ring.clone(),
        };
        if images.iter().any(|p| !same_ring(&p.ring, &target)) {
            return Err(PolyError::RingMismatch);
        }
        let tf = target.field();
        let mut power_cache: Vec<Vec<Polynomial>> = vec![Vec::new(); images.len()];
        let mut acc: HashMap<Monomial, Coeff> = HashMap::new();
        for (m, c) in &self.terms {
            let c = tf
                .normalize(c.clone())
                .map_err(|_| PolyError::CoefficientNotRepresentable)?;
            let mut term = Polynomial::constant(&target, c);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut power_cache[v];
                if cache.is_empty() {
                    cache.push(Polynomial::one(&target));
                }
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&images[v]);
                    cache.push(next);
                }
                term = term.mul_unchecked(&cache[e as usize]);
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_insert_with(Coeff::zero) += tc;
            }
        }
        Ok(Polynomial::from_terms(&target, acc.into_iter().collect()))
    }

    /// Substitutes only the listed variables by polynomials of the same ring.
    pub fn substitute_some(&self, images: &[(usize, Polynomial)]) -> Polynomial {
        if images.is_empty() {
            return self.clone();
        }
        let full: Vec<Polynomial> = (0..self.ring.nvars())
            .map(|v| {
                images
                    .iter()
                    .find(|(w, _)| *w == v)
                    .map(|(_, p)| p.clone())
                    .unwrap_or_else(|| Polynomial::var(&self.ring, v))
            })
            .collect();
        self.substitute(&full).expect("images share the ring")
    }

    /// Sets a variable to zero, i.e. drops every term that contains it.
    pub fn kill_var(&self, v: usize) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exp(v) == 0)
                .cloned()
                .collect(),
        }
    }

    /// Moves the polynomial into another ring, sending variable `i` to
    /// variable `map[i]` of the target. Coefficients are re-normalized.
    pub fn rename_into(&self, target: &Ring, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.ring.nvars());
        let n = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; n];
                for (i, &x) in m.exponents().iter().enumerate() {
                    if x > 0 {
                        e[map[i]] += x;
                    }
                }
                (Monomial::from_exponents(e), c.clone())
            })
            .collect();
        Polynomial::from_terms(target, terms)
    }

    /// Value at a point of `F_p^n`.
    pub fn eval_mod(&self, point: &[u64], p: u64) -> u64 {
        let mut total: u64 = 0;
        for (m, c) in &self.terms {
            let mut v = super::CoefficientField::residue(c, p).expect("coefficient defined mod p");
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    v = v * pow_mod(point[i], e as u64, p) % p;
                }
            }
            total = (total + v) % p;
        }
        total
    }
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.variables();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let abs = c.abs();
            let mut parts: Vec<String> = Vec::new();
            if !is_one_abs(&abs) || m.is_one() {
                parts.push(format_coeff(&abs));
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => parts.push(vars[i].clone()),
                    _ => parts.push(format!("{}^{}", vars[i], e)),
                }
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl<'a> std::ops::Add for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> std::ops::Sub for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomial ring mismatch")
    }
}

impl<'a> std::ops::Mul for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &'a Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomial ring mismatch")
    }
}

impl std::ops::Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::neg(self)
    }
}
