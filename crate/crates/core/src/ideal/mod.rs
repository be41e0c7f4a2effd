//! Ideals, Groebner bases and the queries built on them.

mod groebner;
mod renaming;

pub use groebner::{groebner_with_budget, interreduce, GroebnerBasis, GroebnerBudget};
pub use renaming::{equal_up_to_renaming, equal_under_mapping, RenamingBudget, VariableBijection};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::poly::{parse, same_ring, CoefficientField, Monomial, PolyError, PolyRing, Polynomial, Ring};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IdealError {
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("generator lives in a different ring")]
    RingMismatch,
    #[error("budget exceeded: {what} (limit {limit})")]
    BudgetExceeded { what: &'static str, limit: u64 },
    #[error("quotient ring is infinite-dimensional")]
    InfiniteQuotient,
    #[error("ideal power with exponent 0 requested")]
    ZeroPower,
    #[error("ideals are over different coefficient fields")]
    FieldMismatch,
}

/// An ideal given by generators. The generator list is presentation data;
/// equality of ideals is decided with [`Ideal::equals`].
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Self, IdealError> {
        if generators.iter().any(|g| !same_ring(g.ring(), &ring)) {
            return Err(IdealError::RingMismatch);
        }
        Ok(Self::new_unchecked(ring, generators))
    }

    pub(crate) fn new_unchecked(ring: Ring, generators: Vec<Polynomial>) -> Self {
        Ideal {
            ring,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        }
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: Vec::new(),
        }
    }

    pub fn from_strs<S: AsRef<str>>(ring: &Ring, gens: &[S]) -> Result<Self, IdealError> {
        let gens = gens
            .iter()
            .map(|s| parse(s.as_ref(), ring))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self::new_unchecked(ring.clone(), gens))
    }

    /// The ideal generated by all variables of the ring.
    pub fn maximal_at_origin(ring: &Ring) -> Self {
        Ideal {
            ring: ring.clone(),
            generators: (0..ring.nvars()).map(|i| Polynomial::var(ring, i)).collect(),
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn groebner(&self) -> Result<GroebnerBasis, IdealError> {
        groebner_with_budget(self, GroebnerBudget::default())
    }

    pub fn groebner_with_budget(&self, budget: GroebnerBudget) -> Result<GroebnerBasis, IdealError> {
        groebner_with_budget(self, budget)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(IdealError::RingMismatch);
        }
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ok(Ideal::new_unchecked(self.ring.clone(), g))
    }

    /// `I^n`: generated by all `n`-fold products of generators.
    pub fn power(&self, n: u32) -> Result<Ideal, IdealError> {
        if n == 0 {
            return Err(IdealError::ZeroPower);
        }
        // multisets of generator indices of size n
        let k = self.generators.len();
        let mut out: Vec<Polynomial> = Vec::new();
        let mut idx = vec![0usize; n as usize];
        if k == 0 {
            return Ok(Ideal::zero(&self.ring));
        }
        loop {
            let mut p = self.generators[idx[0]].clone();
            for &i in &idx[1..] {
                p = &p * &self.generators[i];
            }
            if !out.contains(&p) {
                out.push(p);
            }
            // next non-decreasing index tuple
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    return Ok(Ideal::new_unchecked(self.ring.clone(), out));
                }
                pos -= 1;
                if idx[pos] + 1 < k {
                    let v = idx[pos] + 1;
                    for slot in idx.iter_mut().skip(pos) {
                        *slot = v;
                    }
                    break;
                }
            }
        }
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool, IdealError> {
        self.groebner()?.contains(p)
    }

    /// Equality as ideals, by mutual membership against reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool, IdealError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(IdealError::RingMismatch);
        }
        let a = self.groebner()?;
        let b = other.groebner()?;
        Ok(a.basis() == b.basis())
    }

    /// Krull dimension of `k[x]/I`, or -1 for the unit ideal.
    pub fn dimension(&self) -> Result<i64, IdealError> {
        let g = self.groebner()?;
        dimension_of(&g)
    }

    /// Variables occurring in at least one generator, by index.
    pub fn occurring_variables(&self) -> Vec<usize> {
        let mut occ = vec![false; self.ring.nvars()];
        for g in &self.generators {
            for (i, o) in g.occurring().into_iter().enumerate() {
                occ[i] |= o;
            }
        }
        occ.into_iter()
            .enumerate()
            .filter(|(_, o)| *o)
            .map(|(i, _)| i)
            .collect()
    }

    /// Restricts to the variables that occur, in ring order, returning the
    /// compacted ideal and the original index of each new variable.
    pub fn compact(&self) -> (Ideal, Vec<usize>) {
        let occ = self.occurring_variables();
        let names: Vec<&str> = occ
            .iter()
            .map(|&i| self.ring.variables()[i].as_str())
            .collect();
        let ring = PolyRing::new(self.ring.field(), &names, self.ring.order())
            .expect("subset of valid variables");
        let mut map = vec![usize::MAX; self.ring.nvars()];
        for (k, &i) in occ.iter().enumerate() {
            map[i] = k;
        }
        let gens = self
            .generators
            .iter()
            .map(|g| g.rename_into(&ring, &map.iter().map(|&m| if m == usize::MAX { 0 } else { m }).collect::<Vec<_>>()))
            .collect();
        (Ideal::new_unchecked(ring, gens), occ)
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            field: self.ring.field(),
            variables: self.ring.variables().to_vec(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
        }
    }

    pub fn from_json(j: &IdealJson) -> Result<Ideal, IdealError> {
        let ring = PolyRing::new(j.field, &j.variables, crate::poly::MonomialOrder::DegRevLex)?;
        Ideal::from_strs(&ring, &j.generators)
    }
}

/// Serialized form of an ideal.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdealJson {
    pub field: CoefficientField,
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

const MAX_INDEPENDENT_SUBSETS: u64 = 1 << 20;

/// Krull dimension from the leading monomials of a Groebner basis: the size
/// of a maximal set of variables containing the support of no leading
/// monomial.
pub fn dimension_of(g: &GroebnerBasis) -> Result<i64, IdealError> {
    if g.is_unit() {
        return Ok(-1);
    }
    let n = g.ring().nvars();
    let lms = g.leading_monomials();
    let mut in_lm = vec![false; n];
    for m in &lms {
        for i in m.support() {
            in_lm[i] = true;
        }
    }
    let free = in_lm.iter().filter(|b| !**b).count() as i64;
    let vars: Vec<usize> = (0..n).filter(|&i| in_lm[i]).collect();
    if vars.is_empty() {
        return Ok(free);
    }
    let supports: Vec<Vec<usize>> = lms
        .iter()
        .map(|m| {
            m.support()
                .map(|i| vars.iter().position(|&v| v == i).unwrap())
                .collect()
        })
        .collect();
    let mut best = 0usize;
    let mut chosen = vec![false; vars.len()];
    let mut visited = 0u64;
    search_independent(0, &supports, &mut chosen, 0, &mut best, &mut visited)?;
    Ok(free + best as i64)
}

fn search_independent(
    pos: usize,
    supports: &[Vec<usize>],
    chosen: &mut Vec<bool>,
    size: usize,
    best: &mut usize,
    visited: &mut u64,
) -> Result<(), IdealError> {
    *visited += 1;
    if *visited > MAX_INDEPENDENT_SUBSETS {
        return Err(IdealError::BudgetExceeded {
            what: "independent-set search",
            limit: MAX_INDEPENDENT_SUBSETS,
        });
    }
    let n = chosen.len();
    if size + (n - pos) <= *best {
        return Ok(());
    }
    if pos == n {
        *best = size;
        return Ok(());
    }
    chosen[pos] = true;
    let ok = supports
        .iter()
        .all(|s| !s.iter().all(|&i| i <= pos && chosen[i]));
    if ok {
        search_independent(pos + 1, supports, chosen, size + 1, best, visited)?;
    }
    chosen[pos] = false;
    search_independent(pos + 1, supports, chosen, size, best, visited)
}

/// Monomials outside the leading-term ideal, ascending in the ring order.
pub fn standard_monomials(g: &GroebnerBasis) -> Result<Vec<Monomial>, IdealError> {
    if g.is_unit() {
        return Ok(Vec::new());
    }
    let n = g.ring().nvars();
    let lms = g.leading_monomials();
    let mut bounds = vec![0u32; n];
    for (v, bound) in bounds.iter_mut().enumerate() {
        *bound = lms
            .iter()
            .filter_map(|m| m.as_pure_power().filter(|(i, _)| *i == v).map(|(_, e)| e))
            .min()
            .ok_or(IdealError::InfiniteQuotient)?;
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    enumerate_standard(0, &bounds, &lms, &mut cur, &mut out);
    let order = g.ring().order();
    out.sort_by(|a, b| order.cmp(a, b));
    Ok(out)
}

fn enumerate_standard(
    v: usize,
    bounds: &[u32],
    lms: &[Monomial],
    cur: &mut Vec<u32>,
    out: &mut Vec<Monomial>,
) {
    if v == bounds.len() {
        out.push(Monomial::from_exponents(cur.clone()));
        return;
    }
    for e in 0..bounds[v] {
        cur[v] = e;
        // prune: the partial monomial (later exponents zero) is already divisible
        let partial = Monomial::from_exponents(cur.clone());
        if lms.iter().any(|m| m.divides(&partial)) {
            break;
        }
        enumerate_standard(v + 1, bounds, lms, cur, out);
    }
    cur[v] = 0;
}
