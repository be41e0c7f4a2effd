//! Heuristic passage to the reduced structure of a presentation.
//!
//! The loop mirrors the moves one makes by hand: monomial generators are
//! replaced by their radicals, variables with a pure power in the ideal are
//! set to zero, and variables that appear linearly and nowhere else in their
//! generator are eliminated. Every move preserves the radical.

use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet};

use crate::arc::ArcPresentation;
use crate::ideal::{interreduce, Ideal, IdealError};
use crate::poly::{Coeff, Polynomial, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Completeness {
    /// The residual is empty or consists of squarefree monomials, so the
    /// residual ideal is radical.
    RadicalCertified,
    /// No rule fires any more but radicality of the residual is unknown.
    HeuristicFixpoint,
}

#[derive(Clone, Debug)]
pub struct ReducedPresentation {
    ring: Ring,
    original: Vec<Polynomial>,
    pub killed: BTreeSet<usize>,
    /// Variable eliminated, with its image in the remaining variables.
    pub substitutions: Vec<(usize, Polynomial)>,
    pub free: BTreeSet<usize>,
    pub residual: Vec<Polynomial>,
    pub completeness: Completeness,
}

#[derive(Clone, Debug)]
pub struct Decomposition {
    pub affine_rank: usize,
    /// Connected components of the residual, each in the ambient ring.
    pub factors: Vec<Ideal>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReductionReport {
    pub killed: Vec<String>,
    pub free: Vec<String>,
    pub substitutions: BTreeMap<String, String>,
    pub residual: Vec<String>,
    pub certified: bool,
    pub affine_rank: usize,
    pub factors: Vec<Vec<String>>,
}

impl ReducedPresentation {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The ideal the reduction started from.
    pub fn original(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.original.clone()).expect("same ring")
    }

    pub fn residual_ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.residual.clone()).expect("same ring")
    }

    pub fn is_unit(&self) -> bool {
        self.residual.iter().any(|g| g.is_constant())
    }

    /// Variables of the residual ideal.
    pub fn bound(&self) -> BTreeSet<usize> {
        self.residual_ideal().occurring_variables().into_iter().collect()
    }

    pub fn report(&self) -> ReductionReport {
        let name = |v: &usize| self.ring.variables()[*v].clone();
        let d = decompose(self);
        ReductionReport {
            killed: self.killed.iter().map(name).collect(),
            free: self.free.iter().map(name).collect(),
            substitutions: self
                .substitutions
                .iter()
                .map(|(v, g)| (name(v), g.to_string()))
                .collect(),
            residual: self.residual.iter().map(|g| g.to_string()).collect(),
            certified: self.completeness == Completeness::RadicalCertified,
            affine_rank: d.affine_rank,
            factors: d
                .factors
                .iter()
                .map(|f| f.generators().iter().map(|g| g.to_string()).collect())
                .collect(),
        }
    }
}

pub fn heuristic_reduce(a: &ArcPresentation) -> ReducedPresentation {
    reduce_ideal(&a.ideal())
}

/// Runs the reduction loop to its fixpoint.
pub fn reduce_ideal(i: &Ideal) -> ReducedPresentation {
    let ring = i.ring().clone();
    let n = ring.nvars();
    let mut gens: Vec<Polynomial> = i.generators().to_vec();
    let mut killed = BTreeSet::new();
    let mut subs: Vec<(usize, Polynomial)> = Vec::new();

    // Cheap moves run first; interreduction only when none fires.
    let mut settled = false;
    loop {
        gens.retain(|g| !g.is_zero());
        if gens.iter().any(|g| g.is_constant()) {
            gens = interreduce(&gens);
            break;
        }

        let mut changed = false;
        for g in gens.iter_mut() {
            if g.num_terms() == 1 {
                let m = g.leading_monomial().expect("nonzero").radical();
                if &m != g.leading_monomial().expect("nonzero") || !g.leading_coeff().map(is_one).unwrap_or(true) {
                    *g = Polynomial::monomial(&ring, m, one());
                    changed = true;
                }
            }
        }
        if changed {
            settled = false;
            continue;
        }

        let kills: BTreeSet<usize> = gens
            .iter()
            .filter(|g| g.num_terms() == 1)
            .filter_map(|g| g.leading_monomial().and_then(|m| m.as_pure_power()))
            .map(|(v, _)| v)
            .collect();
        if !kills.is_empty() {
            gens = gens
                .iter()
                .map(|g| kills.iter().fold(g.clone(), |acc, &v| acc.kill_var(v)))
                .collect();
            for (_, img) in subs.iter_mut() {
                *img = kills.iter().fold(img.clone(), |acc, &v| acc.kill_var(v));
            }
            killed.extend(kills);
            settled = false;
            continue;
        }

        if let Some((v, image)) = find_linear(&gens, n) {
            gens = gens.iter().map(|g| g.substitute_some(&[(v, image.clone())])).collect();
            for (_, img) in subs.iter_mut() {
                *img = img.substitute_some(&[(v, image.clone())]);
            }
            subs.push((v, image));
            settled = false;
            continue;
        }
        if settled {
            break;
        }
        gens = interreduce(&gens);
        settled = true;
    }

    let bound: BTreeSet<usize> = Ideal::new(ring.clone(), gens.clone())
        .expect("same ring")
        .occurring_variables()
        .into_iter()
        .collect();
    let eliminated: BTreeSet<usize> = subs.iter().map(|(v, _)| *v).collect();
    let free = (0..n)
        .filter(|v| !bound.contains(v) && !killed.contains(v) && !eliminated.contains(v))
        .collect();
    let unit = gens.iter().any(|g| g.is_constant());
    let completeness = if !unit
        && gens.iter().all(|g| {
            g.num_terms() == 1 && g.leading_monomial().map(|m| m.radical() == *m).unwrap_or(true)
        }) {
        Completeness::RadicalCertified
    } else {
        Completeness::HeuristicFixpoint
    };
    ReducedPresentation {
        ring,
        original: i.generators().to_vec(),
        killed,
        substitutions: subs,
        free,
        residual: gens,
        completeness,
    }
}

fn one() -> Coeff {
    num_traits::One::one()
}

fn is_one(c: &Coeff) -> bool {
    num_traits::One::is_one(c)
}

/// First generator, in order, of the form `c*v + h` with `v` absent from `h`;
/// variables are tried in ring order within a generator.
fn find_linear(gens: &[Polynomial], n: usize) -> Option<(usize, Polynomial)> {
    for g in gens {
        for v in 0..n {
            if g.degree_in(v) != 1 {
                continue;
            }
            let lin: Vec<&(crate::poly::Monomial, Coeff)> =
                g.terms().iter().filter(|(m, _)| m.exp(v) > 0).collect();
            if lin.len() != 1 || lin[0].0.degree() != 1 {
                continue;
            }
            let c = lin[0].1.clone();
            let field = g.ring().field();
            let v_term = Polynomial::var(g.ring(), v).scale(&c);
            let rest = g - &v_term;
            // v = -rest / c
            let image = rest.scale(&field.neg(&field.inv(&c)));
            return Some((v, image));
        }
    }
    None
}

/// Groups the residual by connected components of the graph that joins
/// variables co-occurring in a generator.
pub fn decompose(r: &ReducedPresentation) -> Decomposition {
    let n = r.ring.nvars();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let supports: Vec<Vec<usize>> = r
        .residual
        .iter()
        .map(|g| {
            g.occurring()
                .into_iter()
                .enumerate()
                .filter(|(_, o)| *o)
                .map(|(v, _)| v)
                .collect()
        })
        .collect();
    for s in &supports {
        for w in s.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Polynomial>> = BTreeMap::new();
    for (g, s) in r.residual.iter().zip(&supports) {
        // constants only arise for the unit ideal
        let key = s.first().map(|&v| find(&mut parent, v)).unwrap_or(usize::MAX);
        groups.entry(key).or_default().push(g.clone());
    }
    Decomposition {
        affine_rank: r.free.len(),
        factors: groups
            .into_values()
            .map(|gs| Ideal::new(r.ring.clone(), gs).expect("same ring"))
            .collect(),
    }
}

/// The rank `r` when the reduction is affine `r`-space.
pub fn is_affine_space(r: &ReducedPresentation) -> Option<usize> {
    if r.residual.is_empty() {
        Some(r.free.len())
    } else {
        None
    }
}

/// Dimension of the reduced scheme: affine rank plus the dimensions of the
/// residual factors.
pub fn reduced_dimension(r: &ReducedPresentation) -> Result<i64, IdealError> {
    let d = decompose(r);
    let mut dim = d.affine_rank as i64;
    for f in &d.factors {
        let (c, _) = f.compact();
        let fd = c.dimension()?;
        if fd < 0 {
            return Ok(-1);
        }
        dim += fd;
    }
    Ok(dim)
}

/// For each killed variable, the least `e <= max_exp` with `v^e` in the
/// original ideal, or `None` if no such power was found.
pub fn certify_kills(r: &ReducedPresentation, max_exp: u32) -> Result<Vec<(usize, Option<u32>)>, IdealError> {
    let gb = r.original().groebner()?;
    let mut out = Vec::new();
    for &v in &r.killed {
        let x = Polynomial::var(&r.ring, v);
        let mut p = x.clone();
        let mut found = None;
        for e in 1..=max_exp {
            if gb.contains(&p)? {
                found = Some(e);
                break;
            }
            p = &p * &x;
        }
        out.push((v, found));
    }
    Ok(out)
}
