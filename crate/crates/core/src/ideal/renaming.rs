//! Deciding whether two ideals agree after a bijective renaming of their
//! occurring variables.

use serde::{Deserialize, Serialize};
use std::cell::OnceCell;

use super::{interreduce, GroebnerBasis, Ideal, IdealError};
use crate::poly::{Polynomial, Ring};

/// Pairs `(variable of I, variable of J)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableBijection(pub Vec<(String, String)>);

#[derive(Clone, Copy, Debug)]
pub struct RenamingBudget {
    /// Cap on the number of occurring variables.
    pub max_vars: usize,
    /// Cap on backtracking nodes.
    pub max_nodes: u64,
    /// Up to this many variables an unfiltered second search is attempted
    /// when the signature-filtered one finds nothing.
    pub exhaustive_below: usize,
    /// Skip every pass that needs a Groebner basis.
    pub syntactic_only: bool,
}

impl Default for RenamingBudget {
    fn default() -> Self {
        RenamingBudget {
            max_vars: 12,
            max_nodes: 2_000_000,
            exhaustive_below: 8,
            syntactic_only: false,
        }
    }
}

struct Side {
    ideal: Ideal,
    occ: Vec<usize>,
    gens: Vec<Polynomial>,
    gb: OnceCell<GroebnerBasis>,
}

impl Side {
    fn new(i: &Ideal) -> Side {
        let (ideal, occ) = i.compact();
        let gens = interreduce(ideal.generators());
        Side {
            ideal,
            occ,
            gens,
            gb: OnceCell::new(),
        }
    }

    fn gb(&self) -> Result<&GroebnerBasis, IdealError> {
        if let Some(g) = self.gb.get() {
            return Ok(g);
        }
        let g = self.ideal.groebner()?;
        Ok(self.gb.get_or_init(|| g))
    }

    fn is_unit(&self) -> bool {
        self.gens.iter().any(|g| g.is_constant())
    }

    fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    fn nvars(&self) -> usize {
        self.occ.len()
    }

    /// Coarse per-variable invariant: multiset of (degree of the variable,
    /// total degree) over the generators that contain it.
    fn signature(&self, v: usize) -> Vec<(u32, u64)> {
        let mut s: Vec<(u32, u64)> = self
            .gens
            .iter()
            .filter(|g| g.contains_var(v))
            .map(|g| (g.degree_in(v), g.total_degree().unwrap_or(0)))
            .collect();
        s.sort();
        s
    }
}

/// Checks `pi(I) = J` for an explicit variable mapping given by names.
/// Variables of `I` not named in the mapping must not occur.
pub fn equal_under_mapping(
    i: &Ideal,
    j: &Ideal,
    mapping: &[(String, String)],
) -> Result<bool, IdealError> {
    if i.ring().field() != j.ring().field() {
        return Err(IdealError::FieldMismatch);
    }
    let mut map = vec![usize::MAX; i.ring().nvars()];
    for (a, b) in mapping {
        let ai = i
            .ring()
            .var_index(a)
            .ok_or_else(|| crate::poly::PolyError::UnknownIdentifier(a.clone()))?;
        let bi = j
            .ring()
            .var_index(b)
            .ok_or_else(|| crate::poly::PolyError::UnknownIdentifier(b.clone()))?;
        map[ai] = bi;
    }
    for v in i.occurring_variables() {
        if map[v] == usize::MAX {
            return Ok(false);
        }
    }
    let map: Vec<usize> = map
        .into_iter()
        .map(|m| if m == usize::MAX { 0 } else { m })
        .collect();
    let image = Ideal::new_unchecked(
        j.ring().clone(),
        i.generators()
            .iter()
            .map(|g| g.rename_into(j.ring(), &map))
            .collect(),
    );
    image.equals(j)
}

/// Searches for a bijection between the occurring variables of `i` and `j`
/// that carries `i` onto `j`. Returns `None` when no such bijection exists
/// (or none is found by the bounded search).
pub fn equal_up_to_renaming(
    i: &Ideal,
    j: &Ideal,
    budget: RenamingBudget,
) -> Result<Option<VariableBijection>, IdealError> {
    if i.ring().field() != j.ring().field() {
        return Err(IdealError::FieldMismatch);
    }
    let a = Side::new(i);
    let b = Side::new(j);
    if a.nvars() != b.nvars() {
        return Ok(None);
    }
    let n = a.nvars();
    if n > budget.max_vars {
        return Err(IdealError::BudgetExceeded {
            what: "renaming search variables",
            limit: budget.max_vars as u64,
        });
    }
    if a.is_unit() != b.is_unit() {
        return Ok(None);
    }
    if n == 0 {
        return Ok(if a.gens.len() == b.gens.len() {
            Some(VariableBijection(Vec::new()))
        } else {
            None
        });
    }

    let sig_a: Vec<_> = (0..n).map(|v| a.signature(v)).collect();
    let sig_b: Vec<_> = (0..n).map(|v| b.signature(v)).collect();

    let mut nodes = 0u64;
    let sigs = Some((&sig_a[..], &sig_b[..]));
    let mut found = None;
    if a.gens.len() == b.gens.len() {
        found = search(&a, &b, sigs, Mode::Syntactic, budget.max_nodes, &mut nodes)?;
    }
    if found.is_none() && !budget.syntactic_only {
        found = search(&a, &b, sigs, Mode::Groebner, budget.max_nodes, &mut nodes)?;
    }
    if found.is_none() && !budget.syntactic_only && n <= budget.exhaustive_below {
        found = search(&a, &b, None, Mode::Groebner, budget.max_nodes, &mut nodes)?;
    }
    Ok(found.map(|m| {
        VariableBijection(
            m.iter()
                .enumerate()
                .map(|(x, &y)| {
                    (
                        i.ring().variables()[a.occ[x]].clone(),
                        j.ring().variables()[b.occ[y]].clone(),
                    )
                })
                .collect(),
        )
    }))
}

type Sigs<'s> = (&'s [Vec<(u32, u64)>], &'s [Vec<(u32, u64)>]);

/// `Syntactic` requires the interreduced generators to correspond one to one
/// and never builds a Groebner basis; `Groebner` decides ideal membership.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Syntactic,
    Groebner,
}

fn search(
    a: &Side,
    b: &Side,
    sigs: Option<Sigs<'_>>,
    mode: Mode,
    max_nodes: u64,
    nodes: &mut u64,
) -> Result<Option<Vec<usize>>, IdealError> {
    let n = a.nvars();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|x| {
            (0..n)
                .filter(|&y| match sigs {
                    Some((sa, sb)) => sa[x] == sb[y],
                    None => true,
                })
                .collect()
        })
        .collect();
    if candidates.iter().any(|c| c.is_empty()) {
        return Ok(None);
    }
    // most constrained variables first; ties broken by index
    let mut var_order: Vec<usize> = (0..n).collect();
    var_order.sort_by_key(|&x| (candidates[x].len(), x));

    // generators of I become checkable once all their variables are mapped
    let mut pos_of = vec![0usize; n];
    for (p, &x) in var_order.iter().enumerate() {
        pos_of[x] = p;
    }
    let mut checks_a: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (k, g) in a.gens.iter().enumerate() {
        let last = g
            .occurring()
            .iter()
            .enumerate()
            .filter(|(_, o)| **o)
            .map(|(v, _)| pos_of[v])
            .max()
            .unwrap_or(0);
        checks_a[last].push(k);
    }

    let mut st = State {
        a,
        b,
        var_order: &var_order,
        candidates: &candidates,
        checks_a: &checks_a,
        forward: vec![usize::MAX; n],
        used: vec![false; n],
        nodes,
        max_nodes,
        mode,
    };
    if st.dfs(0)? {
        Ok(Some(st.forward.clone()))
    } else {
        Ok(None)
    }
}

struct State<'s> {
    a: &'s Side,
    b: &'s Side,
    var_order: &'s [usize],
    candidates: &'s [Vec<usize>],
    checks_a: &'s [Vec<usize>],
    forward: Vec<usize>,
    used: Vec<bool>,
    nodes: &'s mut u64,
    max_nodes: u64,
    mode: Mode,
}

impl State<'_> {
    fn dfs(&mut self, depth: usize) -> Result<bool, IdealError> {
        let n = self.forward.len();
        if depth == n {
            return self.reverse_inclusion();
        }
        let x = self.var_order[depth];
        for &y in &self.candidates[x] {
            if self.used[y] {
                continue;
            }
            *self.nodes += 1;
            if *self.nodes > self.max_nodes {
                return Err(IdealError::BudgetExceeded {
                    what: "renaming search nodes",
                    limit: self.max_nodes,
                });
            }
            self.forward[x] = y;
            self.used[y] = true;
            if self.forward_checks(depth)? && self.dfs(depth + 1)? {
                return Ok(true);
            }
            self.used[y] = false;
            self.forward[x] = usize::MAX;
        }
        Ok(false)
    }

    fn map_vec(&self) -> Vec<usize> {
        self.forward
            .iter()
            .map(|&m| if m == usize::MAX { 0 } else { m })
            .collect()
    }

    fn forward_checks(&self, depth: usize) -> Result<bool, IdealError> {
        let map = self.map_vec();
        for &k in &self.checks_a[depth] {
            let img = self.a.gens[k].rename_into(self.b.ring(), &map);
            let ok = match self.mode {
                Mode::Syntactic => {
                    let img = img.monic();
                    self.b.gens.iter().any(|g| g.terms() == img.terms())
                }
                Mode::Groebner => self.b.gb()?.contains(&img)?,
            };
            if !ok {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn reverse_inclusion(&self) -> Result<bool, IdealError> {
        if self.mode == Mode::Syntactic {
            // images are distinct members of a set of the same size
            return Ok(true);
        }
        let n = self.forward.len();
        let mut inverse = vec![0usize; n];
        for (x, &y) in self.forward.iter().enumerate() {
            inverse[y] = x;
        }
        for g in &self.b.gens {
            let pre = g.rename_into(self.a.ring(), &inverse);
            if !self.a.gb()?.contains(&pre)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
