use num_bigint::BigInt;
use rayon::prelude::*;

use super::MotiveError;
use crate::ideal::Ideal;
use crate::poly::{is_prime, CoefficientField};

/// Bound on `p^(occurring variables)` for brute-force counting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CountBudget {
    pub max_assignments: u64,
}

impl Default for CountBudget {
    fn default() -> Self {
        CountBudget {
            max_assignments: 1 << 30,
        }
    }
}

/// A generator reduced mod `p` over local variable indices.
struct ModPoly {
    terms: Vec<(u64, Vec<(usize, u32)>)>,
}

impl ModPoly {
    fn eval(&self, vals: &[u64], p: u64) -> u64 {
        let mut total = 0u64;
        for (c, vars) in &self.terms {
            let mut v = *c;
            for &(i, e) in vars {
                for _ in 0..e {
                    v = v * vals[i] % p;
                }
                if v == 0 {
                    break;
                }
            }
            total += v;
            if total >= p {
                total -= p;
            }
        }
        total
    }
}

struct Plan {
    p: u64,
    order: Vec<usize>,
    /// Generators whose last variable is `order[depth]`.
    checks: Vec<Vec<ModPoly>>,
}

impl Plan {
    fn dfs(&self, depth: usize, vals: &mut [u64]) -> u64 {
        if depth == self.order.len() {
            return 1;
        }
        let v = self.order[depth];
        let mut total = 0;
        for x in 0..self.p {
            vals[v] = x;
            if self.checks[depth].iter().all(|g| g.eval(vals, self.p) == 0) {
                total += self.dfs(depth + 1, vals);
            }
        }
        vals[v] = 0;
        total
    }
}

/// Number of `F_p`-points of `V(I)` in the ambient affine space of `I`.
///
/// Rational coefficients are reduced mod `p`; a prime dividing a denominator
/// is reported as bad reduction. Variables that occur in no generator
/// contribute a factor `p` each without enumeration.
pub fn count_points(ideal: &Ideal, p: u64, budget: &CountBudget) -> Result<BigInt, MotiveError> {
    if !is_prime(p) {
        return Err(MotiveError::NotPrime(p));
    }
    match ideal.ring().field() {
        CoefficientField::Rationals => {}
        CoefficientField::PrimeField(q) if q == p => {}
        CoefficientField::PrimeField(q) => return Err(MotiveError::CharacteristicMismatch(q, p)),
    }
    let (compact, occ) = ideal.compact();
    let nvars = ideal.ring().nvars();
    let free = nvars - occ.len();
    let n = occ.len();

    let needed = (p as u128).checked_pow(n as u32);
    if needed.map_or(true, |v| v > budget.max_assignments as u128) {
        return Err(MotiveError::CountBudgetExceeded {
            variables: n,
            prime: p,
            budget: budget.max_assignments,
        });
    }

    let mut gens: Vec<(Vec<usize>, ModPoly)> = Vec::new();
    for g in compact.generators() {
        let mut terms = Vec::new();
        for (m, c) in g.terms() {
            let r = CoefficientField::residue(c, p).ok_or(MotiveError::BadReduction(p))?;
            if r == 0 {
                continue;
            }
            let vars: Vec<(usize, u32)> = m.support().map(|i| (i, m.exp(i))).collect();
            terms.push((r, vars));
        }
        if terms.is_empty() {
            continue;
        }
        let mut support: Vec<usize> = terms.iter().flat_map(|(_, v)| v.iter().map(|x| x.0)).collect();
        support.sort_unstable();
        support.dedup();
        if support.is_empty() {
            return Ok(BigInt::from(0));
        }
        gens.push((support, ModPoly { terms }));
    }

    // Greedy order: next variable closes the most generators, then appears in the most.
    let mut assigned = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&v| !assigned[v])
            .max_by_key(|&v| {
                let closes = gens
                    .iter()
                    .filter(|(s, _)| s.contains(&v) && s.iter().all(|&w| w == v || assigned[w]))
                    .count();
                let touches = gens.iter().filter(|(s, _)| s.contains(&v)).count();
                (closes, touches, std::cmp::Reverse(v))
            })
            .expect("unassigned variable");
        assigned[best] = true;
        order.push(best);
    }
    let mut position = vec![0; n];
    for (d, &v) in order.iter().enumerate() {
        position[v] = d;
    }
    let mut checks: Vec<Vec<ModPoly>> = (0..n).map(|_| Vec::new()).collect();
    for (support, g) in gens {
        let last = support.iter().map(|&v| position[v]).max().expect("nonempty support");
        checks[last].push(g);
    }
    let plan = Plan { p, order, checks };

    let count: u64 = if n == 0 {
        1
    } else {
        let v0 = plan.order[0];
        (0..p)
            .into_par_iter()
            .map(|x| {
                let mut vals = vec![0u64; n];
                vals[v0] = x;
                if plan.checks[0].iter().all(|g| g.eval(&vals, p) == 0) {
                    plan.dfs(1, &mut vals)
                } else {
                    0
                }
            })
            .sum()
    };
    Ok(BigInt::from(count) * num_traits::pow(BigInt::from(p), free))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::{arc_space, AffineScheme, FatPoint};
    use crate::poly::PolyRing;

    fn brute(ideal: &Ideal, p: u64) -> u64 {
        let n = ideal.ring().nvars();
        let mut pt = vec![0u64; n];
        let mut count = 0;
        loop {
            if ideal.generators().iter().all(|g| g.eval_mod(&pt, p) == 0) {
                count += 1;
            }
            let mut i = 0;
            loop {
                if i == n {
                    return count;
                }
                pt[i] += 1;
                if pt[i] < p {
                    break;
                }
                pt[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn node_over_f3() {
        let x = AffineScheme::node();
        assert_eq!(count_points(x.ideal(), 3, &CountBudget::default()).unwrap(), 5.into());
    }

    #[test]
    fn node_arcs_over_f3() {
        let a = arc_space(&AffineScheme::node(), &FatPoint::linear(2).unwrap()).unwrap();
        let i = a.ideal();
        assert_eq!(count_points(&i, 3, &CountBudget::default()).unwrap(), 21.into());
        assert_eq!(brute(&i, 3), 21);
    }

    #[test]
    fn zero_ideal() {
        let r = PolyRing::rational(&["a", "b"]).unwrap();
        let i = Ideal::zero(&r);
        assert_eq!(count_points(&i, 5, &CountBudget::default()).unwrap(), 25.into());
    }

    #[test]
    fn free_variables_factored() {
        let r = PolyRing::rational(&["a", "b", "c", "d"]).unwrap();
        let i = Ideal::from_strs(&r, &["a*c"]).unwrap();
        assert_eq!(count_points(&i, 3, &CountBudget::default()).unwrap(), 45.into());
    }

    #[test]
    fn agrees_with_brute_force() {
        let r = PolyRing::rational(&["x", "y", "z"]).unwrap();
        for gens in [
            vec!["y^2 - x^3", "z*x - 1"],
            vec!["x^2 + y^2 + z^2 - 1"],
            vec!["x*y*z", "x + y + z"],
            vec!["1/2*x - y^2"],
        ] {
            let i = Ideal::from_strs(&r, &gens).unwrap();
            for p in [3u64, 5, 7] {
                assert_eq!(
                    count_points(&i, p, &CountBudget::default()).unwrap(),
                    BigInt::from(brute(&i, p)),
                    "{gens:?} mod {p}"
                );
            }
        }
    }

    #[test]
    fn errors() {
        let r = PolyRing::rational(&["x", "y"]).unwrap();
        let half = Ideal::from_strs(&r, &["1/2*x - y"]).unwrap();
        assert!(matches!(count_points(&half, 2, &CountBudget::default()), Err(MotiveError::BadReduction(2))));
        assert!(matches!(count_points(&half, 4, &CountBudget::default()), Err(MotiveError::NotPrime(4))));
        let tiny = CountBudget { max_assignments: 8 };
        assert!(matches!(
            count_points(&half, 3, &tiny),
            Err(MotiveError::CountBudgetExceeded { variables: 2, .. })
        ));
        let unit = Ideal::from_strs(&r, &["x", "x - 1"]).unwrap();
        assert_eq!(count_points(&unit, 3, &CountBudget::default()).unwrap(), 0.into());
    }
}
