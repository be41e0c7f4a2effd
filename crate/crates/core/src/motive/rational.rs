//! Recovering a rational function from a truncated series by solving the
//! recurrence `sum_k q_k s_{n-k} = 0` over `Q(L)`, fraction-free in `Z[L]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{MotiveClass, MotiveRational, MotiveSeries};

/// Dense polynomial in `L` over `Z`, low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
struct IPoly(Vec<BigInt>);

impl IPoly {
    fn zero() -> Self {
        IPoly(Vec::new())
    }

    fn one() -> Self {
        IPoly(vec![BigInt::one()])
    }

    fn trimmed(mut v: Vec<BigInt>) -> Self {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
        IPoly(v)
    }

    /// `c * L^shift`; `c` must have no exponent below `-shift`.
    fn from_class(c: &MotiveClass, shift: i64) -> Self {
        let mut v = Vec::new();
        for (e, k) in c.coeffs() {
            let i = (e + shift) as usize;
            if v.len() <= i {
                v.resize(i + 1, BigInt::zero());
            }
            v[i] = k.clone();
        }
        IPoly::trimmed(v)
    }

    /// Coefficient `k` at index `e` becomes `k L^(e - offset)`.
    fn to_class(&self, offset: i64) -> MotiveClass {
        let mut c = MotiveClass::zero();
        for (e, k) in self.0.iter().enumerate() {
            if !k.is_zero() {
                c = &c + &MotiveClass::monomial(k.clone(), e as i64 - offset);
            }
        }
        c
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Exponent of the lowest nonzero term.
    fn valuation(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        IPoly::trimmed(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = BigInt::zero();
        IPoly::trimmed(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn neg(&self) -> Self {
        IPoly(self.0.iter().map(|c| -c).collect())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return IPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IPoly::trimmed(v)
    }

    fn div_int(&self, k: &BigInt) -> Self {
        IPoly(self.0.iter().map(|c| c / k).collect())
    }

    /// Quotient by `d` in `Z[L]`, or `None` when `d` does not divide.
    fn checked_div(&self, d: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(IPoly::zero());
        }
        let dd = d.0.len() - 1;
        if self.0.len() <= dd {
            return None;
        }
        let mut r = self.0.clone();
        let lead = d.0.last().expect("nonzero divisor");
        let mut q = vec![BigInt::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let (c, rem) = r[k + dd].div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            if !c.is_zero() {
                for (i, dc) in d.0.iter().enumerate() {
                    r[k + i] -= &c * dc;
                }
            }
            q[k] = c;
        }
        r.iter().all(|c| c.is_zero()).then(|| IPoly::trimmed(q))
    }

    /// Quotient by `d`, which divides `self` in `Z[L]` by construction.
    fn exact_div(&self, d: &Self) -> Self {
        self.checked_div(d).expect("fraction-free division is exact")
    }
}

/// Fraction-free elimination; every entry stays a minor of the input, so
/// each division is exact. With `reduce` the pivot columns are cleared
/// above the pivot as well, and every pivot ends up equal to the last one.
/// Returns the last pivot and the `(row, column)` pivots, searching only the
/// first `cols` columns.
fn bareiss(m: &mut [Vec<IPoly>], cols: usize, reduce: bool) -> (IPoly, Vec<(usize, usize)>) {
    let rows = m.len();
    let width = m.first().map_or(0, |r| r.len());
    let mut prev = IPoly::one();
    let mut pivots = Vec::new();
    for c in 0..cols {
        let r = pivots.len();
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let targets: Vec<usize> = if reduce { (0..rows).filter(|&i| i != r).collect() } else { (r + 1..rows).collect() };
        for i in targets {
            for k in 0..width {
                if k == c || (!reduce && k < c) {
                    continue;
                }
                let t = m[r][c].mul(&m[i][k]).sub(&m[i][c].mul(&m[r][k]));
                m[i][k] = t.exact_div(&prev);
            }
            m[i][c] = IPoly::zero();
        }
        prev = m[r][c].clone();
        pivots.push((r, c));
    }
    (prev, pivots)
}

fn rank(mut m: Vec<Vec<IPoly>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    bareiss(&mut m, cols, false).1.len()
}

/// Finds the rational function with the least `deg num + deg den` (and then
/// the least denominator degree) whose expansion agrees with `s` through
/// `t^T`, provided at least one coefficient is left over as a check.
///
/// Returns `None` when nothing fits or when the solution cannot be written
/// with `Z[L, L^-1]` coefficients and a unit constant term in the denominator.
pub fn detect_rationality(s: &MotiveSeries, max_den_degree: usize) -> Option<MotiveRational> {
    let t = s.order();
    // a common power of L makes every coefficient a polynomial
    let shift = -s.coeffs().iter().filter_map(|c| c.min_exponent()).min().unwrap_or(0).min(0);
    let si: Vec<IPoly> = s.coeffs().iter().map(|c| IPoly::from_class(c, shift)).collect();
    let at = |n: usize, k: usize| if n >= k { si[n - k].clone() } else { IPoly::zero() };
    for total in 0..t {
        for dq in 0..=total.min(max_den_degree) {
            let dp = total - dq;
            if t < dp + dq + 1 {
                continue;
            }
            // row n: q_1 s_(n-1) + ... + q_dq s_(n-dq) = -s_n
            let mut m: Vec<Vec<IPoly>> = (dp + 1..=t)
                .map(|n| (1..=dq).map(|k| at(n, k)).chain([si[n].neg()]).collect())
                .collect();
            let coefficient: Vec<Vec<IPoly>> = m.iter().map(|r| r[..dq].to_vec()).collect();
            if rank(m.clone()) != rank(coefficient) {
                continue;
            }
            // q scaled by the last pivot; free unknowns are zero
            let (d, pivots) = bareiss(&mut m, dq, true);
            let mut q = vec![IPoly::zero(); dq + 1];
            q[0] = d;
            for (r, c) in pivots {
                q[c + 1] = m[r][dq].clone();
            }
            let p: Vec<IPoly> = (0..=dp)
                .map(|n| (0..=n.min(dq)).fold(IPoly::zero(), |acc, k| acc.add(&q[k].mul(&si[n - k]))))
                .collect();
            return to_laurent(p, q, shift);
        }
    }
    None
}

/// Divides out everything shared by `p` and `q` that keeps the result
/// integral, and demands a unit `q_0` afterwards. `p` carries `L^shift`.
fn to_laurent(mut p: Vec<IPoly>, mut q: Vec<IPoly>, shift: i64) -> Option<MotiveRational> {
    let v = q[0].valuation();
    let core = IPoly(q[0].0[v..].to_vec());
    let core = core.div_int(&core.content());
    for u in p.iter_mut().chain(q.iter_mut()) {
        *u = u.checked_div(&core)?;
    }
    let g = p.iter().chain(&q).fold(BigInt::zero(), |g, u| g.gcd(&u.content()));
    for u in p.iter_mut().chain(q.iter_mut()) {
        *u = u.div_int(&g);
    }
    if !q[0].0[v].abs().is_one() {
        return None;
    }
    if q[0].0[v].is_negative() {
        p = p.iter().map(IPoly::neg).collect();
        q = q.iter().map(IPoly::neg).collect();
    }
    let num = p.iter().map(|u| u.to_class(v as i64 + shift)).collect();
    let den = q.iter().map(|u| u.to_class(v as i64)).collect();
    MotiveRational::new(num, den).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<MotiveClass> {
        v.iter().map(|&x| MotiveClass::from_integer(x)).collect()
    }

    #[test]
    fn geometric() {
        let s = MotiveSeries::new(6, ints(&[1; 7]));
        let r = detect_rationality(&s, 8).unwrap();
        assert_eq!(r.numerator(), &ints(&[1])[..]);
        assert_eq!(r.denominator(), &ints(&[1, -1])[..]);
    }

    #[test]
    fn squared_geometric() {
        let s = MotiveSeries::new(6, (1..=7).map(MotiveClass::from_integer).collect());
        let r = detect_rationality(&s, 8).unwrap();
        assert_eq!(r.denominator(), &ints(&[1, -2, 1])[..]);
        assert_eq!(r.expand(6), s);
    }

    #[test]
    fn laurent_coefficients() {
        let s = MotiveSeries::geometric(6, &MotiveClass::l_pow(-1));
        let r = detect_rationality(&s, 8).unwrap();
        assert_eq!(r.expand(6), s);
        assert_eq!(r.denominator().len(), 2);
    }

    #[test]
    fn node_square_pattern() {
        // ((n+2)L - (n+1))^2 L^(2n) as in the squared node class
        let l = MotiveClass::lefschetz();
        let coeffs: Vec<MotiveClass> = (0..=10i64)
            .map(|n| {
                let a = &l.scale(&BigInt::from(n + 2)) - &MotiveClass::from_integer(n + 1);
                (&a * &a).shift(2 * n)
            })
            .collect();
        let s = MotiveSeries::new(10, coeffs);
        let r = detect_rationality(&s, 8).unwrap();
        let l2 = MotiveClass::l_pow(2);
        let cube = super::super::series::tpoly_mul(
            &super::super::series::tpoly_mul(&[MotiveClass::one(), -l2.clone()], &[MotiveClass::one(), -l2.clone()]),
            &[MotiveClass::one(), -l2],
        );
        assert_eq!(r.denominator(), &cube[..]);
        assert_eq!(r.expand(10), s);
    }

    #[test]
    fn accepted_fits_reexpand() {
        let s = MotiveSeries::new(3, ints(&[1, 2, 5, 14]));
        // degree (1,1) would need 4 checks; only polynomial fits remain
        let r = detect_rationality(&s, 8);
        if let Some(r) = r {
            assert_eq!(r.expand(3), s);
        }
    }
}
