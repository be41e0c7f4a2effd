use num_traits::One;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;

use super::ArcError;
use crate::ideal::{standard_monomials, GroebnerBasis, Ideal};
use crate::poly::{Coeff, Monomial, PolyRing, Polynomial, Ring};

/// A connected zero-dimensional local algebra `k[t]/J` with every variable
/// nilpotent, together with its standard-monomial basis and the structure
/// constants of multiplication in that basis.
#[derive(Clone, Debug)]
pub struct FatPoint {
    ideal: Ideal,
    groebner: GroebnerBasis,
    basis: Vec<Monomial>,
    table: Vec<Vec<Vec<(usize, Coeff)>>>,
}

/// JSON view of a fat point.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FatPointJson {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
    pub basis: Vec<String>,
    pub length: usize,
}

impl FatPoint {
    /// Validates `ideal` as a fat point at the origin.
    pub fn new(ideal: Ideal) -> Result<FatPoint, ArcError> {
        let groebner = ideal.groebner()?;
        if groebner.is_unit() {
            return Err(ArcError::EmptyFatPoint);
        }
        let basis = standard_monomials(&groebner).map_err(|e| match e {
            crate::ideal::IdealError::InfiniteQuotient => ArcError::InfiniteLength,
            other => ArcError::Ideal(other),
        })?;
        let ring = ideal.ring().clone();
        let len = basis.len() as u32;
        for v in 0..ring.nvars() {
            let p = Polynomial::var(&ring, v).pow(len);
            if !groebner.contains(&p)? {
                return Err(ArcError::NotLocal(ring.variables()[v].clone()));
            }
        }
        let index: HashMap<&Monomial, usize> =
            basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut table = vec![vec![Vec::new(); basis.len()]; basis.len()];
        for j in 0..basis.len() {
            for k in j..basis.len() {
                let prod = Polynomial::monomial(&ring, basis[j].mul(&basis[k]), Coeff::one());
                let nf = groebner.normal_form(&prod)?;
                let row: Vec<(usize, Coeff)> = nf
                    .terms()
                    .iter()
                    .map(|(m, c)| (index[m], c.clone()))
                    .collect();
                table[k][j] = row.clone();
                table[j][k] = row;
            }
        }
        Ok(FatPoint {
            ideal,
            groebner,
            basis,
            table,
        })
    }

    /// `k[t]/(t^n)`, written `l_n`.
    pub fn linear(n: u32) -> Result<FatPoint, ArcError> {
        Self::linear_named(n, "t")
    }

    pub fn linear_named(n: u32, var: &str) -> Result<FatPoint, ArcError> {
        if n == 0 {
            return Err(ArcError::ZeroOrder);
        }
        let ring = PolyRing::rational(&[var])?;
        let t = Polynomial::var(&ring, 0).pow(n);
        FatPoint::new(Ideal::new(ring, vec![t])?)
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn groebner(&self) -> &GroebnerBasis {
        &self.groebner
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn length(&self) -> usize {
        self.basis.len()
    }

    pub fn basis_strings(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|m| Polynomial::monomial(self.ring(), m.clone(), Coeff::one()).to_string())
            .collect()
    }

    pub fn to_json(&self) -> FatPointJson {
        FatPointJson {
            variables: self.ring().variables().to_vec(),
            generators: self
                .groebner
                .basis()
                .iter()
                .map(|g| g.to_string())
                .collect(),
            basis: self.basis_strings(),
            length: self.length(),
        }
    }

    /// Product in the fat algebra with polynomial coefficients: elements are
    /// coefficient vectors over the standard basis.
    pub(crate) fn multiply(&self, u: &[Polynomial], v: &[Polynomial]) -> Vec<Polynomial> {
        let ring = u[0].ring().clone();
        let mut out = vec![Polynomial::zero(&ring); self.length()];
        for (j, uj) in u.iter().enumerate() {
            if uj.is_zero() {
                continue;
            }
            for (k, vk) in v.iter().enumerate() {
                if vk.is_zero() || self.table[j][k].is_empty() {
                    continue;
                }
                let prod = uj * vk;
                for (l, c) in &self.table[j][k] {
                    out[*l] = out[*l].add_scaled(&prod, c);
                }
            }
        }
        out
    }

    pub(crate) fn unit_element(&self, ring: &Ring) -> Vec<Polynomial> {
        let mut e = vec![Polynomial::zero(ring); self.length()];
        e[0] = Polynomial::one(ring);
        e
    }

    pub(crate) fn is_zero_element(x: &[Polynomial]) -> bool {
        x.iter().all(|p| p.is_zero())
    }
}

/// The fat point `n x m` on the disjoint union of variables. Clashing names
/// of the second factor are suffixed until unique.
pub fn product_fat_point(n: &FatPoint, m: &FatPoint) -> Result<FatPoint, ArcError> {
    let mut names: Vec<String> = n.ring().variables().to_vec();
    let mut second = Vec::new();
    for v in m.ring().variables() {
        let mut name = v.clone();
        let mut k = 1;
        while names.contains(&name) {
            name = format!("{v}_{k}");
            k += 1;
        }
        names.push(name.clone());
        second.push(name);
    }
    let ring = PolyRing::new(n.ring().field(), &names, n.ring().order())?;
    let left: Vec<usize> = (0..n.ring().nvars()).collect();
    let right: Vec<usize> = (0..m.ring().nvars()).map(|i| i + n.ring().nvars()).collect();
    let mut gens: Vec<Polynomial> = n
        .ideal()
        .generators()
        .iter()
        .map(|g| g.rename_into(&ring, &left))
        .collect();
    gens.extend(m.ideal().generators().iter().map(|g| g.rename_into(&ring, &right)));
    FatPoint::new(Ideal::new(ring, gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fat(vars: &[&str], gens: &[&str]) -> Result<FatPoint, ArcError> {
        let r = PolyRing::rational(vars).unwrap();
        FatPoint::new(Ideal::from_strs(&r, gens).unwrap())
    }

    #[test]
    fn l2() {
        let f = fat(&["t"], &["t^2"]).unwrap();
        assert_eq!(f.length(), 2);
        assert_eq!(f.basis_strings(), ["1", "t"]);
    }

    #[test]
    fn mixed_fat_point() {
        let f = fat(&["t", "u"], &["t^3", "u^2", "t*u"]).unwrap();
        assert_eq!(f.length(), 4);
        assert_eq!(f.basis_strings(), ["1", "u", "t", "t^2"]);
    }

    #[test]
    fn non_local_rejected() {
        assert!(matches!(fat(&["t"], &["t - 1"]), Err(ArcError::NotLocal(v)) if v == "t"));
        // two points: t(t-1)
        assert!(matches!(fat(&["t"], &["t^2 - t"]), Err(ArcError::NotLocal(_))));
    }

    #[test]
    fn infinite_rejected() {
        assert!(matches!(fat(&["t", "u"], &["t^2"]), Err(ArcError::InfiniteLength)));
    }

    #[test]
    fn products_multiply_lengths() {
        let l2 = FatPoint::linear(2).unwrap();
        let l3 = FatPoint::linear(3).unwrap();
        let p = product_fat_point(&l2, &l2).unwrap();
        assert_eq!(p.length(), 4);
        assert_eq!(p.ring().variables(), ["t", "t_1"]);
        assert_eq!(product_fat_point(&l2, &l3).unwrap().length(), 6);
        let l1 = FatPoint::linear(1).unwrap();
        assert_eq!(product_fat_point(&l1, &l3).unwrap().length(), 3);
    }

    #[test]
    fn multiplication_table_is_truncated_polynomial_product() {
        let l3 = FatPoint::linear(3).unwrap();
        let r = PolyRing::rational(&["a", "b"]).unwrap();
        let a = Polynomial::var(&r, 0);
        let b = Polynomial::var(&r, 1);
        let z = Polynomial::zero(&r);
        // (a + t)(b + t) = ab + (a+b) t + t^2
        let u = vec![a.clone(), Polynomial::one(&r), z.clone()];
        let v = vec![b.clone(), Polynomial::one(&r), z];
        let w = l3.multiply(&u, &v);
        assert_eq!(w[0], &a * &b);
        assert_eq!(w[1], &a + &b);
        assert_eq!(w[2], Polynomial::one(&r));
    }
}
