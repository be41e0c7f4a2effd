use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{count_points, CountBudget, MotiveClass, MotiveError};
use crate::ideal::Ideal;
use crate::poly::is_prime;

#[derive(Clone, Debug, Default)]
pub struct InterpolationConfig {
    /// Degree of the class in `L`; the Krull dimension when absent.
    pub degree_bound: Option<usize>,
    pub excluded: Vec<u64>,
    pub budget: CountBudget,
    /// Explicit primes: the first `d + 1` interpolate, the rest verify.
    pub primes: Option<Vec<u64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Interpolation {
    pub class: MotiveClass,
    /// `(p, #V(F_p))` used for interpolation.
    pub samples: Vec<(u64, String)>,
    /// Held-out `(p, #V(F_p))`, each matching the class at `L = p`.
    pub verification: Vec<(u64, String)>,
}

fn bad_primes(ideal: &Ideal) -> impl Fn(u64) -> bool + '_ {
    move |p| {
        let pb = BigInt::from(p);
        ideal.generators().iter().any(|g| {
            g.terms()
                .iter()
                .any(|(_, c)| (c.denom() % &pb).is_zero())
        })
    }
}

/// Admissible primes in ascending order: not excluded, not dividing any
/// coefficient denominator.
pub fn admissible_primes(ideal: &Ideal, excluded: &[u64], count: usize) -> Vec<u64> {
    let bad = bad_primes(ideal);
    (2u64..)
        .filter(|&p| is_prime(p) && !excluded.contains(&p) && !bad(p))
        .take(count)
        .collect()
}

/// Reconstructs `[V(I)]` as a polynomial in `L` of degree at most `d` from
/// `d + 1` point counts, checked against the held-out primes.
pub fn interpolate_class(ideal: &Ideal, cfg: &InterpolationConfig) -> Result<Interpolation, MotiveError> {
    // fail before any Groebner work when even the smallest prime is out of reach
    let occ = ideal.occurring_variables().len();
    let p0 = admissible_primes(ideal, &cfg.excluded, 1)[0];
    if (p0 as u128).checked_pow(occ as u32).map_or(true, |v| v > cfg.budget.max_assignments as u128) {
        return Err(MotiveError::CountBudgetExceeded {
            variables: occ,
            prime: p0,
            budget: cfg.budget.max_assignments,
        });
    }
    let d = match cfg.degree_bound {
        Some(d) => d,
        None => ideal.dimension()?.max(0) as usize,
    };
    let primes = match &cfg.primes {
        Some(ps) => {
            if ps.len() < d + 2 {
                return Err(MotiveError::NotEnoughPrimes { needed: d + 2, given: ps.len() });
            }
            ps.clone()
        }
        None => admissible_primes(ideal, &cfg.excluded, d + 2),
    };
    let mut counts = Vec::with_capacity(primes.len());
    for &p in &primes {
        counts.push(count_points(ideal, p, &cfg.budget)?);
    }
    let xs: Vec<BigRational> = primes[..=d]
        .iter()
        .map(|&p| BigRational::from_integer(p.into()))
        .collect();
    let ys: Vec<BigRational> = counts[..=d]
        .iter()
        .map(|c| BigRational::from_integer(c.clone()))
        .collect();
    let coeffs = lagrange(&xs, &ys);
    let mut class = MotiveClass::zero();
    for (e, c) in coeffs.iter().enumerate() {
        if !c.is_integer() {
            return Err(MotiveError::NonIntegralClass(format!("{c} at L^{e}")));
        }
        class = &class + &MotiveClass::monomial(c.to_integer(), e as i64);
    }
    for (&pv, c) in primes[d + 1..].iter().zip(&counts[d + 1..]) {
        let predicted = class.evaluate_at_q(pv as i64);
        let counted = BigRational::from_integer(c.clone());
        if predicted != counted {
            return Err(MotiveError::VerificationMismatch {
                prime: pv,
                predicted: predicted.to_string(),
                counted: counted.to_string(),
            });
        }
    }
    Ok(Interpolation {
        class,
        samples: primes[..=d]
            .iter()
            .zip(&counts)
            .map(|(p, c)| (*p, c.to_string()))
            .collect(),
        verification: primes[d + 1..]
            .iter()
            .zip(&counts[d + 1..])
            .map(|(p, c)| (*p, c.to_string()))
            .collect(),
    })
}

/// Coefficients (low degree first) of the interpolating polynomial, via
/// Newton divided differences.
fn lagrange(xs: &[BigRational], ys: &[BigRational]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - j]);
        }
    }
    // Horner on the Newton form
    let mut poly = vec![BigRational::zero(); n];
    for k in (0..n).rev() {
        // poly = poly * (x - xs[k]) + dd[k]
        let mut next = vec![BigRational::zero(); n];
        for (i, c) in poly.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i + 1 < n {
                next[i + 1] += c;
            }
            next[i] -= c * &xs[k];
        }
        next[0] += &dd[k];
        poly = next;
    }
    poly
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::{arc_space, AffineScheme, FatPoint};
    use crate::poly::PolyRing;

    fn cls(t: &[(i64, i64)]) -> MotiveClass {
        MotiveClass::from_terms(t.iter().copied())
    }

    #[test]
    fn lagrange_recovers_cubic() {
        let f = |x: i64| 2 * x * x * x - x + 5;
        let xs: Vec<_> = [2i64, 3, 5, 7].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        let ys: Vec<_> = [2i64, 3, 5, 7].iter().map(|&x| BigRational::from_integer(f(x).into())).collect();
        let c = lagrange(&xs, &ys);
        let expect: Vec<BigRational> = [5i64, -1, 0, 2].iter().map(|&x| BigRational::from_integer(x.into())).collect();
        assert_eq!(c, expect);
    }

    #[test]
    fn node_class() {
        let cfg = InterpolationConfig { degree_bound: Some(1), ..Default::default() };
        let r = interpolate_class(AffineScheme::node().ideal(), &cfg).unwrap();
        assert_eq!(r.class, cls(&[(1, 2), (0, -1)]));
        assert_eq!(r.samples.iter().map(|s| s.0).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(r.verification, vec![(5, "9".to_string())]);
    }

    #[test]
    fn node_arc_class() {
        let a = arc_space(&AffineScheme::node(), &FatPoint::linear(2).unwrap()).unwrap();
        let cfg = InterpolationConfig { degree_bound: Some(2), ..Default::default() };
        let r = interpolate_class(&a.ideal(), &cfg).unwrap();
        assert_eq!(r.class, cls(&[(2, 3), (1, -2)]));
    }

    #[test]
    fn affine_three_space() {
        let r = PolyRing::rational(&["a", "b", "c"]).unwrap();
        let got = interpolate_class(&Ideal::zero(&r), &InterpolationConfig::default()).unwrap();
        assert_eq!(got.class, MotiveClass::l_pow(3));
    }

    #[test]
    fn underestimated_degree_fails_verification() {
        let r = PolyRing::rational(&["a", "b"]).unwrap();
        let cfg = InterpolationConfig { degree_bound: Some(1), ..Default::default() };
        assert!(matches!(
            interpolate_class(&Ideal::zero(&r), &cfg),
            Err(MotiveError::VerificationMismatch { prime: 5, .. })
        ));
    }

    #[test]
    fn excluded_primes_skipped() {
        let cfg = InterpolationConfig {
            degree_bound: Some(1),
            excluded: vec![2, 3],
            ..Default::default()
        };
        let r = interpolate_class(AffineScheme::cusp().ideal(), &cfg).unwrap();
        assert_eq!(r.class, MotiveClass::lefschetz());
        assert_eq!(r.samples[0].0, 5);
        assert_eq!(r.verification[0].0, 11);
    }

    #[test]
    fn explicit_primes() {
        let cfg = InterpolationConfig {
            degree_bound: Some(1),
            primes: Some(vec![2, 3, 5]),
            ..Default::default()
        };
        let r = interpolate_class(AffineScheme::node().ideal(), &cfg).unwrap();
        assert_eq!(r.class, cls(&[(1, 2), (0, -1)]));
        let short = InterpolationConfig { degree_bound: Some(3), primes: Some(vec![2, 3]), ..Default::default() };
        assert!(interpolate_class(AffineScheme::node().ideal(), &short).is_err());
    }
}
