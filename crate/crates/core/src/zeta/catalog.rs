//! Closed forms quoted for the cusp `y^2 = x^3` and the node `xy = 0`, and
//! catalogs of known classes built from them.

use num_bigint::BigInt;

use super::KnownClass;
use crate::arc::{arc_space, AffineScheme, ArcError, FatPoint};
use crate::motive::{detect_rationality, tpoly_mul, MotiveClass, MotiveRational, MotiveSeries};

fn l(e: i64) -> MotiveClass {
    MotiveClass::l_pow(e)
}

fn c(terms: &[(i64, i64)]) -> MotiveClass {
    MotiveClass::from_terms(terms.iter().copied())
}

fn one_minus(coef: MotiveClass, deg: usize) -> Vec<MotiveClass> {
    let mut v = vec![MotiveClass::zero(); deg + 1];
    v[0] = MotiveClass::one();
    v[deg] = -coef;
    v
}

/// `[nabla_{l_m} N] = (m+1) L^m - m L^(m-1)`.
pub fn node_class(m: u32) -> MotiveClass {
    let m = m as i64;
    &MotiveClass::monomial(m + 1, m) - &MotiveClass::monomial(m, m - 1)
}

/// `(L + (L-1)s + (L^2-L)s^5 + L^2 s^6) / ((1 - L s^6)(1 - s))`.
pub fn cusp_theta_closed() -> MotiveRational {
    let mut num = vec![MotiveClass::zero(); 7];
    num[0] = l(1);
    num[1] = c(&[(1, 1), (0, -1)]);
    num[5] = c(&[(2, 1), (1, -1)]);
    num[6] = l(2);
    let den = tpoly_mul(&one_minus(l(1), 6), &one_minus(MotiveClass::one(), 1));
    MotiveRational::new(num, den).expect("unit constant term")
}

/// `[nabla_{l_m} C]` read off the closed form: the coefficient of `s^(m-1)`
/// times `L^(m-1)`.
pub fn cusp_class(m: u32) -> MotiveClass {
    assert!(m >= 1);
    cusp_theta_closed()
        .expand(m as usize - 1)
        .coeff(m as usize - 1)
        .shift(m as i64 - 1)
}

/// Printed closed form of the reduced auto zeta series of the cusp.
pub fn cusp_zeta_closed() -> MotiveRational {
    let num = vec![
        MotiveClass::one(),
        MotiveClass::zero(),
        MotiveClass::zero(),
        -c(&[(1, 1), (0, 1)]),
        l(1),
        c(&[(1, 1), (0, -1)]),
        MotiveClass::monomial(2, 2),
    ];
    let den = tpoly_mul(&one_minus(l(1), 3), &one_minus(MotiveClass::one(), 1));
    MotiveRational::new(num, den).expect("unit constant term")
}

/// Printed closed form of the reduced auto zeta series of the node.
pub fn node_zeta_closed() -> MotiveRational {
    let num = vec![
        MotiveClass::one(),
        -c(&[(2, 1), (1, 4), (0, -3)]),
        c(&[(4, 2), (2, -1)]),
        -c(&[(6, 3), (4, -1)]),
    ];
    MotiveRational::new(num, cube_l2()).expect("unit constant term")
}

fn cube_l2() -> Vec<MotiveClass> {
    let f = one_minus(l(2), 1);
    tpoly_mul(&tpoly_mul(&f, &f), &f)
}

/// Printed closed form of `sum_n [nabla_{l_(n+1)} N]^2 t^n`.
pub fn node_square_theta_printed() -> MotiveRational {
    let num = vec![
        c(&[(2, 2), (1, -4), (0, 3)]),
        -c(&[(4, 1), (2, 1)]),
        l(4),
    ];
    MotiveRational::new(num, cube_l2()).expect("unit constant term")
}

/// The same series recomputed from the class formula, and the rational
/// function the detector recovers from it.
pub fn node_square_theta_recomputed(t: usize) -> (MotiveSeries, Option<MotiveRational>) {
    let s = MotiveSeries::new(
        t,
        (0..=t as u32).map(|n| node_class(n + 1).pow(2)).collect(),
    );
    let r = detect_rationality(&s, 8);
    (s, r)
}

/// `nabla_{l_m} X` for `m` in `ms`, each paired with `class(m)`.
pub fn arc_catalog(
    x: &AffineScheme,
    label: &str,
    ms: impl IntoIterator<Item = u32>,
    class: impl Fn(u32) -> MotiveClass,
) -> Result<Vec<KnownClass>, ArcError> {
    ms.into_iter()
        .map(|m| {
            let a = arc_space(x, &FatPoint::linear(m)?)?;
            Ok(KnownClass {
                name: format!("nabla_l{m} {label}"),
                ideal: a.ideal(),
                class: class(m),
            })
        })
        .collect()
}

pub fn node_catalog(max_m: u32) -> Result<Vec<KnownClass>, ArcError> {
    arc_catalog(&AffineScheme::node(), "node", 1..=max_m, node_class)
}

pub fn cusp_catalog(max_m: u32) -> Result<Vec<KnownClass>, ArcError> {
    arc_catalog(&AffineScheme::cusp(), "cusp", 1..=max_m, cusp_class)
}

/// The expansion of `[nabla_{l_(n+1)} N]^2` as printed, with leading
/// coefficient `(n+1)^2` where squaring gives `(n+2)^2`.
pub fn node_square_coefficient_printed(n: u32) -> MotiveClass {
    let k = BigInt::from(n + 1);
    let j = BigInt::from(n + 2);
    let inner = &(&MotiveClass::lefschetz().pow(2).scale(&(&k * &k))
        - &MotiveClass::lefschetz().scale(&(BigInt::from(2) * &j * &k)))
        + &MotiveClass::from_integer(&k * &k);
    inner.shift(2 * n as i64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_classes() {
        assert_eq!(node_class(1), c(&[(1, 2), (0, -1)]));
        assert_eq!(node_class(2), c(&[(2, 3), (1, -2)]));
        assert_eq!(node_class(2).pow(2), c(&[(4, 9), (3, -12), (2, 4)]));
    }

    #[test]
    fn cusp_classes_from_closed_form() {
        assert_eq!(cusp_class(1), l(1));
        assert_eq!(cusp_class(2), c(&[(2, 2), (1, -1)]));
        assert_eq!(cusp_class(3), c(&[(3, 2), (2, -1)]));
    }

    #[test]
    fn printed_node_square_theta_differs_from_formula() {
        let (s, r) = node_square_theta_recomputed(10);
        let printed = node_square_theta_printed().expand(10);
        assert_ne!(s.coeff(0), printed.coeff(0));
        let r = r.expect("rational");
        assert_eq!(r.denominator(), &cube_l2()[..]);
        assert_eq!(r.expand(10), s);
        // the printed intermediate expansion has the wrong leading coefficient
        assert_ne!(node_square_coefficient_printed(1), node_class(2).pow(2));
    }
}
