use autoarc::arc::{parse_point, AffineScheme};
use autoarc::motive::{detect_rationality, tpoly_mul, InterpolationConfig, MotiveClass, MotiveRational};
use autoarc::verify::zeta_config;
use autoarc::zeta::catalog::{
    cusp_catalog, cusp_class, node_catalog, node_class, node_square_coefficient_printed, node_square_theta_printed,
    node_square_theta_recomputed,
};
use autoarc::zeta::{asymptotic_defect, auto_zeta, igusa_theta, ClassStrategy, Normalization, ZetaConfig};

fn interp() -> ClassStrategy {
    ClassStrategy::Interpolate(InterpolationConfig::default())
}

fn catalog(c: Vec<autoarc::zeta::KnownClass>) -> ClassStrategy {
    ClassStrategy::Supplied {
        catalog: c,
        fallback: Some(InterpolationConfig::default()),
    }
}

fn class(terms: &[(i64, i64)]) -> MotiveClass {
    MotiveClass::from_terms(terms.iter().copied())
}

fn ratios(x: &AffineScheme, n: u32, s: &ClassStrategy) -> Vec<String> {
    let p = parse_point(&vec!["0"; x.ring().nvars()].join(",")).unwrap();
    asymptotic_defect(x, &p, n, s).unwrap().into_iter().map(|r| r.ratio).collect()
}

/// Needs T >= 15 to see the degree-6 denominator with enough checks.
#[test]
fn cusp_codim_series_is_rational() {
    let s = auto_zeta(&zeta_config(AffineScheme::cusp(), 16, Normalization::Codim).unwrap()).unwrap();
    let r = detect_rationality(&s, 6).expect("rational");
    assert_eq!(r.expand(16), s);
    let den = r.denominator();
    assert_eq!(den.len(), 7);
    assert_eq!(den[3], -class(&[(0, 1), (-1, 1)]));
    assert_eq!(den[6], MotiveClass::l_pow(-1));
}

#[test]
fn node_codim_series_has_cubic_pole_at_one() {
    let s = auto_zeta(&zeta_config(AffineScheme::node(), 12, Normalization::Codim).unwrap()).unwrap();
    let r = detect_rationality(&s, 6).expect("rational");
    assert_eq!(r.expand(12), s);
    let ints = |v: &[i64]| v.iter().map(|&x| MotiveClass::from_integer(x)).collect::<Vec<_>>();
    assert_eq!(r.denominator(), ints(&[1, -3, 3, -1]).as_slice());
}

#[test]
fn catalog_and_interpolation_agree() {
    for x in [AffineScheme::node(), AffineScheme::cusp()] {
        let mut a = zeta_config(x.clone(), 3, Normalization::Definition).unwrap();
        let via_catalog = auto_zeta(&a).unwrap();
        a.strategy = interp();
        assert_eq!(auto_zeta(&a).unwrap(), via_catalog);
    }
}

#[test]
fn catalog_classes_match_interpolation_on_arc_spaces() {
    let s = interp();
    let node = igusa_theta(&AffineScheme::node(), 2, &s).unwrap();
    let cusp = igusa_theta(&AffineScheme::cusp(), 2, &s).unwrap();
    for n in 0..=2u32 {
        let m = n + 1;
        assert_eq!(node.coeff(n as usize), &node_class(m).shift(-(m as i64)));
        assert_eq!(cusp.coeff(n as usize), &cusp_class(m).shift(-(m as i64)));
    }
}

/// Arc spaces of a product are products, so the theta series of `N x N`
/// is the coefficientwise square of that of `N`.
#[test]
fn theta_of_node_squared_is_coefficientwise_square() {
    let nn = AffineScheme::parse(&["x", "y", "z", "w"], &["x*y", "z*w"]).unwrap();
    let strat = catalog(node_catalog(4).unwrap());
    let square = igusa_theta(&nn, 3, &strat).unwrap();
    let single = igusa_theta(&AffineScheme::node(), 3, &strat).unwrap();
    for n in 0..=3 {
        assert_eq!(square.coeff(n), &single.coeff(n).pow(2), "t^{n}");
    }
}

#[test]
fn node_square_closed_form() {
    let (s, r) = node_square_theta_recomputed(10);
    let r = r.expect("rational");
    let l = MotiveClass::lefschetz();
    let num = vec![
        (&l.scale(&2.into()) - &MotiveClass::one()).pow(2),
        class(&[(2, 1), (4, -3)]),
        MotiveClass::l_pow(6),
    ];
    let f = vec![MotiveClass::one(), -MotiveClass::l_pow(2)];
    let den = tpoly_mul(&tpoly_mul(&f, &f), &f);
    let expected = MotiveRational::new(num, den).unwrap();
    assert_eq!(expected.expand(10), s);
    assert_eq!(r.expand(10), s);
    assert_ne!(node_square_theta_printed().expand(10), s);
    // the printed expansion squares (n+1) where the class has (n+2)
    for n in 0..4u32 {
        assert_ne!(node_square_coefficient_printed(n), node_class(n + 1).pow(2));
    }
}

#[test]
fn defect_of_the_line() {
    let line = AffineScheme::affine_space(1);
    assert_eq!(ratios(&line, 5, &interp()), ["1/2", "2/3", "3/4", "4/5"]);
}

#[test]
fn defect_of_the_node() {
    let rows = asymptotic_defect(
        &AffineScheme::node(),
        &parse_point("0,0").unwrap(),
        6,
        &catalog(node_catalog(8).unwrap()),
    )
    .unwrap();
    for r in rows {
        assert_eq!(r.dimension, 4 + 2 * (r.n as i64 - 2), "n={}", r.n);
        assert_eq!(r.jet_length, 2 * r.n as usize - 1);
    }
}

#[test]
fn defect_of_the_cusp() {
    let s = catalog(cusp_catalog(10).unwrap());
    assert_eq!(ratios(&AffineScheme::cusp(), 5, &s), ["4/3", "7/5", "9/7", "11/9"]);
}

#[test]
fn smooth_points_give_geometric_series() {
    let cfg = ZetaConfig {
        scheme: AffineScheme::parse(&["x", "y"], &["y - x^2"]).unwrap(),
        point: parse_point("0,0").unwrap(),
        max_order: 4,
        normalization: Normalization::Definition,
        strategy: interp(),
    };
    let s = auto_zeta(&cfg).unwrap();
    for n in 0..=4 {
        assert_eq!(s.coeff(n), &MotiveClass::l_pow(-1));
    }
}
