use proptest::prelude::*;

use autoarc::motive::{
    count_points, detect_rationality, interpolate_class, CountBudget, InterpolationConfig, MotiveClass, MotiveRational,
    MotiveSeries,
};
use autoarc::ideal::Ideal;
use autoarc::poly::{Coeff, Monomial, PolyRing, Polynomial, Ring};

fn ring3() -> Ring {
    PolyRing::rational(&["x", "y", "z"]).unwrap()
}

fn poly(ring: &Ring, terms: &[(u32, u32, u32, i64, i64)]) -> Polynomial {
    Polynomial::from_terms(
        ring,
        terms
            .iter()
            .map(|&(a, b, c, n, d)| (Monomial::from_exponents(vec![a, b, c]), Coeff::new(n.into(), d.into())))
            .collect(),
    )
}

fn arb_terms() -> impl Strategy<Value = Vec<(u32, u32, u32, i64, i64)>> {
    prop::collection::vec((0u32..3, 0u32..3, 0u32..3, -5i64..6, 1i64..4), 0..5)
}

fn arb_class() -> impl Strategy<Value = MotiveClass> {
    prop::collection::vec((-3i64..5, -4i64..5), 0..4).prop_map(MotiveClass::from_terms)
}

fn arb_series(t: usize) -> impl Strategy<Value = MotiveSeries> {
    prop::collection::vec(arb_class(), t + 1).prop_map(move |c| MotiveSeries::new(t, c))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn polynomial_ring_axioms(a in arb_terms(), b in arb_terms(), c in arb_terms()) {
        let r = ring3();
        let (a, b, c) = (poly(&r, &a), poly(&r, &b), poly(&r, &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(a in arb_terms(), b in arb_terms(), imgs in prop::collection::vec(arb_terms(), 3)) {
        let r = ring3();
        let (a, b) = (poly(&r, &a), poly(&r, &b));
        let images: Vec<Polynomial> = imgs.iter().map(|t| poly(&r, t)).collect();
        let sa = a.substitute(&images).unwrap();
        let sb = b.substitute(&images).unwrap();
        prop_assert_eq!((&a * &b).substitute(&images).unwrap(), &sa * &sb);
        prop_assert_eq!((&a + &b).substitute(&images).unwrap(), &sa + &sb);
    }

    #[test]
    fn canonical_strings_reparse(a in arb_terms()) {
        let r = ring3();
        let a = poly(&r, &a);
        let back = autoarc::poly::parse(&a.to_string(), &r).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn class_ring_axioms(a in arb_class(), b in arb_class(), c in arb_class()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn dimension_is_additive(a in arb_class(), b in arb_class()) {
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!((&a * &b).dim(), Some(a.dim().unwrap() + b.dim().unwrap()));
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in arb_class(), b in arb_class(), q in 2i64..9) {
        prop_assert_eq!((&a * &b).evaluate_at_q(q), a.evaluate_at_q(q) * b.evaluate_at_q(q));
        prop_assert_eq!((&a + &b).evaluate_at_q(q), a.evaluate_at_q(q) + b.evaluate_at_q(q));
    }

    #[test]
    fn series_product_is_commutative_and_associative(a in arb_series(4), b in arb_series(4), c in arb_series(4)) {
        prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn star_filter_parts_sum_to_series(s in arb_series(7)) {
        prop_assert_eq!(s.star_filter(1, 0), s.clone());
        prop_assert_eq!(s.star_filter(2, 0).add(&s.star_filter(2, 1)).unwrap(), s.clone());
        let thirds = s.star_filter(3, 0).add(&s.star_filter(3, 1)).unwrap().add(&s.star_filter(3, 2)).unwrap();
        prop_assert_eq!(thirds, s);
    }

    #[test]
    fn t_substitution_commutes_with_products(a in arb_series(3), b in arb_series(3)) {
        prop_assert_eq!(
            a.mul(&b).unwrap().substitute_t_power(2),
            a.substitute_t_power(2).mul(&b.substitute_t_power(2)).unwrap()
        );
    }
}

fn arb_rational() -> impl Strategy<Value = MotiveRational> {
    (
        prop::collection::vec(arb_class(), 1..3),
        prop::collection::vec(arb_class(), 1..3),
        any::<bool>(),
        -2i64..3,
    )
        .prop_map(|(num, tail, neg, e)| {
            let unit = if neg { -MotiveClass::l_pow(e) } else { MotiveClass::l_pow(e) };
            let mut den = vec![unit];
            den.extend(tail);
            MotiveRational::new(num, den).unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    /// Whatever the detector returns reproduces every coefficient it saw,
    /// and a rational function of small degree is always found again.
    #[test]
    fn detection_reexpands(r in arb_rational()) {
        let t = 10;
        let s = r.expand(t);
        let found = detect_rationality(&s, 4);
        prop_assert!(found.is_some());
        prop_assert_eq!(found.unwrap().expand(t), s);
    }
}

/// Squarefree monomial ideals have polynomial point counts.
fn arb_monomial_ideal() -> impl Strategy<Value = Vec<Vec<usize>>> {
    prop::collection::vec(prop::collection::btree_set(0usize..5, 1..3), 1..4)
        .prop_map(|gs| gs.into_iter().map(|s| s.into_iter().collect()).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn interpolated_classes_predict_counts(gens in arb_monomial_ideal()) {
        let names = ["a", "b", "c", "d", "e"];
        let ring = PolyRing::rational(&names).unwrap();
        let text: Vec<String> = gens
            .iter()
            .map(|g| g.iter().map(|&i| names[i]).collect::<Vec<_>>().join("*"))
            .collect();
        let ideal = Ideal::from_strs(&ring, &text).unwrap();
        let r = interpolate_class(&ideal, &InterpolationConfig::default()).unwrap();
        for p in [13u64, 17] {
            let counted = count_points(&ideal, p, &CountBudget::default()).unwrap();
            let predicted = r.class.evaluate_at_q(p as i64);
            prop_assert!(predicted.is_integer());
            prop_assert_eq!(predicted.to_integer(), counted);
        }
    }
}
