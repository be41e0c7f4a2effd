//! Published equation tables for A_n of the cusp and the node.

use autoarc::arc::{auto_arc, parse_point, AffineScheme};
use autoarc::ideal::{equal_up_to_renaming, Ideal, RenamingBudget};
use autoarc::poly::PolyRing;
use autoarc::verify::{golden_tables, GoldenTable};

fn table(name: &str) -> GoldenTable {
    golden_tables().into_iter().find(|t| t.name == name).unwrap()
}

#[test]
fn six_tables_are_embedded() {
    let names: Vec<String> = golden_tables().into_iter().map(|t| t.name).collect();
    assert_eq!(names.len(), 6);
    for t in golden_tables() {
        assert_eq!(t.bookkeeping.len(), 4, "{}", t.name);
        assert_eq!(t.mapping.len(), t.printed_variables.len(), "{}", t.name);
    }
}

#[test]
fn verbatim_tables() {
    for name in ["auto_cusp_2", "auto_cusp_3", "auto_node_2", "auto_node_4"] {
        let t = table(name);
        assert!(t.errata.is_none());
        let o = t.check().unwrap();
        assert!(o.printed_matches && o.printed_renaming, "{name}");
    }
}

#[test]
fn tables_with_errata() {
    for name in ["auto_cusp_4", "auto_node_3"] {
        let o = table(name).check().unwrap();
        assert!(!o.printed_matches, "{name} printed");
        assert!(!o.printed_renaming, "{name} printed");
        assert!(o.corrected_matches && o.corrected_renaming, "{name} corrected");
        assert!(o.errata_confirmed, "{name} errata");
    }
}

/// The cusp in the tables is `y^2 + x^3`; `x -> -x` carries it to
/// `y^2 - x^3`, so the two auto-arc spaces agree up to a linear change of
/// coordinates that fixes the monomial pattern.
#[test]
fn cusp_sign_conventions_have_isomorphic_tables() {
    let plus = AffineScheme::parse(&["x", "y"], &["y^2 + x^3"]).unwrap();
    let minus = AffineScheme::cusp();
    let p = parse_point("0,0").unwrap();
    for n in [2u32, 3] {
        let a = auto_arc(&plus, &p, n).unwrap().ideal();
        let b = auto_arc(&minus, &p, n).unwrap().ideal();
        let budget = RenamingBudget {
            max_vars: 16,
            ..RenamingBudget::default()
        };
        assert!(equal_up_to_renaming(&a, &b, budget).unwrap().is_some(), "n={n}");
    }
}

#[test]
fn printed_equations_parse_in_printed_variables() {
    for t in golden_tables() {
        let ring = PolyRing::rational(&t.printed_variables).unwrap();
        let i = Ideal::from_strs(&ring, &t.printed_equations).unwrap();
        assert!(!i.generators().is_empty());
    }
}
