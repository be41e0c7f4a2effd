//! Executable checks for the published tables, the structure results, the
//! class formulas and the series identities. Each check reports pass/fail
//! with a human-readable account of what was computed.

use serde::{Deserialize, Serialize};
use std::time::Instant;

use crate::arc::{arc_space, auto_arc, parse_point, product_fat_point, AffineScheme, FatPoint};
use crate::ideal::{equal_under_mapping, equal_up_to_renaming, Ideal, RenamingBudget};
use crate::motive::{
    count_points, detect_rationality, interpolate_class, tpoly_mul, CountBudget, InterpolationConfig, MotiveClass,
    MotiveSeries,
};
use crate::poly::{parse, Coeff, PolyRing, Polynomial};
use crate::reduction::{decompose, heuristic_reduce, is_affine_space, ReducedPresentation};
use crate::zeta::catalog::{cusp_catalog, cusp_class, cusp_zeta_closed, node_catalog, node_class, node_zeta_closed};
use crate::zeta::{auto_zeta, compare, fit_shifts, ClassStrategy, Normalization, ZetaConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    PaperTables,
    Structure,
    Classes,
    Zeta,
    Properties,
    All,
}

impl Suite {
    pub fn checks(self) -> &'static [Check] {
        use Check::*;
        match self {
            Suite::PaperTables => &[Criterion(1)],
            Suite::Structure => &[Criterion(2), Criterion(3), Criterion(10)],
            Suite::Classes => &[Criterion(4), Criterion(5)],
            Suite::Zeta => &[Criterion(6), Criterion(7), Criterion(9), CuspRationality],
            Suite::Properties => &[Criterion(6), Criterion(8), RingAxioms, SeriesOperations],
            Suite::All => &[
                Criterion(1),
                Criterion(2),
                Criterion(3),
                Criterion(4),
                Criterion(5),
                Criterion(6),
                Criterion(7),
                Criterion(8),
                Criterion(9),
                Criterion(10),
            ],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Check {
    /// Numbered acceptance criterion `1 ..= 10`.
    Criterion(u8),
    RingAxioms,
    SeriesOperations,
    CuspRationality,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub id: String,
    pub title: String,
    pub passed: bool,
    pub detail: Vec<String>,
    /// Wall time; left out of JSON to keep output reproducible.
    #[serde(skip)]
    pub seconds: f64,
}

impl CheckResult {
    /// `criterion 4 PASS (0.8s) node classes ...`
    pub fn line(&self) -> String {
        format!(
            "{} {} ({:.1}s) {}",
            self.id,
            if self.passed { "PASS" } else { "FAIL" },
            self.seconds,
            self.title
        )
    }
}

type Outcome = Result<(bool, Vec<String>), String>;

pub fn run_check(c: Check) -> CheckResult {
    let start = Instant::now();
    let (id, title, outcome): (String, &str, Outcome) = match c {
        Check::Criterion(1) => ("criterion 1".into(), "equation tables of A_n for cusp and node, n = 2, 3, 4", golden_tables_check()),
        Check::Criterion(2) => ("criterion 2".into(), "reduced structure of A_n for cusp and node", structure()),
        Check::Criterion(3) => ("criterion 3".into(), "affine rank of reduced A_n(A^d, 0)", affine_ranks()),
        Check::Criterion(4) => ("criterion 4".into(), "node classes by interpolation", node_classes()),
        Check::Criterion(5) => ("criterion 5".into(), "cusp classes against the closed form of Theta", cusp_classes()),
        Check::Criterion(6) => ("criterion 6".into(), "smooth-case law for A^1 and A^2", smooth_case()),
        Check::Criterion(7) => ("criterion 7".into(), "closed forms of the auto zeta series up to a shift", closed_form_shifts()),
        Check::Criterion(8) => ("criterion 8".into(), "functoriality of arc spaces in the fat point", functoriality()),
        Check::Criterion(9) => ("criterion 9".into(), "rationality of the node series", node_rationality()),
        Check::Criterion(10) => ("criterion 10".into(), "point counts preserved by reduction", conservativity()),
        Check::Criterion(k) => (format!("criterion {k}"), "unknown criterion", Err("no such criterion".into())),
        Check::RingAxioms => ("ring-axioms".into(), "polynomial ring axioms and substitution", ring_axioms()),
        Check::SeriesOperations => ("series-operations".into(), "star filter, t-substitution and evaluation", series_operations()),
        Check::CuspRationality => ("cusp-rationality".into(), "rationality of the cusp series", cusp_rationality()),
    };
    let (passed, detail) = match outcome {
        Ok(x) => x,
        Err(e) => (false, vec![format!("error: {e}")]),
    };
    CheckResult {
        id,
        title: title.to_string(),
        passed,
        detail,
        seconds: start.elapsed().as_secs_f64(),
    }
}

pub fn run_suite(s: Suite) -> Vec<CheckResult> {
    s.checks().iter().map(|&c| run_check(c)).collect()
}

fn origin(d: usize) -> Vec<Coeff> {
    vec![Coeff::default(); d]
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn renames(a: &Ideal, b: &Ideal, max_vars: usize) -> Result<bool, String> {
    let budget = RenamingBudget {
        max_vars,
        ..RenamingBudget::default()
    };
    Ok(equal_up_to_renaming(a, b, budget).map_err(err)?.is_some())
}

// ---------------------------------------------------------------------------
// equation tables

const GOLDEN: [(&str, &str); 6] = [
    ("auto_cusp_2", include_str!("../golden/auto_cusp_2.json")),
    ("auto_cusp_3", include_str!("../golden/auto_cusp_3.json")),
    ("auto_cusp_4", include_str!("../golden/auto_cusp_4.json")),
    ("auto_node_2", include_str!("../golden/auto_node_2.json")),
    ("auto_node_3", include_str!("../golden/auto_node_3.json")),
    ("auto_node_4", include_str!("../golden/auto_node_4.json")),
];

#[derive(Clone, Debug, Deserialize)]
pub struct GoldenScheme {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Errata {
    pub remove: Vec<String>,
    pub add: Vec<String>,
    pub note: String,
}

/// A published equation table, its variable names mapped onto the grid
/// `a_<i>_<j>`, with the bookkeeping variables already dropped.
#[derive(Clone, Debug, Deserialize)]
pub struct GoldenTable {
    #[serde(skip)]
    pub name: String,
    pub scheme: GoldenScheme,
    pub point: String,
    pub n: u32,
    pub printed_variables: Vec<String>,
    pub printed_equations: Vec<String>,
    pub mapping: Vec<(String, String)>,
    pub bookkeeping: Vec<String>,
    #[serde(default)]
    pub errata: Option<Errata>,
}

pub fn golden_tables() -> Vec<GoldenTable> {
    GOLDEN
        .iter()
        .map(|(name, text)| {
            let mut t: GoldenTable = serde_json::from_str(text).expect("embedded table");
            t.name = name.to_string();
            t
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GoldenOutcome {
    pub name: String,
    /// Printed table equals the engine ideal under the recorded mapping.
    pub printed_matches: bool,
    /// A renaming search also finds a bijection for the printed table.
    pub printed_renaming: bool,
    /// Printed table with errata applied equals the engine ideal.
    pub corrected_matches: bool,
    pub corrected_renaming: bool,
    /// Every removed equation is outside the engine ideal and every added
    /// one inside it.
    pub errata_confirmed: bool,
}

impl GoldenTable {
    fn printed_ideal(&self, equations: &[String]) -> Result<Ideal, String> {
        let ring = PolyRing::rational(&self.printed_variables).map_err(err)?;
        Ideal::from_strs(&ring, equations).map_err(err)
    }

    fn corrected(&self) -> Vec<String> {
        let mut eqs: Vec<String> = self.printed_equations.clone();
        if let Some(e) = &self.errata {
            eqs.retain(|s| !e.remove.contains(s));
            eqs.extend(e.add.iter().cloned());
        }
        eqs
    }

    pub fn check(&self) -> Result<GoldenOutcome, String> {
        let x = AffineScheme::parse(&self.scheme.variables, &self.scheme.generators).map_err(err)?;
        let p = parse_point(&self.point).map_err(err)?;
        let engine = auto_arc(&x, &p, self.n).map_err(err)?.ideal();
        let max_vars = engine.ring().nvars();

        let printed = self.printed_ideal(&self.printed_equations)?;
        let printed_matches = equal_under_mapping(&printed, &engine, &self.mapping).map_err(err)?;
        let printed_renaming = renames(&printed, &engine, max_vars)?;
        let (corrected_matches, corrected_renaming, errata_confirmed) = match &self.errata {
            None => (printed_matches, printed_renaming, true),
            Some(e) => {
                let corrected = self.printed_ideal(&self.corrected())?;
                let gb = engine.groebner().map_err(err)?;
                let ring = PolyRing::rational(&self.printed_variables).map_err(err)?;
                let map: Vec<usize> = self
                    .printed_variables
                    .iter()
                    .map(|v| {
                        let target = &self.mapping.iter().find(|(a, _)| a == v).expect("mapped").1;
                        engine.ring().var_index(target).expect("grid variable")
                    })
                    .collect();
                let image = |s: &String| -> Result<Polynomial, String> {
                    Ok(parse(s, &ring).map_err(err)?.rename_into(engine.ring(), &map))
                };
                let mut confirmed = true;
                for s in &e.remove {
                    confirmed &= !gb.contains(&image(s)?).map_err(err)?;
                }
                for s in &e.add {
                    confirmed &= gb.contains(&image(s)?).map_err(err)?;
                }
                (
                    equal_under_mapping(&corrected, &engine, &self.mapping).map_err(err)?,
                    renames(&corrected, &engine, max_vars)?,
                    confirmed,
                )
            }
        };
        Ok(GoldenOutcome {
            name: self.name.clone(),
            printed_matches,
            printed_renaming,
            corrected_matches,
            corrected_renaming,
            errata_confirmed,
        })
    }
}

fn golden_tables_check() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for t in golden_tables() {
        let o = t.check()?;
        let verbatim = o.printed_matches && o.printed_renaming;
        let fixed = o.corrected_matches && o.corrected_renaming && o.errata_confirmed;
        ok &= verbatim || fixed;
        let note = match (&t.errata, verbatim) {
            (_, true) => "printed table matches".to_string(),
            (Some(e), false) => format!(
                "printed table differs; with errata (remove {:?}, add {:?}) {}; errata {}",
                e.remove,
                e.add,
                if o.corrected_matches && o.corrected_renaming { "matches" } else { "still differs" },
                if o.errata_confirmed { "confirmed by ideal membership" } else { "NOT confirmed" }
            ),
            (None, false) => "printed table differs and no erratum is recorded".to_string(),
        };
        detail.push(format!("{}: {note}", t.name));
    }
    Ok((ok, detail))
}

// ---------------------------------------------------------------------------
// reduced structure

fn reduced_auto(x: &AffineScheme, n: u32) -> Result<ReducedPresentation, String> {
    Ok(heuristic_reduce(&auto_arc(x, &origin(2), n).map_err(err)?))
}

fn linear_arcs(x: &AffineScheme, m: u32) -> Result<Ideal, String> {
    Ok(arc_space(x, &FatPoint::linear(m).map_err(err)?).map_err(err)?.ideal())
}

fn structure() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    let cusp = AffineScheme::cusp();
    for (n, rank) in [(2u32, 4usize), (3, 7)] {
        let got = is_affine_space(&reduced_auto(&cusp, n)?);
        ok &= got == Some(rank);
        detail.push(format!("cusp n={n}: affine space of rank {got:?}, expected {rank}"));
    }
    for n in [4u32, 5] {
        let d = decompose(&reduced_auto(&cusp, n)?);
        let m = 2 * (n - 3);
        let single = d.factors.len() == 1;
        let iso = single && renames(&d.factors[0], &linear_arcs(&cusp, m)?, 16)?;
        ok &= d.affine_rank == 7 && iso;
        detail.push(format!(
            "cusp n={n}: affine rank {}, {} factor(s), factor = arcs over l_{m}: {iso}",
            d.affine_rank,
            d.factors.len()
        ));
    }
    let node = AffineScheme::node();
    for n in [3u32, 4, 5] {
        let d = decompose(&reduced_auto(&node, n)?);
        let target = linear_arcs(&node, n - 2)?;
        let mut iso = d.factors.len() == 2;
        for f in &d.factors {
            iso &= renames(f, &target, 16)?;
        }
        ok &= d.affine_rank == 4 && iso;
        detail.push(format!(
            "node n={n}: affine rank {}, {} factor(s), each = arcs over l_{}: {iso}",
            d.affine_rank,
            d.factors.len(),
            n - 2
        ));
    }
    Ok((ok, detail))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn affine_ranks() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for d in [1usize, 2] {
        for n in [2u32, 3, 4] {
            let expected = d * (binomial(n as usize - 1 + d, d) - 1);
            let a = auto_arc(&AffineScheme::affine_space(d), &origin(d), n).map_err(err)?;
            let got = is_affine_space(&heuristic_reduce(&a));
            ok &= got == Some(expected);
            detail.push(format!("d={d} n={n}: rank {got:?}, expected {expected}"));
        }
    }
    Ok((ok, detail))
}

fn conservativity() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    let budget = CountBudget::default();
    for (name, x, p) in [("cusp", AffineScheme::cusp(), 7u64), ("node", AffineScheme::node(), 5)] {
        for n in 2u32..=5 {
            let r = reduced_auto(&x, n)?;
            let original = r.original();
            let occ = original.occurring_variables().len();
            if occ > 12 {
                detail.push(format!("{name} n={n}: {occ} occurring variables, skipped"));
                continue;
            }
            let before = count_points(&original, p, &budget).map_err(err)?;
            let (residual, _) = r.residual_ideal().compact();
            let after = count_points(&residual, p, &budget).map_err(err)?
                * num_traits::pow(num_bigint::BigInt::from(p), r.free.len());
            ok &= before == after;
            detail.push(format!("{name} n={n} over F_{p}: original {before}, residual times free {after}"));
        }
    }
    Ok((ok, detail))
}

// ---------------------------------------------------------------------------
// classes

fn node_classes() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    let node = AffineScheme::node();
    for (m, primes) in [(2u32, vec![2u64, 3, 5, 7]), (3, vec![2, 3, 5, 7, 11])] {
        let cfg = InterpolationConfig {
            degree_bound: Some(m as usize),
            primes: Some(primes),
            ..InterpolationConfig::default()
        };
        let r = interpolate_class(&linear_arcs(&node, m)?, &cfg).map_err(err)?;
        let expected = node_class(m);
        ok &= r.class == expected;
        detail.push(format!(
            "m={m}: {} from {:?}, held out {:?}; expected {expected}",
            r.class, r.samples, r.verification
        ));
    }
    Ok((ok, detail))
}

fn cusp_classes() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    let cusp = AffineScheme::cusp();
    for m in 1u32..=3 {
        let ideal = linear_arcs(&cusp, m)?;
        let expected = cusp_class(m);
        let cfg = InterpolationConfig {
            degree_bound: Some(m as usize + 1),
            excluded: vec![2, 3],
            ..InterpolationConfig::default()
        };
        let r = interpolate_class(&ideal, &cfg).map_err(err)?;
        let mut line = format!(
            "m={m}: {} from {:?}, held out {:?}; closed form gives {expected}",
            r.class, r.samples, r.verification
        );
        if r.class != expected {
            // a discrepancy must reproduce on a disjoint prime set
            let used: Vec<u64> = r.samples.iter().chain(&r.verification).map(|s| s.0).collect();
            let again = interpolate_class(
                &ideal,
                &InterpolationConfig {
                    excluded: [vec![2, 3], used].concat(),
                    ..cfg
                },
            )
            .map_err(err)?;
            line += &format!("; disjoint primes {:?} give {}", again.samples, again.class);
            ok = false;
        }
        detail.push(line);
    }
    Ok((ok, detail))
}

// ---------------------------------------------------------------------------
// series

fn catalog_strategy(t: usize) -> Result<ClassStrategy, String> {
    let mut catalog = cusp_catalog(2 * t as u32 + 2).map_err(err)?;
    catalog.extend(node_catalog(t as u32 + 2).map_err(err)?);
    Ok(ClassStrategy::Supplied {
        catalog,
        fallback: Some(InterpolationConfig::default()),
    })
}

pub fn zeta_config(x: AffineScheme, t: usize, normalization: Normalization) -> Result<ZetaConfig, String> {
    let d = x.ring().nvars();
    Ok(ZetaConfig {
        scheme: x,
        point: origin(d),
        max_order: t,
        normalization,
        strategy: catalog_strategy(t)?,
    })
}

fn smooth_case() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    for d in [1usize, 2] {
        let cfg = ZetaConfig {
            scheme: AffineScheme::affine_space(d),
            point: origin(d),
            max_order: 5,
            normalization: Normalization::Definition,
            strategy: ClassStrategy::Interpolate(InterpolationConfig::default()),
        };
        let s = auto_zeta(&cfg).map_err(err)?;
        let expected = MotiveSeries::geometric(5, &MotiveClass::l_pow(-(d as i64)));
        ok &= s == expected;
        detail.push(format!("d={d}: {:?}", s.coeffs().iter().map(|c| c.to_string()).collect::<Vec<_>>()));
    }
    Ok((ok, detail))
}

fn closed_form_shifts() -> Outcome {
    const T: usize = 10;
    let mut ok = true;
    let mut detail = Vec::new();
    for (name, x, closed, tail) in [
        ("cusp", AffineScheme::cusp(), cusp_zeta_closed(), 4usize),
        ("node", AffineScheme::node(), node_zeta_closed(), 3),
    ] {
        let mut fitting = Vec::new();
        for norm in [Normalization::Definition, Normalization::Codim] {
            let s = auto_zeta(&zeta_config(x.clone(), T, norm)?).map_err(err)?;
            let rep = compare(&s, &closed);
            let fits = fit_shifts(&s, &closed, tail, 4, 3);
            let agreeing: Vec<usize> = rep.diff.iter().filter(|r| r.matches).map(|r| r.exponent).collect();
            detail.push(format!(
                "{name} {norm:?}: unshifted agreement at t^{agreeing:?}; shifts (a, b) fitting the tail from t^{tail}: {:?}",
                fits.iter().map(|f| (f.a, f.b)).collect::<Vec<_>>()
            ));
            if !fits.is_empty() {
                fitting.push((norm, fits));
            }
        }
        let unique = fitting.len() == 1 && fitting[0].1.len() == 1;
        ok &= unique;
        detail.push(format!(
            "{name}: {}",
            if unique {
                let f = &fitting[0].1[0];
                format!("tail agrees under {:?} with L^{} t^{}", fitting[0].0, f.a, f.b)
            } else {
                format!("no unique normalization and shift ({} normalizations fit)", fitting.len())
            }
        ));
    }
    Ok((ok, detail))
}

/// `(1 - L^2 t)^3 (1 - t)`.
pub fn node_target_denominator() -> Vec<MotiveClass> {
    let f = vec![MotiveClass::one(), -MotiveClass::l_pow(2)];
    let g = vec![MotiveClass::one(), -MotiveClass::one()];
    tpoly_mul(&tpoly_mul(&tpoly_mul(&f, &f), &f), &g)
}

fn show_poly(p: &[MotiveClass]) -> String {
    format!("[{}]", p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
}

fn node_rationality() -> Outcome {
    const T: usize = 12;
    let s = auto_zeta(&zeta_config(AffineScheme::node(), T, Normalization::Codim)?).map_err(err)?;
    let Some(r) = detect_rationality(&s, 6) else {
        return Ok((false, vec!["no rational function of denominator degree <= 6 found".into()]));
    };
    let reexpands = r.expand(T) == s;
    let divides = r.denominator_divides(&node_target_denominator());
    Ok((
        reexpands && divides,
        vec![
            format!("numerator {}", show_poly(r.numerator())),
            format!("denominator {}", show_poly(r.denominator())),
            format!("re-expansion matches all {} coefficients: {reexpands}", T + 1),
            format!("denominator divides (1 - L^2 t)^3 (1 - t): {divides}"),
        ],
    ))
}

fn cusp_rationality() -> Outcome {
    const T: usize = 16;
    let s = auto_zeta(&zeta_config(AffineScheme::cusp(), T, Normalization::Codim)?).map_err(err)?;
    let Some(r) = detect_rationality(&s, 6) else {
        return Ok((false, vec!["no rational function of denominator degree <= 6 found".into()]));
    };
    let reexpands = r.expand(T) == s;
    Ok((
        reexpands && r.denominator().len() <= 7,
        vec![
            format!("numerator {}", show_poly(r.numerator())),
            format!("denominator {}", show_poly(r.denominator())),
            format!("re-expansion matches all {} coefficients: {reexpands}", T + 1),
        ],
    ))
}

// ---------------------------------------------------------------------------
// properties

fn functoriality() -> Outcome {
    let mut ok = true;
    let mut detail = Vec::new();
    let l2 = FatPoint::linear(2).map_err(err)?;
    let square = product_fat_point(&l2, &l2).map_err(err)?;
    for (name, x) in [("node", AffineScheme::node()), ("cusp", AffineScheme::cusp())] {
        let direct = arc_space(&x, &square).map_err(err)?.ideal();
        let inner = arc_space(&x, &l2).map_err(err)?.as_scheme().map_err(err)?;
        let iterated = arc_space(&inner, &l2).map_err(err)?.ideal();
        let iso = renames(&direct, &iterated, 16)?;
        ok &= iso;
        detail.push(format!(
            "{name}: arcs over l_2 x l_2 ({} variables) = arcs over l_2 of arcs over l_2: {iso}",
            direct.ring().nvars()
        ));
    }
    Ok((ok, detail))
}

fn ring_axioms() -> Outcome {
    let ring = PolyRing::rational(&["x", "y", "z"]).map_err(err)?;
    let samples = ["x^2 - 3*y + 1/2", "x*y*z - z^3", "2/3*y^2 + x", "0", "1", "-x + y - z"];
    let ps: Vec<Polynomial> = samples.iter().map(|s| parse(s, &ring)).collect::<Result<_, _>>().map_err(err)?;
    let images: Vec<Polynomial> = ["y + 1", "x*z", "x - y^2"]
        .iter()
        .map(|s| parse(s, &ring))
        .collect::<Result<_, _>>()
        .map_err(err)?;
    let mut ok = true;
    let mut checked = 0;
    for a in &ps {
        for b in &ps {
            ok &= &(a + b) == &(b + a) && &(a * b) == &(b * a);
            let sa = a.substitute(&images).map_err(err)?;
            let sb = b.substitute(&images).map_err(err)?;
            ok &= (a * b).substitute(&images).map_err(err)? == &sa * &sb;
            ok &= (a + b).substitute(&images).map_err(err)? == &sa + &sb;
            for c in &ps {
                ok &= &(&(a * b) * c) == &(a * &(b * c));
                ok &= &(a * &(b + c)) == &(&(a * b) + &(a * c));
                checked += 1;
            }
        }
    }
    Ok((ok, vec![format!("{checked} triples: commutativity, associativity, distributivity, substitution")]))
}

fn series_operations() -> Outcome {
    let s = MotiveSeries::new(7, (0..8).map(|k| MotiveClass::monomial(k + 1, k)).collect());
    let even = s.star_filter(2, 0);
    let odd = s.star_filter(2, 1);
    let split = even.add(&odd).map_err(err)? == s;
    let identity = s.star_filter(1, 0) == s;
    let sub = s.truncate(3).substitute_t_power(2);
    let substituted = (0..=6).all(|k| {
        if k % 2 == 0 {
            sub.coeff(k) == s.coeff(k / 2)
        } else {
            sub.coeff(k).is_zero()
        }
    });
    let line = MotiveSeries::geometric(5, &MotiveClass::l_pow(-1));
    // sum_{n<=5} L^-1 L^-n = L^-1 + ... + L^-6
    let evaluated = line.evaluate_at_l_inverse() == MotiveClass::from_terms((1..=6).map(|e| (-e, 1)));
    Ok((
        split && identity && substituted && evaluated,
        vec![
            format!("even and odd parts sum to the series: {split}"),
            format!("filter mod 1 is the identity: {identity}"),
            format!("t -> t^2 spreads coefficients: {substituted}"),
            format!("evaluation at t = L^-1: {evaluated}"),
        ],
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_lists_ten_criteria_in_order() {
        let ids: Vec<Check> = (1..=10).map(Check::Criterion).collect();
        assert_eq!(Suite::All.checks(), ids.as_slice());
    }

    #[test]
    fn unknown_criterion_fails_cleanly() {
        let r = run_check(Check::Criterion(11));
        assert!(!r.passed);
        assert!(r.line().starts_with("criterion 11 FAIL"));
    }

    #[test]
    fn golden_names_carry_the_order() {
        for t in golden_tables() {
            assert!(t.name.ends_with(&format!("_{}", t.n)), "{}", t.name);
            assert_eq!(t.scheme.variables, ["x", "y"]);
        }
    }

    #[test]
    fn seconds_stay_out_of_json() {
        let r = run_check(Check::RingAxioms);
        assert!(r.passed);
        let v = serde_json::to_value(&r).unwrap();
        assert!(v.get("seconds").is_none());
    }
}
