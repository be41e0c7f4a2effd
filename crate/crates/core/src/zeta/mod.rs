//! Generating series built from auto-arc spaces and arc spaces along
//! linear jets, with class assignment through the reduced decomposition.

pub mod catalog;
mod report;

pub use report::{compare, fit_shifts, DiffRow, SeriesReport, ShiftFit};

use num_rational::BigRational;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::arc::{arc_space, auto_arc, jet, AffineScheme, ArcError, FatPoint};
use crate::ideal::{equal_up_to_renaming, Ideal, IdealError, RenamingBudget};
use crate::motive::{interpolate_class, InterpolationConfig, MotiveClass, MotiveError, MotiveSeries};
use crate::poly::Coeff;
use crate::reduction::{decompose, heuristic_reduce, reduce_ideal, Completeness, ReducedPresentation};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ZetaError {
    #[error(transparent)]
    Arc(#[from] ArcError),
    #[error(transparent)]
    Motive(#[from] MotiveError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("no class available for a factor with {variables} variables and {generators} generators")]
    ClassUnavailable { variables: usize, generators: usize },
    #[error("maximal order must be at least 1")]
    ZeroOrder,
}

/// Exponent `e(n)` in the coefficient `[A_(n+1)^red] L^(-e(n))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Normalization {
    /// `e(n) = dim_p X * l(J_p^(n+1) X)`.
    Definition,
    /// `e(n) = dim A_(n+1)^red`.
    Codim,
}

/// A variety whose class is known, matched against factors up to renaming.
#[derive(Clone, Debug)]
pub struct KnownClass {
    pub name: String,
    pub ideal: Ideal,
    pub class: MotiveClass,
}

#[derive(Clone, Debug)]
pub enum ClassStrategy {
    Interpolate(InterpolationConfig),
    /// Catalog lookup, then interpolation if a fallback is given.
    Supplied {
        catalog: Vec<KnownClass>,
        fallback: Option<InterpolationConfig>,
    },
}

#[derive(Clone, Debug)]
pub struct ZetaConfig {
    pub scheme: AffineScheme,
    pub point: Vec<Coeff>,
    /// Truncation order `T`; coefficients `t^0 .. t^T`.
    pub max_order: usize,
    pub normalization: Normalization,
    pub strategy: ClassStrategy,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum ClassSource {
    Catalog(String),
    Interpolated {
        samples: Vec<(u64, String)>,
        verification: Vec<(u64, String)>,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct FactorClass {
    pub variables: usize,
    pub class: MotiveClass,
    pub dimension: i64,
    pub source: ClassSource,
}

/// `[V] = L^affine_rank * prod factors`, for `V` given by an ideal.
#[derive(Clone, Debug, Serialize)]
pub struct ClassAssignment {
    pub class: MotiveClass,
    /// `-1` for the empty scheme.
    pub dimension: i64,
    pub affine_rank: usize,
    pub factors: Vec<FactorClass>,
    pub certified: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ZetaTerm {
    pub n: usize,
    /// Length of the jet `J^(n+1)`.
    pub jet_length: usize,
    pub assignment: ClassAssignment,
    pub exponent: i64,
    pub coefficient: MotiveClass,
}

/// Factors with more occurring variables than this get their dimension from
/// the class instead of a Groebner basis.
const GROEBNER_DIMENSION_LIMIT: usize = 8;

fn lookup(factor: &Ideal, catalog: &[KnownClass]) -> Result<Option<(String, MotiveClass)>, ZetaError> {
    let nv = factor.occurring_variables().len();
    for k in catalog {
        if k.ideal.occurring_variables().len() != nv {
            continue;
        }
        let budget = RenamingBudget {
            max_vars: 64,
            syntactic_only: nv > 12,
            ..RenamingBudget::default()
        };
        match equal_up_to_renaming(factor, &k.ideal, budget) {
            Ok(Some(_)) => return Ok(Some((k.name.clone(), k.class.clone()))),
            Ok(None) | Err(IdealError::BudgetExceeded { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    Ok(None)
}

fn factor_class(factor: &Ideal, strategy: &ClassStrategy) -> Result<FactorClass, ZetaError> {
    let (compact, _) = factor.compact();
    let variables = compact.ring().nvars();
    let interpolate = |cfg: &InterpolationConfig| -> Result<(MotiveClass, ClassSource), ZetaError> {
        let r = interpolate_class(&compact, cfg)?;
        Ok((
            r.class,
            ClassSource::Interpolated {
                samples: r.samples,
                verification: r.verification,
            },
        ))
    };
    let (class, source) = match strategy {
        ClassStrategy::Interpolate(cfg) => interpolate(cfg)?,
        ClassStrategy::Supplied { catalog, fallback } => match lookup(factor, catalog)? {
            Some((name, class)) => (class, ClassSource::Catalog(name)),
            None => match fallback {
                Some(cfg) => interpolate(cfg)?,
                None => {
                    return Err(ZetaError::ClassUnavailable {
                        variables,
                        generators: compact.generators().len(),
                    })
                }
            },
        },
    };
    let dimension = if variables <= GROEBNER_DIMENSION_LIMIT {
        compact.dimension()?
    } else {
        class.dim().unwrap_or(-1)
    };
    Ok(FactorClass {
        variables,
        class,
        dimension,
        source,
    })
}

/// Class of a reduced presentation: the free variables contribute `L` each
/// and every connected factor is identified or interpolated.
pub fn assign_reduced(r: &ReducedPresentation, strategy: &ClassStrategy) -> Result<ClassAssignment, ZetaError> {
    let certified = r.completeness == Completeness::RadicalCertified;
    let d = decompose(r);
    if r.is_unit() {
        return Ok(ClassAssignment {
            class: MotiveClass::zero(),
            dimension: -1,
            affine_rank: d.affine_rank,
            factors: Vec::new(),
            certified,
        });
    }
    let factors: Vec<FactorClass> = d
        .factors
        .iter()
        .map(|f| factor_class(f, strategy))
        .collect::<Result<_, _>>()?;
    let mut class = MotiveClass::l_pow(d.affine_rank as i64);
    let mut dimension = d.affine_rank as i64;
    for f in &factors {
        class = &class * &f.class;
        dimension = if f.dimension < 0 { -1 } else { dimension + f.dimension };
        if dimension < 0 {
            break;
        }
    }
    Ok(ClassAssignment {
        class,
        dimension,
        affine_rank: d.affine_rank,
        factors,
        certified,
    })
}

pub fn assign_class(ideal: &Ideal, strategy: &ClassStrategy) -> Result<ClassAssignment, ZetaError> {
    assign_reduced(&reduce_ideal(ideal), strategy)
}

/// The terms of the reduced auto zeta series, `n = 0 ..= T`.
pub fn auto_zeta_terms(cfg: &ZetaConfig) -> Result<Vec<ZetaTerm>, ZetaError> {
    if cfg.max_order < 1 {
        return Err(ZetaError::ZeroOrder);
    }
    let dim_x = cfg.scheme.dimension()?;
    (0..=cfg.max_order)
        .into_par_iter()
        .map(|n| {
            let order = n as u32 + 1;
            let jet_length = jet(&cfg.scheme, &cfg.point, order)?.length();
            let a = auto_arc(&cfg.scheme, &cfg.point, order)?;
            let assignment = assign_reduced(&heuristic_reduce(&a), &cfg.strategy)?;
            let exponent = match cfg.normalization {
                Normalization::Definition => dim_x * jet_length as i64,
                Normalization::Codim => assignment.dimension.max(0),
            };
            let coefficient = assignment.class.shift(-exponent);
            Ok(ZetaTerm {
                n,
                jet_length,
                assignment,
                exponent,
                coefficient,
            })
        })
        .collect()
}

/// `sum_n [A_(n+1)(X,p)^red] L^(-e(n)) t^n` truncated at `T`.
pub fn auto_zeta(cfg: &ZetaConfig) -> Result<MotiveSeries, ZetaError> {
    let terms = auto_zeta_terms(cfg)?;
    Ok(MotiveSeries::new(
        cfg.max_order,
        terms.into_iter().map(|t| t.coefficient).collect(),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct ThetaTerm {
    pub n: usize,
    pub assignment: ClassAssignment,
    pub coefficient: MotiveClass,
}

/// Terms `[nabla_{l_(n+1)} X] L^(-dim X (n+1))` for `n = 0 ..= N`.
pub fn igusa_theta_terms(x: &AffineScheme, max_order: usize, strategy: &ClassStrategy) -> Result<Vec<ThetaTerm>, ZetaError> {
    let dim_x = x.dimension()?;
    (0..=max_order)
        .into_par_iter()
        .map(|n| {
            let m = n as u32 + 1;
            let a = arc_space(x, &FatPoint::linear(m)?)?;
            let assignment = assign_reduced(&heuristic_reduce(&a), strategy)?;
            let coefficient = assignment.class.shift(-dim_x * m as i64);
            Ok(ThetaTerm {
                n,
                assignment,
                coefficient,
            })
        })
        .collect()
}

pub fn igusa_theta(x: &AffineScheme, max_order: usize, strategy: &ClassStrategy) -> Result<MotiveSeries, ZetaError> {
    let terms = igusa_theta_terms(x, max_order, strategy)?;
    Ok(MotiveSeries::new(
        max_order,
        terms.into_iter().map(|t| t.coefficient).collect(),
    ))
}

#[derive(Clone, Debug, Serialize)]
pub struct DefectRow {
    pub n: u32,
    pub dimension: i64,
    pub jet_length: usize,
    /// `dimension / jet_length` as `p/q`.
    pub ratio: String,
}

/// `dim A_n(X,p)^red / l(J_p^n X)` for `n = 2 ..= N`; factor dimensions
/// come from the class assignment.
pub fn asymptotic_defect(
    x: &AffineScheme,
    p: &[Coeff],
    max_order: u32,
    strategy: &ClassStrategy,
) -> Result<Vec<DefectRow>, ZetaError> {
    (2..=max_order)
        .into_par_iter()
        .map(|n| {
            let jet_length = jet(x, p, n)?.length();
            let r = heuristic_reduce(&auto_arc(x, p, n)?);
            let dimension = assign_reduced(&r, strategy)?.dimension;
            let ratio = BigRational::new(dimension.into(), (jet_length as i64).into());
            Ok(DefectRow {
                n,
                dimension,
                jet_length,
                ratio: ratio.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arc::parse_point;

    fn interp() -> ClassStrategy {
        ClassStrategy::Interpolate(InterpolationConfig::default())
    }

    fn cfg(x: AffineScheme, pt: &str, t: usize, norm: Normalization, s: ClassStrategy) -> ZetaConfig {
        ZetaConfig {
            scheme: x,
            point: parse_point(pt).unwrap(),
            max_order: t,
            normalization: norm,
            strategy: s,
        }
    }

    #[test]
    fn smooth_line() {
        let s = auto_zeta(&cfg(AffineScheme::affine_space(1), "0", 4, Normalization::Definition, interp())).unwrap();
        assert_eq!(s, MotiveSeries::geometric(4, &MotiveClass::l_pow(-1)));
    }

    #[test]
    fn smooth_point_of_node() {
        let s = auto_zeta(&cfg(AffineScheme::node(), "1,0", 4, Normalization::Definition, interp())).unwrap();
        assert_eq!(s, MotiveSeries::geometric(4, &MotiveClass::l_pow(-1)));
    }

    #[test]
    fn spec_k() {
        let r = crate::poly::PolyRing::rational(&["x"]).unwrap();
        let x = AffineScheme::new(Ideal::from_strs(&r, &["x"]).unwrap()).unwrap();
        let s = auto_zeta(&cfg(x, "0", 3, Normalization::Definition, interp())).unwrap();
        assert_eq!(s, MotiveSeries::geometric(3, &MotiveClass::one()));
    }

    #[test]
    fn node_theta() {
        let t = igusa_theta(&AffineScheme::node(), 2, &interp()).unwrap();
        for n in 0..=2u32 {
            assert_eq!(t.coeff(n as usize), &catalog::node_class(n + 1).shift(-(n as i64 + 1)));
        }
    }

    #[test]
    fn line_theta() {
        let t = igusa_theta(&AffineScheme::affine_space(1), 3, &interp()).unwrap();
        assert_eq!(t, MotiveSeries::geometric(3, &MotiveClass::one()));
    }

    #[test]
    fn supplied_and_interpolated_agree() {
        let supplied = ClassStrategy::Supplied {
            catalog: catalog::node_catalog(3).unwrap(),
            fallback: None,
        };
        let a = igusa_theta_terms(&AffineScheme::node(), 2, &supplied).unwrap();
        let b = igusa_theta_terms(&AffineScheme::node(), 2, &interp()).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.coefficient, y.coefficient);
            assert!(matches!(x.assignment.factors[0].source, ClassSource::Catalog(_)));
        }
    }

    #[test]
    fn missing_catalog_entry() {
        let supplied = ClassStrategy::Supplied {
            catalog: Vec::new(),
            fallback: None,
        };
        assert!(matches!(
            igusa_theta(&AffineScheme::node(), 1, &supplied),
            Err(ZetaError::ClassUnavailable { .. })
        ));
    }

    #[test]
    fn node_codim_terms() {
        let supplied = ClassStrategy::Supplied {
            catalog: catalog::node_catalog(4).unwrap(),
            fallback: None,
        };
        let terms = auto_zeta_terms(&cfg(AffineScheme::node(), "0,0", 5, Normalization::Codim, supplied)).unwrap();
        assert_eq!(terms[1].assignment.class, MotiveClass::l_pow(4));
        for t in &terms[2..] {
            let m = t.n as u32 - 1;
            let expect = &MotiveClass::l_pow(4) * &catalog::node_class(m).pow(2);
            assert_eq!(t.assignment.class, expect, "n = {}", t.n);
            assert_eq!(t.assignment.dimension, 4 + 2 * m as i64);
        }
    }

    #[test]
    fn defect_of_the_line() {
        let rows = asymptotic_defect(&AffineScheme::affine_space(1), &parse_point("0").unwrap(), 4, &interp()).unwrap();
        let ratios: Vec<_> = rows.iter().map(|r| r.ratio.clone()).collect();
        assert_eq!(ratios, vec!["1/2", "2/3", "3/4"]);
    }
}
