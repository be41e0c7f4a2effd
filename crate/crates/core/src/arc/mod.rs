//! Fat points, jets and generalized arc spaces.
//!
//! For an affine scheme `X = Spec k[x]/I` and a fat point `N = Spec k[t]/J`
//! with standard basis `b_0 = 1, b_1, ..., b_{l-1}`, the arc space
//! `nabla_N X` is presented on the grid variables `a_<i>_<j>`: the general
//! arc `x_i -> sum_j a_<i>_<j> b_j` is substituted into every generator of
//! `I`, reduced modulo `J`, and split into its `l` coordinates.

mod fat;

pub use fat::{product_fat_point, FatPoint, FatPointJson};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::ideal::{interreduce, Ideal, IdealError};
use crate::poly::{parse, Coeff, CoefficientField, MonomialOrder, PolyError, PolyRing, Polynomial, Ring};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ArcError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("fat point has infinite length")]
    InfiniteLength,
    #[error("fat point is not local: {0} is not nilpotent")]
    NotLocal(String),
    #[error("fat point is empty (unit ideal)")]
    EmptyFatPoint,
    #[error("jet order must be at least 1")]
    ZeroOrder,
    #[error("point is not on the scheme")]
    PointNotOnScheme,
    #[error("point has {got} coordinates, scheme has {expected} variables")]
    PointArity { expected: usize, got: usize },
    #[error("scheme ideal is the unit ideal")]
    EmptyScheme,
}

impl From<PolyError> for ArcError {
    fn from(e: PolyError) -> Self {
        ArcError::Ideal(IdealError::Poly(e))
    }
}

/// `Spec k[x]/I` with `I` proper.
#[derive(Clone, Debug)]
pub struct AffineScheme {
    ideal: Ideal,
}

impl AffineScheme {
    pub fn new(ideal: Ideal) -> Result<AffineScheme, ArcError> {
        if ideal.groebner()?.is_unit() {
            return Err(ArcError::EmptyScheme);
        }
        Ok(AffineScheme { ideal })
    }

    /// Reads a scheme over the rationals from variable names and generator
    /// strings.
    pub fn parse<S: AsRef<str>, T: AsRef<str>>(vars: &[S], gens: &[T]) -> Result<AffineScheme, ArcError> {
        let ring = PolyRing::rational(vars)?;
        AffineScheme::new(Ideal::from_strs(&ring, gens)?)
    }

    /// Affine `d`-space on `x0..x{d-1}`.
    pub fn affine_space(d: usize) -> AffineScheme {
        let names: Vec<String> = (0..d).map(|i| format!("x{i}")).collect();
        let ring = PolyRing::rational(&names).expect("valid names");
        AffineScheme {
            ideal: Ideal::zero(&ring),
        }
    }

    /// `y^2 - x^3` in `k[x, y]`.
    pub fn cusp() -> AffineScheme {
        AffineScheme::parse(&["x", "y"], &["y^2 - x^3"]).expect("cusp")
    }

    /// `x*y` in `k[x, y]`.
    pub fn node() -> AffineScheme {
        AffineScheme::parse(&["x", "y"], &["x*y"]).expect("node")
    }

    pub fn ring(&self) -> &Ring {
        self.ideal.ring()
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn dimension(&self) -> Result<i64, ArcError> {
        Ok(self.ideal.dimension()?)
    }

    pub fn contains_point(&self, p: &[Coeff]) -> Result<bool, ArcError> {
        if p.len() != self.ring().nvars() {
            return Err(ArcError::PointArity {
                expected: self.ring().nvars(),
                got: p.len(),
            });
        }
        let field = self.ring().field();
        let images: Vec<Polynomial> = p
            .iter()
            .map(|c| Ok(Polynomial::constant(self.ring(), field.normalize(c.clone())?)))
            .collect::<Result<_, PolyError>>()?;
        for g in self.ideal.generators() {
            if !g.substitute(&images)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Parses a comma separated list of rationals such as `1,0` or `1/2,-3`.
pub fn parse_point(text: &str) -> Result<Vec<Coeff>, PolyError> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    let ring = PolyRing::rational::<&str>(&[])?;
    text.split(',')
        .map(|s| {
            let p = parse(s, &ring)?;
            Ok(p.terms().first().map(|(_, c)| c.clone()).unwrap_or_default())
        })
        .collect()
}

/// The `n`-jet of `X` at `p`: `O_{X,p} / m_p^n` presented at the origin.
pub fn jet(x: &AffineScheme, p: &[Coeff], n: u32) -> Result<FatPoint, ArcError> {
    if n == 0 {
        return Err(ArcError::ZeroOrder);
    }
    if !x.contains_point(p)? {
        return Err(ArcError::PointNotOnScheme);
    }
    let ring = x.ring();
    let field = ring.field();
    let shift: Vec<Polynomial> = p
        .iter()
        .enumerate()
        .map(|(i, c)| {
            let c = field.normalize(c.clone())?;
            Ok(&Polynomial::var(ring, i) + &Polynomial::constant(ring, c))
        })
        .collect::<Result<_, PolyError>>()?;
    let translated: Vec<Polynomial> = x
        .ideal()
        .generators()
        .iter()
        .map(|g| g.substitute(&shift))
        .collect::<Result<_, _>>()?;
    let m_n = Ideal::maximal_at_origin(ring).power(n)?;
    let ideal = Ideal::new(ring.clone(), translated)?.sum(&m_n)?;
    FatPoint::new(ideal)
}

/// The source side of an arc presentation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SourceJson {
    pub variables: Vec<String>,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ArcPresentationJson {
    pub source: SourceJson,
    pub fat: FatPointJson,
    pub grid: Vec<Vec<String>>,
    pub generators: Vec<String>,
    pub provenance: Vec<String>,
}

/// `nabla_N X` on the grid `a_<i>_<j>`, `i` over source variables and `j`
/// over the fat point's standard basis (ascending, so `j = 0` is the
/// constant coordinate).
#[derive(Clone, Debug)]
pub struct ArcPresentation {
    source: SourceJson,
    fat: FatPointJson,
    ring: Ring,
    rows: usize,
    cols: usize,
    generators: Vec<Polynomial>,
    provenance: Vec<String>,
}

impl ArcPresentation {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(self.ring.clone(), self.generators.clone()).expect("grid ring")
    }

    pub fn provenance(&self) -> &[String] {
        &self.provenance
    }

    pub fn source_variables(&self) -> usize {
        self.rows
    }

    pub fn fat_length(&self) -> usize {
        self.cols
    }

    pub fn grid_index(&self, i: usize, j: usize) -> usize {
        i * self.cols + j
    }

    pub fn grid(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.ring.variables()[self.grid_index(i, j)].clone())
                    .collect()
            })
            .collect()
    }

    /// The presentation viewed as an affine scheme on the grid.
    pub fn as_scheme(&self) -> Result<AffineScheme, ArcError> {
        AffineScheme::new(self.ideal())
    }

    pub fn to_json(&self) -> ArcPresentationJson {
        ArcPresentationJson {
            source: self.source.clone(),
            fat: self.fat.clone(),
            grid: self.grid(),
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            provenance: self.provenance.clone(),
        }
    }

    pub fn from_json(j: &ArcPresentationJson) -> Result<ArcPresentation, ArcError> {
        let names: Vec<String> = j.grid.iter().flatten().cloned().collect();
        let ring = PolyRing::rational(&names)?;
        let ideal = Ideal::from_strs(&ring, &j.generators)?;
        Ok(ArcPresentation {
            source: j.source.clone(),
            fat: j.fat.clone(),
            rows: j.grid.len(),
            cols: j.fat.length,
            generators: ideal.generators().to_vec(),
            ring,
            provenance: j.provenance.clone(),
        })
    }
}

/// Grid variable name for source index `i` and basis index `j`.
pub fn grid_name(i: usize, j: usize) -> String {
    format!("a_{i}_{j}")
}

/// `nabla_N X`.
pub fn arc_space(x: &AffineScheme, n: &FatPoint) -> Result<ArcPresentation, ArcError> {
    let rows = x.ring().nvars();
    let cols = n.length();
    let names: Vec<String> = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| grid_name(i, j)))
        .collect();
    let field: CoefficientField = x.ring().field();
    let ring = PolyRing::new(field, &names, MonomialOrder::DegRevLex)?;
    let arcs: Vec<Vec<Polynomial>> = (0..rows)
        .map(|i| (0..cols).map(|j| Polynomial::var(&ring, i * cols + j)).collect())
        .collect();

    let coords: Vec<Vec<Polynomial>> = x
        .ideal()
        .generators()
        .par_iter()
        .map(|f| evaluate_on_arcs(f, &arcs, n, &ring))
        .collect();
    let raw: Vec<Polynomial> = coords.into_iter().flatten().filter(|p| !p.is_zero()).collect();
    let raw_count = raw.len();
    let generators = interreduce(&raw);

    let basis = n.basis_strings();
    let mut provenance = vec![
        format!("fat basis (ascending): [{}]", basis.join(", ")),
        format!(
            "grid a_<i>_<j>: coefficient of basis[j] in the arc of source variable i ({} x {})",
            rows, cols
        ),
        format!(
            "{} source generators, {} nonzero coordinates, {} after interreduction",
            x.ideal().generators().len(),
            raw_count,
            generators.len()
        ),
    ];
    for (i, v) in x.ring().variables().iter().enumerate() {
        provenance.push(format!("row {i} = source variable {v}"));
    }
    Ok(ArcPresentation {
        source: SourceJson {
            variables: x.ring().variables().to_vec(),
            generators: x.ideal().generators().iter().map(|g| g.to_string()).collect(),
        },
        fat: n.to_json(),
        ring,
        rows,
        cols,
        generators,
        provenance,
    })
}

/// Evaluates `f` at the general arcs in the fat algebra over the grid ring.
fn evaluate_on_arcs(f: &Polynomial, arcs: &[Vec<Polynomial>], n: &FatPoint, ring: &Ring) -> Vec<Polynomial> {
    let mut powers: Vec<Vec<Vec<Polynomial>>> = arcs.iter().map(|a| vec![n.unit_element(ring), a.clone()]).collect();
    let mut acc = vec![Polynomial::zero(ring); n.length()];
    for (m, c) in f.terms() {
        let mut term = n.unit_element(ring);
        for (v, &e) in m.exponents().iter().enumerate() {
            if e == 0 {
                continue;
            }
            while powers[v].len() <= e as usize {
                let next = n.multiply(powers[v].last().expect("nonempty"), &arcs[v]);
                powers[v].push(next);
            }
            term = n.multiply(&term, &powers[v][e as usize]);
            if FatPoint::is_zero_element(&term) {
                break;
            }
        }
        for (a, t) in acc.iter_mut().zip(term.iter()) {
            *a = a.add_scaled(t, c);
        }
    }
    acc
}

/// `A_n(X, p) = nabla_{J} J` for `J` the `n`-jet of `X` at `p`.
pub fn auto_arc(x: &AffineScheme, p: &[Coeff], n: u32) -> Result<ArcPresentation, ArcError> {
    let j = jet(x, p, n)?;
    let source = AffineScheme::new(j.groebner().to_ideal())?;
    let mut a = arc_space(&source, &j)?;
    a.provenance.insert(
        0,
        format!(
            "auto-arc of order {n} at ({}) on source ring [{}]",
            p.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(","),
            x.ring().variables().join(", ")
        ),
    );
    Ok(a)
}
