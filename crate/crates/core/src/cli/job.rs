use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::PathBuf;

use super::CliError;
use crate::arc::{arc_space, auto_arc, jet, parse_point, AffineScheme, ArcPresentation, FatPoint};
use crate::ideal::{GroebnerBudget, Ideal};
use crate::motive::{count_points, detect_rationality, CountBudget, InterpolationConfig, MotiveRational};
use crate::poly::{Coeff, PolyRing};
use crate::reduction::{heuristic_reduce, reduce_ideal};
use crate::verify::{run_suite, Suite};
use crate::zeta::catalog::{cusp_catalog, cusp_theta_closed, cusp_zeta_closed, node_catalog, node_zeta_closed};
use crate::zeta::{
    auto_zeta_terms, compare, fit_shifts, igusa_theta_terms, ClassStrategy, Normalization, SeriesReport, ZetaConfig,
};

pub const ENV_BUDGET_POINTS: &str = "AUTOARC_BUDGET_POINTS";
pub const ENV_BUDGET_GROEBNER: &str = "AUTOARC_BUDGET_GROEBNER";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Arc,
    Jet,
    Auto,
    Reduce,
    Zeta,
    Theta,
    Count,
    Verify,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum NormalizationArg {
    #[default]
    Definition,
    Codim,
}

/// Printed closed form to compare a series against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ClosedFormArg {
    Cusp,
    Node,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ClassesArg {
    /// Known classes of arc spaces of the cusp and node, then interpolation.
    #[default]
    Catalog,
    Interpolate,
}

/// One job. Fields irrelevant to the command are ignored.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub command: Command,
    #[serde(default)]
    pub vars: Vec<String>,
    #[serde(default)]
    pub gens: Vec<String>,
    /// Comma separated coordinates; the origin when absent.
    #[serde(default)]
    pub point: Option<String>,
    /// Jet order, or truncation order for series.
    #[serde(default)]
    pub n: Option<u32>,
    #[serde(default)]
    pub fat_vars: Vec<String>,
    #[serde(default)]
    pub fat_gens: Vec<String>,
    #[serde(default)]
    pub prime: Option<u64>,
    #[serde(default)]
    pub normalization: Option<NormalizationArg>,
    #[serde(default)]
    pub compare: Option<ClosedFormArg>,
    #[serde(default)]
    pub classes: Option<ClassesArg>,
    #[serde(default)]
    pub suite: Option<Suite>,
    #[serde(default)]
    pub exclude_chars: Vec<u64>,
    #[serde(default)]
    pub budget_points: Option<u64>,
    #[serde(default)]
    pub budget_groebner: Option<u64>,
    #[serde(default)]
    pub format: Format,
    #[serde(default)]
    pub output: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(command: Command) -> JobSpec {
        JobSpec {
            command,
            vars: Vec::new(),
            gens: Vec::new(),
            point: None,
            n: None,
            fat_vars: Vec::new(),
            fat_gens: Vec::new(),
            prime: None,
            normalization: None,
            compare: None,
            classes: None,
            suite: None,
            exclude_chars: Vec::new(),
            budget_points: None,
            budget_groebner: None,
            format: Format::Json,
            output: None,
        }
    }
}

/// Result of a job: the JSON document, its text rendering, and the exit
/// status (nonzero only for a failed `verify`).
#[derive(Clone, Debug)]
pub struct Artifact {
    pub json: Value,
    pub text: String,
    pub status: i32,
}

impl Artifact {
    fn ok(json: Value, text: String) -> Artifact {
        Artifact { json, text, status: 0 }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serializable");
                s.push('\n');
                s
            }
            Format::Text => self.text.clone(),
        }
    }
}

struct Budgets {
    points: CountBudget,
    groebner: u64,
}

fn env_budget(name: &str) -> Result<Option<u64>, CliError> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| CliError::parse("bad_environment", format!("{name} must be a nonnegative integer, got '{v}'"))),
        Err(_) => Ok(None),
    }
}

fn budgets(job: &JobSpec) -> Result<Budgets, CliError> {
    let points = match job.budget_points {
        Some(b) => b,
        None => env_budget(ENV_BUDGET_POINTS)?.unwrap_or(CountBudget::default().max_assignments),
    };
    let groebner = match job.budget_groebner {
        Some(b) => b,
        None => env_budget(ENV_BUDGET_GROEBNER)?.unwrap_or(GroebnerBudget::BUILTIN_STEPS),
    };
    Ok(Budgets {
        points: CountBudget { max_assignments: points },
        groebner,
    })
}

fn require_n(job: &JobSpec) -> Result<u32, CliError> {
    job.n.ok_or_else(|| CliError::parse("missing_argument", "--n is required for this command"))
}

fn scheme(job: &JobSpec) -> Result<AffineScheme, CliError> {
    if job.vars.is_empty() {
        return Err(CliError::parse("missing_argument", "--vars is required for this command"));
    }
    Ok(AffineScheme::parse(&job.vars, &job.gens)?)
}

fn point(job: &JobSpec, x: &AffineScheme) -> Result<Vec<Coeff>, CliError> {
    match &job.point {
        Some(p) => Ok(parse_point(p)?),
        None => Ok(vec![Coeff::default(); x.ring().nvars()]),
    }
}

fn fat_point(job: &JobSpec) -> Result<Option<FatPoint>, CliError> {
    if job.fat_vars.is_empty() {
        return Ok(None);
    }
    let ring = PolyRing::rational(&job.fat_vars)?;
    Ok(Some(FatPoint::new(Ideal::from_strs(&ring, &job.fat_gens)?)?))
}

fn interpolation(job: &JobSpec, b: &Budgets) -> InterpolationConfig {
    InterpolationConfig {
        excluded: job.exclude_chars.clone(),
        budget: b.points,
        ..InterpolationConfig::default()
    }
}

fn strategy(job: &JobSpec, b: &Budgets, t: u32) -> Result<ClassStrategy, CliError> {
    let cfg = interpolation(job, b);
    Ok(match job.classes.unwrap_or_default() {
        ClassesArg::Interpolate => ClassStrategy::Interpolate(cfg),
        ClassesArg::Catalog => {
            let mut catalog = cusp_catalog(2 * t + 2)?;
            catalog.extend(node_catalog(t + 2)?);
            ClassStrategy::Supplied {
                catalog,
                fallback: Some(cfg),
            }
        }
    })
}

fn presentation_text(a: &ArcPresentation) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# {} generators in {} variables", a.generators().len(), a.ring().nvars());
    for g in a.generators() {
        let _ = writeln!(out, "{g}");
    }
    out
}

/// Runs a job with no side effects beyond setting the process-wide
/// Groebner budget.
pub fn run(job: &JobSpec) -> Result<Artifact, CliError> {
    let b = budgets(job)?;
    GroebnerBudget::set_default(b.groebner);
    match job.command {
        Command::Arc => {
            let x = scheme(job)?;
            let fat = match fat_point(job)? {
                Some(f) => f,
                None => FatPoint::linear(require_n(job)?)?,
            };
            let a = arc_space(&x, &fat)?;
            Ok(Artifact::ok(json!(a.to_json()), presentation_text(&a)))
        }
        Command::Jet => {
            let x = scheme(job)?;
            let p = point(job, &x)?;
            let j = jet(&x, &p, require_n(job)?)?.to_json();
            let text = format!(
                "length {}\nbasis {}\ngenerators\n{}\n",
                j.length,
                j.basis.join(", "),
                j.generators.join("\n")
            );
            Ok(Artifact::ok(json!(j), text))
        }
        Command::Auto => {
            let x = scheme(job)?;
            let p = point(job, &x)?;
            let a = auto_arc(&x, &p, require_n(job)?)?;
            Ok(Artifact::ok(json!(a.to_json()), presentation_text(&a)))
        }
        Command::Reduce => {
            let x = scheme(job)?;
            let r = if let Some(n) = job.n {
                heuristic_reduce(&auto_arc(&x, &point(job, &x)?, n)?)
            } else if let Some(f) = fat_point(job)? {
                heuristic_reduce(&arc_space(&x, &f)?)
            } else {
                reduce_ideal(x.ideal())
            };
            let rep = r.report();
            let mut text = String::new();
            let _ = writeln!(text, "affine rank {}", rep.affine_rank);
            let _ = writeln!(text, "certified {}", rep.certified);
            let _ = writeln!(text, "killed {}", rep.killed.join(", "));
            let _ = writeln!(text, "free {}", rep.free.join(", "));
            for (v, img) in &rep.substitutions {
                let _ = writeln!(text, "{v} = {img}");
            }
            for (i, f) in rep.factors.iter().enumerate() {
                let _ = writeln!(text, "factor {i}: {}", f.join(", "));
            }
            Ok(Artifact::ok(json!(rep), text))
        }
        Command::Zeta => zeta(job, &b),
        Command::Theta => theta(job, &b),
        Command::Count => {
            if job.vars.is_empty() {
                return Err(CliError::parse("missing_argument", "--vars is required for this command"));
            }
            let p = job
                .prime
                .ok_or_else(|| CliError::parse("missing_argument", "--prime is required for count"))?;
            let ring = PolyRing::rational(&job.vars)?;
            let ideal = Ideal::from_strs(&ring, &job.gens)?;
            let count = count_points(&ideal, p, &b.points)?;
            let json = json!({
                "prime": p,
                "count": count.to_string(),
                "variables": ring.nvars(),
                "occurring_variables": ideal.occurring_variables().len(),
            });
            Ok(Artifact::ok(json, format!("{count}\n")))
        }
        Command::Verify => {
            let suite = job
                .suite
                .ok_or_else(|| CliError::parse("missing_argument", "verify needs a suite"))?;
            let results = run_suite(suite);
            let passed = results.iter().all(|r| r.passed);
            let mut text = String::new();
            for r in &results {
                let _ = writeln!(text, "{}", r.line());
                for d in &r.detail {
                    let _ = writeln!(text, "    {d}");
                }
            }
            let json = json!({ "suite": suite, "passed": passed, "checks": results });
            Ok(Artifact {
                json,
                text,
                status: if passed { 0 } else { 5 },
            })
        }
    }
}

fn printed(form: ClosedFormArg) -> (MotiveRational, usize, &'static str) {
    match form {
        ClosedFormArg::Cusp => (cusp_zeta_closed(), 4, "printed-cusp"),
        ClosedFormArg::Node => (node_zeta_closed(), 3, "printed-node"),
    }
}

fn report_table(classes: &[String], report: &SeriesReport) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>3}  {:<36} {:<36} {:<36} verdict",
        "n", "class", "normalized", "closed form"
    );
    for (n, class) in classes.iter().enumerate() {
        let row = report.diff.get(n);
        let _ = writeln!(
            out,
            "{:>3}  {:<36} {:<36} {:<36} {}",
            n,
            class,
            report.computed.coeff(n).to_string(),
            row.map(|r| r.expanded.to_string()).unwrap_or_else(|| "-".into()),
            match row {
                Some(r) if r.matches => "match",
                Some(_) => "MISMATCH",
                None => "-",
            }
        );
    }
    out
}

fn zeta(job: &JobSpec, b: &Budgets) -> Result<Artifact, CliError> {
    let x = scheme(job)?;
    let t = require_n(job)?;
    let normalization = match job.normalization.unwrap_or_default() {
        NormalizationArg::Definition => Normalization::Definition,
        NormalizationArg::Codim => Normalization::Codim,
    };
    let cfg = ZetaConfig {
        point: point(job, &x)?,
        scheme: x,
        max_order: t as usize,
        normalization,
        strategy: strategy(job, b, t)?,
    };
    let terms = auto_zeta_terms(&cfg)?;
    let series = crate::motive::MotiveSeries::new(t as usize, terms.iter().map(|s| s.coefficient.clone()).collect());
    let (closed, source, fits) = match job.compare {
        Some(form) => {
            let (r, tail, name) = printed(form);
            let fits = fit_shifts(&series, &r, tail, 4, 3);
            (Some(r), Some(name), fits)
        }
        None => (detect_rationality(&series, 6), Some("detected"), Vec::new()),
    };
    let source = closed.as_ref().and(source);
    let report = match &closed {
        Some(r) => compare(&series, r),
        None => SeriesReport {
            computed: series.clone(),
            closed_form: None,
            diff: Vec::new(),
        },
    };
    let classes: Vec<String> = terms.iter().map(|s| s.assignment.class.to_string()).collect();
    let table = report_table(&classes, &report);
    let term_json: Vec<Value> = terms
        .iter()
        .map(|s| {
            json!({
                "n": s.n,
                "jet_length": s.jet_length,
                "class": s.assignment.class,
                "dimension": s.assignment.dimension,
                "affine_rank": s.assignment.affine_rank,
                "certified": s.assignment.certified,
                "exponent": s.exponent,
                "coefficient": s.coefficient,
            })
        })
        .collect();
    let mut text = table.clone();
    for f in &fits {
        let _ = writeln!(text, "tail agrees up to L^{} t^{}", f.a, f.b);
    }
    let json = json!({
        "normalization": normalization,
        "report": report,
        "closed_form_source": source,
        "shift_fits": fits,
        "terms": term_json,
        "table": table,
    });
    Ok(Artifact::ok(json, text))
}

fn theta(job: &JobSpec, b: &Budgets) -> Result<Artifact, CliError> {
    let x = scheme(job)?;
    let t = require_n(job)?;
    let terms = igusa_theta_terms(&x, t as usize, &strategy(job, b, t)?)?;
    let series = crate::motive::MotiveSeries::new(t as usize, terms.iter().map(|s| s.coefficient.clone()).collect());
    let (closed, source, fits) = match job.compare {
        Some(ClosedFormArg::Cusp) => {
            let r = cusp_theta_closed();
            let fits = fit_shifts(&series, &r, 0, 0, 1);
            (Some(r), Some("printed-cusp"), fits)
        }
        Some(ClosedFormArg::Node) => {
            return Err(CliError::precondition(
                "no_closed_form",
                "no printed closed form of Theta for the node; omit --compare to detect one",
            ))
        }
        None => (detect_rationality(&series, 6), Some("detected"), Vec::new()),
    };
    let source = closed.as_ref().and(source);
    let report = match &closed {
        Some(r) => compare(&series, r),
        None => SeriesReport {
            computed: series.clone(),
            closed_form: None,
            diff: Vec::new(),
        },
    };
    let classes: Vec<String> = terms.iter().map(|s| s.assignment.class.to_string()).collect();
    let table = report_table(&classes, &report);
    let mut text = table.clone();
    for f in &fits {
        let _ = writeln!(text, "closed form = L^{} times the series", f.a);
    }
    let json = json!({
        "report": report,
        "closed_form_source": source,
        "shift_fits": fits,
        "classes": terms.iter().map(|s| s.assignment.class.clone()).collect::<Vec<_>>(),
        "table": table,
    });
    Ok(Artifact::ok(json, text))
}
