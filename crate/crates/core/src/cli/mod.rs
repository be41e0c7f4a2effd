//! Command-line surface: flags or a JSON job file in, one JSON (or text)
//! document out. Errors go to stderr as JSON with a stable code.
//!
//! Exit status: 0 success, 2 unreadable input, 3 mathematical
//! precondition, 4 budget exhausted, 5 a `verify` suite failed.

mod job;

pub use job::{run, Artifact, ClassesArg, ClosedFormArg, Command, Format, JobSpec, NormalizationArg};
pub use job::{ENV_BUDGET_GROEBNER, ENV_BUDGET_POINTS};

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use crate::arc::ArcError;
use crate::ideal::IdealError;
use crate::motive::MotiveError;
use crate::poly::PolyError;
use crate::verify::Suite;
use crate::zeta::ZetaError;

pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub exit: i32,
    /// `parse_error`, `precondition_failed`, `budget_exceeded` or
    /// `verification_failed`.
    pub code: &'static str,
    /// Finer, equally stable classification.
    pub kind: String,
    pub message: String,
}

impl CliError {
    fn new(exit: i32, kind: &str, message: impl Into<String>) -> CliError {
        let code = match exit {
            EXIT_PARSE => "parse_error",
            EXIT_PRECONDITION => "precondition_failed",
            EXIT_BUDGET => "budget_exceeded",
            _ => "verification_failed",
        };
        CliError {
            exit,
            code,
            kind: kind.to_string(),
            message: message.into(),
        }
    }

    pub fn parse(kind: &str, message: impl Into<String>) -> CliError {
        CliError::new(EXIT_PARSE, kind, message)
    }

    pub fn precondition(kind: &str, message: impl Into<String>) -> CliError {
        CliError::new(EXIT_PRECONDITION, kind, message)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "error": { "code": self.code, "kind": self.kind, "exit": self.exit, "message": self.message } })
    }
}

/// `UnknownIdentifier("q")` becomes `unknown_identifier`.
fn kind_of<E: std::fmt::Debug>(e: &E) -> String {
    let dbg = format!("{e:?}");
    let name: String = dbg.chars().take_while(|c| c.is_alphanumeric()).collect();
    let mut out = String::new();
    for (i, c) in name.chars().enumerate() {
        if c.is_uppercase() && i > 0 {
            out.push('_');
        }
        out.extend(c.to_lowercase());
    }
    out
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        let exit = match e {
            PolyError::NotPrime(_)
            | PolyError::RingMismatch
            | PolyError::MissingImage(_)
            | PolyError::CoefficientNotRepresentable => EXIT_PRECONDITION,
            _ => EXIT_PARSE,
        };
        CliError::new(exit, &kind_of(&e), e.to_string())
    }
}

impl From<IdealError> for CliError {
    fn from(e: IdealError) -> Self {
        match e {
            IdealError::Poly(p) => p.into(),
            IdealError::BudgetExceeded { .. } => CliError::new(EXIT_BUDGET, "groebner_budget", e.to_string()),
            _ => CliError::new(EXIT_PRECONDITION, &kind_of(&e), e.to_string()),
        }
    }
}

impl From<ArcError> for CliError {
    fn from(e: ArcError) -> Self {
        match e {
            ArcError::Ideal(i) => i.into(),
            _ => CliError::new(EXIT_PRECONDITION, &kind_of(&e), e.to_string()),
        }
    }
}

impl From<MotiveError> for CliError {
    fn from(e: MotiveError) -> Self {
        match e {
            MotiveError::Ideal(i) => i.into(),
            MotiveError::CountBudgetExceeded { .. } => CliError::new(EXIT_BUDGET, "count_budget", e.to_string()),
            _ => CliError::new(EXIT_PRECONDITION, &kind_of(&e), e.to_string()),
        }
    }
}

impl From<ZetaError> for CliError {
    fn from(e: ZetaError) -> Self {
        match e {
            ZetaError::Arc(a) => a.into(),
            ZetaError::Motive(m) => m.into(),
            ZetaError::Ideal(i) => i.into(),
            _ => CliError::new(EXIT_PRECONDITION, &kind_of(&e), e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "autoarc", version, about = "Arc spaces, jets and auto-arc spaces with motivic bookkeeping")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Option<Sub>,
    /// Read the whole job from a JSON file instead of flags.
    #[arg(long, global = true)]
    pub script: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Arc space over a fat point (or the linear fat point of length --n).
    Arc(Flags),
    /// The n-jet of a scheme at a point.
    Jet(Flags),
    /// The auto-arc space of the n-jet.
    Auto(Flags),
    /// Heuristic reduction of an auto-arc space, arc space or the scheme itself.
    Reduce(Flags),
    /// Reduced auto zeta series up to t^n.
    Zeta(Flags),
    /// Igusa zeta series along linear jets up to t^n.
    Theta(Flags),
    /// Number of F_p points.
    Count(Flags),
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Debug, Default, Args)]
pub struct Flags {
    /// Variables, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub vars: Vec<String>,
    /// Generators, comma separated.
    #[arg(long, value_delimiter = ',')]
    pub gens: Vec<String>,
    /// Point, comma separated rationals; the origin by default.
    #[arg(long, allow_hyphen_values = true)]
    pub point: Option<String>,
    /// Jet order, or truncation order of a series.
    #[arg(long)]
    pub n: Option<u32>,
    /// Variables of the fat point for `arc` and `reduce`.
    #[arg(long, value_delimiter = ',')]
    pub fat_vars: Vec<String>,
    /// Generators of the fat point.
    #[arg(long, value_delimiter = ',')]
    pub fat_gens: Vec<String>,
    #[arg(long)]
    pub prime: Option<u64>,
    #[arg(long, value_enum)]
    pub normalization: Option<NormalizationArg>,
    /// Printed closed form to compare against.
    #[arg(long, value_enum)]
    pub compare: Option<ClosedFormArg>,
    #[arg(long, value_enum)]
    pub classes: Option<ClassesArg>,
    /// Characteristics never used for point counting.
    #[arg(long, value_delimiter = ',')]
    pub exclude_chars: Vec<u64>,
    /// Cap on p^(variables) per point count.
    #[arg(long)]
    pub budget_points: Option<u64>,
    /// Cap on reduction steps per Groebner basis.
    #[arg(long)]
    pub budget_groebner: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write the result here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

impl Flags {
    fn into_job(self, command: Command, suite: Option<Suite>) -> JobSpec {
        JobSpec {
            command,
            vars: self.vars,
            gens: self.gens,
            point: self.point,
            n: self.n,
            fat_vars: self.fat_vars,
            fat_gens: self.fat_gens,
            prime: self.prime,
            normalization: self.normalization,
            compare: self.compare,
            classes: self.classes,
            suite,
            exclude_chars: self.exclude_chars,
            budget_points: self.budget_points,
            budget_groebner: self.budget_groebner,
            format: self.format,
            output: self.output,
        }
    }
}

/// Builds the job from parsed arguments.
pub fn job_from_cli(cli: Cli) -> Result<JobSpec, CliError> {
    match (cli.script, cli.command) {
        (Some(_), Some(_)) => Err(CliError::parse("ambiguous_job", "give either --script or a command, not both")),
        (None, None) => Err(CliError::parse("missing_command", "no command given")),
        (Some(path), None) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| CliError::parse("unreadable_script", format!("{}: {e}", path.display())))?;
            serde_json::from_str(&text).map_err(|e| CliError::parse("bad_script", e.to_string()))
        }
        (None, Some(sub)) => Ok(match sub {
            Sub::Arc(f) => f.into_job(Command::Arc, None),
            Sub::Jet(f) => f.into_job(Command::Jet, None),
            Sub::Auto(f) => f.into_job(Command::Auto, None),
            Sub::Reduce(f) => f.into_job(Command::Reduce, None),
            Sub::Zeta(f) => f.into_job(Command::Zeta, None),
            Sub::Theta(f) => f.into_job(Command::Theta, None),
            Sub::Count(f) => f.into_job(Command::Count, None),
            Sub::Verify { suite, flags } => flags.into_job(Command::Verify, Some(suite)),
        }),
    }
}

fn report(err: &mut dyn Write, e: &CliError) -> i32 {
    let _ = writeln!(err, "{}", e.to_json());
    e.exit
}

/// Parses `args`, runs the job and writes to the given streams. Returns the
/// exit status.
pub fn execute<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            return report(err, &CliError::parse("bad_arguments", e.to_string().trim().to_string()));
        }
    };
    let job = match job_from_cli(cli) {
        Ok(j) => j,
        Err(e) => return report(err, &e),
    };
    let artifact = match run(&job) {
        Ok(a) => a,
        Err(e) => return report(err, &e),
    };
    let rendered = artifact.render(job.format);
    match &job.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                return report(err, &CliError::parse("unwritable_output", format!("{}: {e}", path.display())));
            }
        }
        None => {
            let _ = out.write_all(rendered.as_bytes());
        }
    }
    if artifact.status == EXIT_VERIFY {
        report(
            err,
            &CliError::new(EXIT_VERIFY, "suite_failed", "at least one check of the suite failed"),
        )
    } else {
        artifact.status
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_are_snake_case_variant_names() {
        assert_eq!(kind_of(&PolyError::UnknownIdentifier("q".into())), "unknown_identifier");
        assert_eq!(kind_of(&ZetaError::ZeroOrder), "zero_order");
    }

    #[test]
    fn script_and_command_conflict() {
        let cli = Cli::try_parse_from(["autoarc", "--script", "job.json", "count"]).unwrap();
        assert_eq!(job_from_cli(cli).unwrap_err().kind, "ambiguous_job");
        let cli = Cli::try_parse_from(["autoarc"]).unwrap();
        assert_eq!(job_from_cli(cli).unwrap_err().exit, EXIT_PARSE);
    }

    #[test]
    fn negative_points_parse_as_values() {
        let cli = Cli::try_parse_from(["autoarc", "jet", "--point", "-1,2", "--n", "2"]).unwrap();
        let job = job_from_cli(cli).unwrap();
        assert_eq!(job.point.as_deref(), Some("-1,2"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        assert_eq!(execute(["autoarc", "--help"], &mut out, &mut err), 0);
        assert!(err.is_empty() && !out.is_empty());
    }
}
