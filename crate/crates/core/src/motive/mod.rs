//! Classes in `Z[L, L^-1]`, truncated series and rational functions over
//! them, and the finite-field counting oracle that assigns classes.

mod class;
mod count;
mod interpolate;
mod rational;
mod series;

pub use class::MotiveClass;
pub use count::{count_points, CountBudget};
pub use interpolate::{admissible_primes, interpolate_class, Interpolation, InterpolationConfig};
pub use rational::detect_rationality;
pub use series::{tpoly_divides, tpoly_mul, MotiveRational, MotiveSeries};

use thiserror::Error;

use crate::ideal::IdealError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum MotiveError {
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("ideal is defined over characteristic {0}, asked to count over F_{1}")]
    CharacteristicMismatch(u64, u64),
    #[error("bad reduction modulo {0}")]
    BadReduction(u64),
    #[error("counting needs {prime}^{variables} assignments, budget is {budget}")]
    CountBudgetExceeded { variables: usize, prime: u64, budget: u64 },
    #[error("need {needed} primes, got {given}")]
    NotEnoughPrimes { needed: usize, given: usize },
    #[error("interpolated class has a non-integral coefficient {0}")]
    NonIntegralClass(String),
    #[error("interpolated class predicts {predicted} points over F_{prime}, counted {counted}")]
    VerificationMismatch { prime: u64, predicted: String, counted: String },
    #[error("truncation orders {0} and {1} differ")]
    IncompatibleTruncation(usize, usize),
    #[error("denominator constant term is not a unit of Z[L, L^-1]")]
    NonUnitDenominator,
}
