//! Exact multivariate polynomials over `QQ` and prime fields.

mod field;
mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use field::{is_prime, Coeff, CoefficientField};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::parse;
pub use polynomial::Polynomial;
pub use ring::{PolyRing, Ring};

pub(crate) use polynomial::same_ring;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PolyError {
    #[error("unknown identifier '{0}'")]
    UnknownIdentifier(String),
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("negative exponent")]
    NegativeExponent,
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("no image given for variable '{0}'")]
    MissingImage(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid variable name '{0}'")]
    BadVariableName(String),
    #[error("duplicate variable '{0}'")]
    DuplicateVariable(String),
    #[error("division by zero in coefficient field")]
    DivisionByZero,
    #[error("coefficient is not representable in the target field")]
    CoefficientNotRepresentable,
}
