use serde::{Deserialize, Serialize};
use std::collections::HashSet;
use std::sync::Arc;

use super::{CoefficientField, Monomial, MonomialOrder, PolyError};

/// A polynomial ring `k[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolyRing {
    field: CoefficientField,
    variables: Vec<String>,
    order: MonomialOrder,
}

pub type Ring = Arc<PolyRing>;

pub(crate) fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: AsRef<str>>(
        field: CoefficientField,
        variables: &[S],
        order: MonomialOrder,
    ) -> Result<Ring, PolyError> {
        if let CoefficientField::PrimeField(p) = field {
            CoefficientField::prime_field(p)?;
        }
        let mut seen = HashSet::new();
        let mut names = Vec::with_capacity(variables.len());
        for v in variables {
            let v = v.as_ref().to_string();
            if !valid_identifier(&v) {
                return Err(PolyError::BadVariableName(v));
            }
            if !seen.insert(v.clone()) {
                return Err(PolyError::DuplicateVariable(v));
            }
            names.push(v);
        }
        Ok(Arc::new(PolyRing {
            field,
            variables: names,
            order,
        }))
    }

    /// `QQ[vars]` in DegRevLex.
    pub fn rational<S: AsRef<str>>(variables: &[S]) -> Result<Ring, PolyError> {
        Self::new(CoefficientField::Rationals, variables, MonomialOrder::DegRevLex)
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    pub fn one_monomial(&self) -> Monomial {
        Monomial::one(self.nvars())
    }

    /// Same variables and order over another field.
    pub fn with_field(&self, field: CoefficientField) -> Result<Ring, PolyError> {
        PolyRing::new(field, &self.variables, self.order)
    }
}
