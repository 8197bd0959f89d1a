//! Exact polynomial arithmetic over the rationals.

mod monomial;
mod parse;
mod polynomial;
mod ring;

pub use monomial::{Exponent, Monomial, MonomialOrder};
pub use parse::parse_poly;
pub use polynomial::{Polynomial, Term};
pub use ring::{indexed_name, Ring};

pub(crate) use polynomial::add_scaled;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("unknown variable `{name}` at offset {pos}")]
    UnknownVariableAt { name: String, pos: usize },
    #[error("syntax error at offset {pos}: expected {expected}, found {found}")]
    Syntax { pos: usize, expected: String, found: String },
    #[error("negative exponent at offset {pos}")]
    NegativeExponent { pos: usize },
    #[error("monomial arity mismatch ({left} vs {right})")]
    ArityMismatch { left: usize, right: usize },
    #[error("polynomials live in different rings")]
    RingMismatch,
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("`{0}` is not a valid variable name")]
    BadVariableName(String),
    #[error("elimination block of {front} variables exceeds ring arity {arity}")]
    BadBlock { front: usize, arity: usize },
    #[error("unknown monomial order `{0}`")]
    UnknownOrder(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

impl PolyError {
    /// The offending identifier, for unknown-variable errors.
    pub fn unknown_name(&self) -> Option<&str> {
        match self {
            PolyError::UnknownVariable(n) | PolyError::UnknownVariableAt { name: n, .. } => Some(n),
            _ => None,
        }
    }
}
