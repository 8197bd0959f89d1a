use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use super::{MonomialOrder, PolyError};

struct RingData {
    vars: Vec<String>,
    index: HashMap<String, usize>,
    order: MonomialOrder,
}

/// A polynomial ring over the rationals: named variables plus a term order.
///
/// Cheap to clone; two rings compare equal when variable lists and orders agree.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S], order: MonomialOrder) -> Result<Self, PolyError> {
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        let mut index = HashMap::with_capacity(vars.len());
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::BadVariableName(v.clone()));
            }
            if index.insert(v.clone(), i).is_some() {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        if let MonomialOrder::BlockElim(k) = order {
            if k > vars.len() {
                return Err(PolyError::BadBlock { front: k, arity: vars.len() });
            }
        }
        Ok(Ring(Arc::new(RingData { vars, index, order })))
    }

    pub fn grevlex<S: AsRef<str>>(vars: &[S]) -> Result<Self, PolyError> {
        Self::new(vars, MonomialOrder::Grevlex)
    }

    pub fn arity(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.0.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.index.get(name).copied()
    }

    pub fn require_var(&self, name: &str) -> Result<usize, PolyError> {
        self.var_index(name)
            .ok_or_else(|| PolyError::UnknownVariable(name.to_string()))
    }

    /// Same variables, different order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring, PolyError> {
        if order == self.order() {
            return Ok(self.clone());
        }
        Ring::new(self.vars(), order)
    }

    /// A variable name not used by this ring, derived from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut i = 0;
        while self.var_index(&name).is_some() {
            i += 1;
            name = format!("{base}{i}");
        }
        name
    }

    pub fn same(&self, other: &Ring) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.order == other.0.order && self.0.vars == other.0.vars)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QQ[{}; {}]", self.0.vars.join(","), self.0.order.name())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Variable name for an indexed family, e.g. `("p", [1, 2], 6)` gives `p_12`.
///
/// Indices are concatenated when every index of the family is a single digit,
/// otherwise they are separated by underscores (`p_1_10`).
pub fn indexed_name(prefix: &str, indices: &[usize], max_index: usize) -> String {
    let sep = if max_index <= 9 { "" } else { "_" };
    let body: Vec<String> = indices.iter().map(|i| i.to_string()).collect();
    format!("{prefix}_{}", body.join(sep))
}
