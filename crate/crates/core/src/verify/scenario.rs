//! Scenario files: a ring, named polynomials and ideals, and checks over them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::families::{e6_dataset, e7_dataset, NamedIdealSet};
use crate::groebner::Ideal;
use crate::poly::{parse_poly, MonomialOrder, Polynomial, Ring};

use super::checks::Mode;
use super::VerifyError;

pub const FORMAT: u32 = 1;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub vars: Vec<String>,
    #[serde(default = "default_order")]
    pub order: String,
}

fn default_order() -> String {
    "grevlex".into()
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    ColonEquals,
    Link,
    GeometricLink,
    ResidualIntersection,
    CodimEquals,
    MuEquals,
    IdealEquals,
}

impl CheckKind {
    pub fn arity(self) -> usize {
        match self {
            CheckKind::CodimEquals | CheckKind::MuEquals => 1,
            CheckKind::IdealEquals => 2,
            _ => 3,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::ColonEquals => "colon_equals",
            CheckKind::Link => "link",
            CheckKind::GeometricLink => "geometric_link",
            CheckKind::ResidualIntersection => "residual_intersection",
            CheckKind::CodimEquals => "codim_equals",
            CheckKind::MuEquals => "mu_equals",
            CheckKind::IdealEquals => "ideal_equals",
        }
    }

    fn takes_count(self) -> bool {
        matches!(self, CheckKind::CodimEquals | CheckKind::MuEquals)
    }

    fn supports_containment(self) -> bool {
        matches!(self, CheckKind::ColonEquals | CheckKind::Link | CheckKind::ResidualIntersection)
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq, Default)]
#[serde(rename_all = "snake_case")]
pub enum ModeSpec {
    #[default]
    Exact,
    ContainmentOnly,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Check {
    #[serde(default)]
    pub name: Option<String>,
    pub kind: CheckKind,
    pub args: Vec<String>,
    /// `true`/`false` for identities (default `true`), an integer for counts.
    #[serde(default)]
    pub expect: Option<Value>,
    /// Residual-intersection parameter.
    #[serde(default)]
    pub s: Option<usize>,
    #[serde(default)]
    pub mode: ModeSpec,
}

impl Check {
    pub fn display_name(&self) -> String {
        self.name
            .clone()
            .unwrap_or_else(|| format!("{}({})", self.kind.name(), self.args.join(", ")))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    pub format: u32,
    /// A bundled dataset (`e6` or `e7`) providing the ring and named ideals.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dataset: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<RingSpec>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub polys: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub ideals: BTreeMap<String, Vec<String>>,
    /// Extra names for ideals, e.g. `{"I2": "I51"}`.
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub aliases: BTreeMap<String, String>,
    #[serde(default)]
    pub checks: Vec<Check>,
}

/// What a check expects.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Expectation {
    Truth(bool),
    Count(usize),
}

/// A check with its operands resolved.
#[derive(Clone, Debug)]
pub struct BoundCheck {
    pub name: String,
    pub kind: CheckKind,
    pub operands: Vec<Ideal>,
    pub expect: Expectation,
    pub s: Option<usize>,
    pub mode: Mode,
}

/// A validated scenario ready to run.
#[derive(Clone, Debug)]
pub struct Prepared {
    pub ring: Ring,
    pub checks: Vec<BoundCheck>,
}

impl Scenario {
    pub fn from_json(text: &str) -> Result<Self, VerifyError> {
        let sc: Scenario = serde_json::from_str(text).map_err(|e| VerifyError::Parse(e.to_string()))?;
        if sc.format != FORMAT {
            return Err(VerifyError::Parse(format!("unsupported scenario format {}", sc.format)));
        }
        Ok(sc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scenario serializes")
    }

    /// Resolves every name; `order` overrides the scenario's order.
    pub fn prepare(&self, order: Option<MonomialOrder>) -> Result<Prepared, VerifyError> {
        let base: Option<NamedIdealSet> = match self.dataset.as_deref() {
            None => None,
            Some("e6") => Some(e6_dataset()),
            Some("e7") => Some(e7_dataset()),
            Some(other) => return Err(VerifyError::Parse(format!("unknown dataset `{other}`"))),
        };
        let ring = match (&base, &self.ring) {
            (Some(_), Some(_)) => {
                return Err(VerifyError::Parse("give either `dataset` or `ring`, not both".into()))
            }
            (Some(b), None) => b.ring().clone(),
            (None, Some(spec)) => {
                let ord: MonomialOrder = spec.order.parse().map_err(|e: crate::PolyError| VerifyError::Parse(e.to_string()))?;
                Ring::new(&spec.vars, ord).map_err(|e| VerifyError::Parse(e.to_string()))?
            }
            (None, None) => return Err(VerifyError::Parse("scenario needs `dataset` or `ring`".into())),
        };
        let ring = match order {
            Some(o) => ring.with_order(o).map_err(|e| VerifyError::Parse(e.to_string()))?,
            None => ring,
        };

        let mut polys: BTreeMap<String, Polynomial> = BTreeMap::new();
        let mut ideals: BTreeMap<String, Ideal> = BTreeMap::new();
        if let Some(b) = &base {
            for name in b.poly_names() {
                polys.insert(name.clone(), b.poly(name)?.map_to_ring(&ring)?);
            }
            for name in b.ideal_names() {
                ideals.insert(name.clone(), b.ideal(name)?.map_to_ring(&ring)?);
            }
            for (alias, target) in b.aliases() {
                ideals.insert(alias.to_string(), b.ideal(target)?.map_to_ring(&ring)?);
            }
        }
        for (name, text) in &self.polys {
            let p = parse_poly(text, &ring).map_err(|e| VerifyError::Parse(format!("polynomial `{name}`: {e}")))?;
            if polys.insert(name.clone(), p).is_some() {
                return Err(VerifyError::Parse(format!("polynomial `{name}` defined twice")));
            }
        }
        for (name, items) in &self.ideals {
            let gens = items
                .iter()
                .map(|item| match polys.get(item.trim()) {
                    Some(p) => Ok(p.clone()),
                    None => parse_poly(item, &ring)
                        .map_err(|e| VerifyError::Parse(format!("ideal `{name}`, item `{item}`: {e}"))),
                })
                .collect::<Result<Vec<_>, _>>()?;
            let ideal = Ideal::new(&ring, gens)?;
            if ideals.insert(name.clone(), ideal).is_some() {
                return Err(VerifyError::Parse(format!("ideal `{name}` defined twice")));
            }
        }
        for (alias, target) in &self.aliases {
            let ideal = ideals.get(target).cloned().ok_or_else(|| VerifyError::Undefined(target.clone()))?;
            ideals.insert(alias.clone(), ideal);
        }

        let checks = self
            .checks
            .iter()
            .map(|c| bind(c, &ideals))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Prepared { ring, checks })
    }
}

fn bind(c: &Check, ideals: &BTreeMap<String, Ideal>) -> Result<BoundCheck, VerifyError> {
    let name = c.display_name();
    if c.args.len() != c.kind.arity() {
        return Err(VerifyError::Parse(format!(
            "check `{name}`: {} takes {} operands, got {}",
            c.kind.name(),
            c.kind.arity(),
            c.args.len()
        )));
    }
    let operands = c
        .args
        .iter()
        .map(|a| ideals.get(a).cloned().ok_or_else(|| VerifyError::Undefined(a.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let expect = match (&c.expect, c.kind.takes_count()) {
        (Some(Value::Number(n)), true) => Expectation::Count(
            n.as_u64()
                .ok_or_else(|| VerifyError::Parse(format!("check `{name}`: expected a count")))? as usize,
        ),
        (None, true) => return Err(VerifyError::Parse(format!("check `{name}`: `expect` count is required"))),
        (Some(Value::Bool(b)), false) => Expectation::Truth(*b),
        (None, false) => Expectation::Truth(true),
        (Some(v), _) => return Err(VerifyError::Parse(format!("check `{name}`: bad `expect` value {v}"))),
    };
    if c.kind == CheckKind::ResidualIntersection && c.s.is_none() {
        return Err(VerifyError::Parse(format!("check `{name}`: residual intersection needs `s`")));
    }
    if c.kind != CheckKind::ResidualIntersection && c.s.is_some() {
        return Err(VerifyError::Parse(format!("check `{name}`: `s` only applies to residual intersections")));
    }
    // minimal generator counts are defined here for graded ideals only
    let graded = match c.kind {
        CheckKind::ResidualIntersection | CheckKind::MuEquals | CheckKind::Link => Some(&operands[0]),
        _ => None,
    };
    if let Some(i) = graded {
        if !i.is_homogeneous() {
            return Err(VerifyError::Parse(format!("check `{name}`: `{}` is not homogeneous", c.args[0])));
        }
    }
    let mode = match c.mode {
        ModeSpec::Exact => Mode::Exact,
        ModeSpec::ContainmentOnly if c.kind.supports_containment() => Mode::Containment,
        ModeSpec::ContainmentOnly => {
            return Err(VerifyError::Parse(format!(
                "check `{name}`: {} has no containment-only mode",
                c.kind.name()
            )))
        }
    };
    Ok(BoundCheck { name, kind: c.kind, operands, expect, s: c.s, mode })
}

const E6_SCENARIO: &str = include_str!("../../scenarios/e6.scenario.json");
const E7_SCENARIO: &str = include_str!("../../scenarios/e7.scenario.json");

/// Text of a bundled scenario (`e6` or `e7`).
pub fn bundled_scenario(name: &str) -> Option<&'static str> {
    match name {
        "e6" => Some(E6_SCENARIO),
        "e7" => Some(E7_SCENARIO),
        _ => None,
    }
}
