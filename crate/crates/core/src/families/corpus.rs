//! Loader for the bundled polynomial datasets (see `data/*.txt` for the format).

use std::collections::BTreeMap;

use crate::groebner::Ideal;
use crate::poly::{parse_poly, Polynomial, Ring};

use super::FamilyError;

const E6_SOURCE: &str = include_str!("../../data/e6.txt");
const E7_SOURCE: &str = include_str!("../../data/e7.txt");

/// Named polynomials and ideals over one ring.
#[derive(Clone, Debug)]
pub struct NamedIdealSet {
    ring: Ring,
    polys: BTreeMap<String, Polynomial>,
    poly_order: Vec<String>,
    ideals: BTreeMap<String, Ideal>,
    ideal_order: Vec<String>,
    aliases: BTreeMap<String, String>,
}

impl NamedIdealSet {
    pub fn parse(source: &str) -> Result<Self, FamilyError> {
        let mut ring: Option<Ring> = None;
        let mut set: Option<NamedIdealSet> = None;
        for (line_no, stmt) in statements(source) {
            let err = |msg: String| FamilyError::Corpus { line: line_no, msg };
            let (head, rest) = stmt.split_once(char::is_whitespace).unwrap_or((stmt.as_str(), ""));
            let rest = rest.trim();
            if head == "ring" {
                if ring.is_some() {
                    return Err(err("ring declared twice".into()));
                }
                let vars: Vec<&str> = rest.split_whitespace().collect();
                let r = Ring::grevlex(&vars).map_err(|e| err(e.to_string()))?;
                set = Some(NamedIdealSet {
                    ring: r.clone(),
                    polys: BTreeMap::new(),
                    poly_order: Vec::new(),
                    ideals: BTreeMap::new(),
                    ideal_order: Vec::new(),
                    aliases: BTreeMap::new(),
                });
                ring = Some(r);
                continue;
            }
            let set = set.as_mut().ok_or_else(|| err("statement before `ring`".into()))?;
            let (name, body) = rest
                .split_once('=')
                .map(|(a, b)| (a.trim().to_string(), b.trim()))
                .ok_or_else(|| err(format!("expected `{head} NAME = ...`")))?;
            if name.is_empty() {
                return Err(err("missing name".into()));
            }
            match head {
                "poly" => {
                    let p = parse_poly(body, &set.ring).map_err(|e| err(e.to_string()))?;
                    set.insert_poly(&name, p).map_err(|e| err(e.to_string()))?;
                }
                "derive" => {
                    let inner = body
                        .strip_prefix("diff(")
                        .and_then(|b| b.strip_suffix(')'))
                        .ok_or_else(|| err("expected `diff(NAME)`".into()))?;
                    let base = set
                        .polys
                        .get(inner.trim())
                        .cloned()
                        .ok_or_else(|| err(format!("undefined polynomial `{}`", inner.trim())))?;
                    for v in 0..set.ring.arity() {
                        let d = base.derivative_at(v);
                        set.insert_poly(&format!("{name}_{}", v + 1), d).map_err(|e| err(e.to_string()))?;
                    }
                }
                "ideal" => {
                    let mut gens = Vec::new();
                    for item in body.split(',') {
                        let item = item.trim();
                        let p = match set.polys.get(item) {
                            Some(p) => p.clone(),
                            None => parse_poly(item, &set.ring).map_err(|e| err(e.to_string()))?,
                        };
                        gens.push(p);
                    }
                    let ideal = Ideal::new(&set.ring, gens).map_err(|e| err(e.to_string()))?;
                    set.insert_ideal(&name, ideal).map_err(|e| err(e.to_string()))?;
                }
                "alias" => set.set_alias(&name, body).map_err(|e| err(e.to_string()))?,
                other => return Err(err(format!("unknown statement `{other}`"))),
            }
        }
        set.ok_or(FamilyError::Corpus { line: 0, msg: "no `ring` statement".into() })
    }

    fn insert_poly(&mut self, name: &str, p: Polynomial) -> Result<(), FamilyError> {
        if self.polys.insert(name.to_string(), p).is_some() {
            return Err(FamilyError::Duplicate(name.to_string()));
        }
        self.poly_order.push(name.to_string());
        Ok(())
    }

    /// Adds a named ideal; names must be fresh.
    pub fn insert_ideal(&mut self, name: &str, ideal: Ideal) -> Result<(), FamilyError> {
        if !ideal.ring().same(&self.ring) {
            return Err(FamilyError::Ideal(crate::IdealError::RingMismatch));
        }
        if self.ideals.contains_key(name) || self.aliases.contains_key(name) {
            return Err(FamilyError::Duplicate(name.to_string()));
        }
        self.ideals.insert(name.to_string(), ideal);
        self.ideal_order.push(name.to_string());
        Ok(())
    }

    /// Points `name` at the ideal `target`, replacing an earlier alias.
    pub fn set_alias(&mut self, name: &str, target: &str) -> Result<(), FamilyError> {
        if self.ideals.contains_key(name) {
            return Err(FamilyError::Duplicate(name.to_string()));
        }
        if !self.ideals.contains_key(target) {
            return Err(FamilyError::UnknownName(target.to_string()));
        }
        self.aliases.insert(name.to_string(), target.to_string());
        Ok(())
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn ideal(&self, name: &str) -> Result<&Ideal, FamilyError> {
        let key = self.aliases.get(name).map(String::as_str).unwrap_or(name);
        self.ideals
            .get(key)
            .ok_or_else(|| FamilyError::UnknownName(name.to_string()))
    }

    pub fn poly(&self, name: &str) -> Result<&Polynomial, FamilyError> {
        self.polys
            .get(name)
            .ok_or_else(|| FamilyError::UnknownName(name.to_string()))
    }

    /// Ideal names in definition order (aliases excluded).
    pub fn ideal_names(&self) -> &[String] {
        &self.ideal_order
    }

    /// Polynomial names in definition order.
    pub fn poly_names(&self) -> &[String] {
        &self.poly_order
    }

    pub fn aliases(&self) -> impl Iterator<Item = (&str, &str)> {
        self.aliases.iter().map(|(a, b)| (a.as_str(), b.as_str()))
    }
}

/// Logical statements with their starting line numbers; indented lines
/// continue the previous statement and `#` starts a comment line.
fn statements(source: &str) -> Vec<(usize, String)> {
    let mut out: Vec<(usize, String)> = Vec::new();
    for (i, line) in source.lines().enumerate() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let continues = line.starts_with(char::is_whitespace);
        match out.last_mut() {
            Some((_, s)) if continues => {
                s.push(' ');
                s.push_str(trimmed);
            }
            _ => out.push((i + 1, trimmed.to_string())),
        }
    }
    out
}

/// The E6 dataset (16 variables).
pub fn e6_dataset() -> NamedIdealSet {
    NamedIdealSet::parse(E6_SOURCE).expect("bundled E6 corpus parses")
}

/// The E7 dataset (27 variables) with `I2` bound to `I51`.
pub fn e7_dataset() -> NamedIdealSet {
    NamedIdealSet::parse(E7_SOURCE).expect("bundled E7 corpus parses")
}

/// The E7 dataset with `I2` bound to another of its ideals.
pub fn e7_dataset_with_i2(target: &str) -> Result<NamedIdealSet, FamilyError> {
    let mut set = e7_dataset();
    set.set_alias("I2", target)?;
    Ok(set)
}

/// Raw text of a bundled dataset, by name (`e6` or `e7`).
pub fn bundled_source(name: &str) -> Option<&'static str> {
    match name {
        "e6" => Some(E6_SOURCE),
        "e7" => Some(E7_SOURCE),
        _ => None,
    }
}
