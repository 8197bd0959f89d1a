//! Crystals of the minuscule representations used here: the subsets of
//! `[1, n]` for `∧^k C^n` and the sign sequences of a half-spin module.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::families::SkewMatrix;
use crate::groebner::Ideal;

use super::SchubertError;

const MAX_ELEMENTS: usize = 1 << 16;
const MAX_SPIN_RANK: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CrystalElement {
    /// Strictly increasing subset of `[1, n]`.
    Subset(Vec<usize>),
    /// `true` is `+`; the number of `-` is even.
    Signs(Vec<bool>),
}

impl CrystalElement {
    pub fn subset(items: &[usize]) -> Result<Self, SchubertError> {
        if items.windows(2).any(|w| w[0] >= w[1]) || items.first() == Some(&0) {
            return Err(SchubertError::OutOfRange(format!("{items:?} is not an increasing subset")));
        }
        Ok(CrystalElement::Subset(items.to_vec()))
    }

    pub fn signs(signs: &[bool]) -> Result<Self, SchubertError> {
        if signs.iter().filter(|&&s| !s).count() % 2 == 1 {
            return Err(SchubertError::OutOfRange(format!(
                "{} has an odd number of minus signs",
                CrystalElement::Signs(signs.to_vec())
            )));
        }
        Ok(CrystalElement::Signs(signs.to_vec()))
    }

    /// The sequence of length `m` with a single `+` at `position`.
    pub fn single_plus(m: usize, position: usize) -> Result<Self, SchubertError> {
        if position == 0 || position > m {
            return Err(SchubertError::OutOfRange(format!("position {position} outside [1, {m}]")));
        }
        CrystalElement::signs(&(1..=m).map(|i| i == position).collect::<Vec<_>>())
    }
}

impl fmt::Display for CrystalElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CrystalElement::Subset(s) => {
                let parts: Vec<String> = s.iter().map(usize::to_string).collect();
                write!(f, "{{{}}}", parts.join(","))
            }
            CrystalElement::Signs(s) => {
                for &b in s {
                    f.write_str(if b { "+" } else { "-" })?;
                }
                Ok(())
            }
        }
    }
}

impl std::str::FromStr for CrystalElement {
    type Err = SchubertError;

    /// Accepts `{1,3}` or a string of `+` and `-`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('{').and_then(|b| b.strip_suffix('}')) {
            let items = body
                .split(',')
                .filter(|p| !p.trim().is_empty())
                .map(|p| p.trim().parse::<usize>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| SchubertError::OutOfRange(format!("bad subset `{s}`: {e}")))?;
            return CrystalElement::subset(&items);
        }
        if !s.is_empty() && s.chars().all(|c| c == '+' || c == '-') {
            return CrystalElement::signs(&s.chars().map(|c| c == '+').collect::<Vec<_>>());
        }
        Err(SchubertError::OutOfRange(format!("cannot read crystal element `{s}`")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrystalKind {
    TypeA { k: usize, n: usize },
    Spin { n: usize },
}

/// A finite crystal with its `f`-edges and Bruhat order.
#[derive(Clone, Debug)]
pub struct Crystal {
    kind: CrystalKind,
    elements: Vec<CrystalElement>,
    index: HashMap<CrystalElement, usize>,
    edges: Vec<(usize, usize, usize)>,
    // spin only: bitset of the elements reachable by f-paths
    below: Vec<Vec<u64>>,
}

impl Crystal {
    /// Subsets of size `k` of `[1, n]` in lexicographic order.
    pub fn type_a(k: usize, n: usize) -> Result<Self, SchubertError> {
        if k == 0 || k > n {
            return Err(SchubertError::OutOfRange(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
        }
        let count = binomial(n, k);
        if count > MAX_ELEMENTS as u128 {
            return Err(SchubertError::OutOfRange(format!("C({n}, {k}) elements is too many")));
        }
        let elements = crate::families::index_subsets(n, k)
            .into_iter()
            .map(CrystalElement::Subset)
            .collect();
        Ok(Crystal::assemble(CrystalKind::TypeA { k, n }, elements, false))
    }

    /// Sign sequences of length `n` with positive product, by number of
    /// minus signs and then lexicographically with `+` first.
    pub fn spin(n: usize) -> Result<Self, SchubertError> {
        if !(4..=MAX_SPIN_RANK).contains(&n) {
            return Err(SchubertError::OutOfRange(format!("spin crystal rank {n} outside [4, {MAX_SPIN_RANK}]")));
        }
        let mut elements: Vec<Vec<bool>> = (0u32..1 << n)
            .filter(|m| m.count_ones() % 2 == 0)
            .map(|m| (0..n).map(|i| m >> (n - 1 - i) & 1 == 0).collect())
            .collect();
        elements.sort_by(|a, b| {
            let minus = |v: &Vec<bool>| v.iter().filter(|&&s| !s).count();
            minus(a).cmp(&minus(b)).then_with(|| b.cmp(a))
        });
        let elements = elements.into_iter().map(CrystalElement::Signs).collect();
        Ok(Crystal::assemble(CrystalKind::Spin { n }, elements, true))
    }

    fn assemble(kind: CrystalKind, elements: Vec<CrystalElement>, with_reach: bool) -> Self {
        let index: HashMap<CrystalElement, usize> =
            elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut c = Crystal { kind, elements, index, edges: Vec::new(), below: Vec::new() };
        for (i, el) in c.elements.iter().enumerate() {
            for j in 1..=c.operator_count() {
                if let Some(t) = c.apply_f(j, el) {
                    c.edges.push((i, c.index[&t], j));
                }
            }
        }
        if with_reach {
            let words = c.elements.len().div_ceil(64);
            let mut out: Vec<Vec<usize>> = vec![Vec::new(); c.elements.len()];
            for &(a, b, _) in &c.edges {
                out[a].push(b);
            }
            c.below = (0..c.elements.len())
                .map(|start| {
                    let mut seen = vec![0u64; words];
                    let mut queue = VecDeque::from([start]);
                    seen[start / 64] |= 1 << (start % 64);
                    while let Some(v) = queue.pop_front() {
                        for &w in &out[v] {
                            if seen[w / 64] >> (w % 64) & 1 == 0 {
                                seen[w / 64] |= 1 << (w % 64);
                                queue.push_back(w);
                            }
                        }
                    }
                    seen
                })
                .collect();
        }
        c
    }

    pub fn kind(&self) -> CrystalKind {
        self.kind
    }

    /// Number of Kashiwara operators (`n - 1` for subsets, `n` for spin).
    pub fn operator_count(&self) -> usize {
        match self.kind {
            CrystalKind::TypeA { n, .. } => n - 1,
            CrystalKind::Spin { n } => n,
        }
    }

    pub fn elements(&self) -> &[CrystalElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, el: &CrystalElement) -> Option<usize> {
        self.index.get(el).copied()
    }

    fn require(&self, el: &CrystalElement) -> Result<usize, SchubertError> {
        self.position(el).ok_or_else(|| SchubertError::NotInCrystal(el.to_string()))
    }

    /// `f`-edges `(from, to, operator)` as element indices.
    pub fn edges(&self) -> &[(usize, usize, usize)] {
        &self.edges
    }

    pub fn f(&self, j: usize, el: &CrystalElement) -> Result<Option<CrystalElement>, SchubertError> {
        self.check_operator(j)?;
        self.require(el)?;
        Ok(self.apply_f(j, el))
    }

    pub fn e(&self, j: usize, el: &CrystalElement) -> Result<Option<CrystalElement>, SchubertError> {
        self.check_operator(j)?;
        self.require(el)?;
        Ok(self.apply_e(j, el))
    }

    fn check_operator(&self, j: usize) -> Result<(), SchubertError> {
        if j == 0 || j > self.operator_count() {
            return Err(SchubertError::OutOfRange(format!(
                "operator {j} outside [1, {}]",
                self.operator_count()
            )));
        }
        Ok(())
    }

    fn apply_f(&self, j: usize, el: &CrystalElement) -> Option<CrystalElement> {
        self.step(j, el, true)
    }

    fn apply_e(&self, j: usize, el: &CrystalElement) -> Option<CrystalElement> {
        self.step(j, el, false)
    }

    fn step(&self, j: usize, el: &CrystalElement, down: bool) -> Option<CrystalElement> {
        match el {
            CrystalElement::Subset(s) => {
                let (from, to) = if down { (j, j + 1) } else { (j + 1, j) };
                if s.contains(&from) && !s.contains(&to) {
                    let mut t: Vec<usize> = s.iter().map(|&x| if x == from { to } else { x }).collect();
                    t.sort_unstable();
                    Some(CrystalElement::Subset(t))
                } else {
                    None
                }
            }
            CrystalElement::Signs(s) => {
                let n = s.len();
                let (a, b) = if j < n { (j - 1, j) } else { (n - 2, n - 1) };
                let want = if j < n {
                    if down { (true, false) } else { (false, true) }
                } else if down {
                    (true, true)
                } else {
                    (false, false)
                };
                if (s[a], s[b]) != want {
                    return None;
                }
                let mut t = s.clone();
                if j < n {
                    t.swap(a, b);
                } else {
                    t[a] = !t[a];
                    t[b] = !t[b];
                }
                Some(CrystalElement::Signs(t))
            }
        }
    }

    /// Subsets: componentwise comparison of the sorted entries. Spin: `a`
    /// is reachable from `b` by `f`-operators, so the all-`+` element is
    /// the maximum.
    pub fn bruhat_leq(&self, a: &CrystalElement, b: &CrystalElement) -> Result<bool, SchubertError> {
        let ia = self.require(a)?;
        let ib = self.require(b)?;
        Ok(match (a, b) {
            (CrystalElement::Subset(s), CrystalElement::Subset(t)) => s.iter().zip(t).all(|(x, y)| x <= y),
            _ => self.below[ib][ia / 64] >> (ia % 64) & 1 == 1,
        })
    }

    /// The element without `e`-predecessors.
    pub fn highest(&self) -> &CrystalElement {
        &self.elements[0]
    }

    /// The element without `f`-successors.
    pub fn lowest(&self) -> &CrystalElement {
        let mut sinks = vec![true; self.len()];
        for &(a, _, _) in &self.edges {
            sinks[a] = false;
        }
        let i = sinks.iter().position(|&s| s).expect("finite crystal has a sink");
        &self.elements[i]
    }

    /// Ideal on the big cell of the spin Schubert variety of `el`: the
    /// Pfaffians of `a` labelled by the elements not above `el`.
    pub fn spin_schubert_ideal(&self, el: &CrystalElement, a: &SkewMatrix) -> Result<Ideal, SchubertError> {
        let CrystalKind::Spin { n } = self.kind else {
            return Err(SchubertError::WrongType);
        };
        if a.size() != n {
            return Err(SchubertError::RankMismatch { expected: n, found: a.size() });
        }
        let mut gens = Vec::new();
        for tau in &self.elements {
            if !self.bruhat_leq(el, tau)? {
                gens.push(a.pfaffian(&pfaffian_label(tau)?)?);
            }
        }
        Ok(Ideal::new(a.ring(), gens).map_err(crate::families::FamilyError::from)?)
    }
}

/// Positions of the minus signs.
pub fn pfaffian_label(el: &CrystalElement) -> Result<Vec<usize>, SchubertError> {
    match el {
        CrystalElement::Signs(s) => Ok((1..=s.len()).filter(|&i| !s[i - 1]).collect()),
        CrystalElement::Subset(_) => Err(SchubertError::WrongType),
    }
}

/// The Grassmannian index sequence of a sign sequence of length `m`: the
/// plus positions `j`, then `2m + 1 - k` over the minus positions `k`.
pub fn index_sequence(el: &CrystalElement) -> Result<Vec<usize>, SchubertError> {
    let CrystalElement::Signs(s) = el else {
        return Err(SchubertError::WrongType);
    };
    let m = s.len();
    let mut out: Vec<usize> = (1..=m).filter(|&i| s[i - 1]).collect();
    out.extend((1..=m).rev().filter(|&k| !s[k - 1]).map(|k| 2 * m + 1 - k));
    Ok(out)
}

/// Convenience form of [`Crystal::spin_schubert_ideal`] for the crystal
/// matching the size of `a`.
pub fn spin_schubert_ideal(el: &CrystalElement, a: &SkewMatrix) -> Result<Ideal, SchubertError> {
    let CrystalElement::Signs(s) = el else {
        return Err(SchubertError::WrongType);
    };
    if s.len() != a.size() {
        return Err(SchubertError::RankMismatch { expected: s.len(), found: a.size() });
    }
    Crystal::spin(s.len())?.spin_schubert_ideal(el, a)
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(s: &str) -> CrystalElement {
        s.parse().unwrap()
    }

    #[test]
    fn spin_operators() {
        let c = Crystal::spin(5).unwrap();
        assert_eq!(c.len(), 16);
        assert_eq!(c.f(1, &el("+-++-")).unwrap(), Some(el("-+++-")));
        assert_eq!(c.f(1, &el("-+++-")).unwrap(), None);
        assert_eq!(c.f(5, &el("+++++")).unwrap(), Some(el("+++--")));
        assert_eq!(c.e(5, &el("+++--")).unwrap(), Some(el("+++++")));
        assert_eq!(c.highest(), &el("+++++"));
        assert_eq!(c.lowest(), &el("----+"));
        assert_eq!(Crystal::spin(4).unwrap().lowest(), &el("----"));
        assert!(c.f(6, &el("+++++")).is_err());
        assert!(c.f(1, &el("++++")).is_err());
        assert!("+-+++".parse::<CrystalElement>().is_err());
    }

    #[test]
    fn subset_order() {
        let c = Crystal::type_a(2, 6).unwrap();
        assert_eq!(c.len(), 15);
        assert!(c.bruhat_leq(&el("{1,3}"), &el("{2,5}")).unwrap());
        assert!(!c.bruhat_leq(&el("{1,4}"), &el("{2,3}")).unwrap());
        assert_eq!(c.f(2, &el("{1,2}")).unwrap(), Some(el("{1,3}")));
        assert_eq!(c.highest(), &el("{1,2}"));
        assert_eq!(c.lowest(), &el("{5,6}"));
    }

    #[test]
    fn labels() {
        assert_eq!(pfaffian_label(&el("++++")).unwrap(), Vec::<usize>::new());
        assert_eq!(pfaffian_label(&el("--++")).unwrap(), vec![1, 2]);
        assert_eq!(pfaffian_label(&el("----")).unwrap(), vec![1, 2, 3, 4]);
        assert!(pfaffian_label(&el("{1,2}")).is_err());
        assert_eq!(index_sequence(&el("+-+-")).unwrap(), vec![1, 3, 5, 7]);
        assert_eq!(index_sequence(&el("++++")).unwrap(), vec![1, 2, 3, 4]);
    }

    #[test]
    fn spin_order_is_a_partial_order() {
        let c = Crystal::spin(6).unwrap();
        let minus = |x: &CrystalElement| pfaffian_label(x).unwrap().len();
        for a in c.elements() {
            assert!(c.bruhat_leq(a, a).unwrap());
            assert!(c.bruhat_leq(a, c.highest()).unwrap());
            for b in c.elements() {
                if a != b && c.bruhat_leq(a, b).unwrap() {
                    assert!(!c.bruhat_leq(b, a).unwrap());
                    assert!(minus(a) >= minus(b));
                }
            }
        }
    }

    #[test]
    fn schubert_ideal_extremes() {
        let a = SkewMatrix::generic(5, "x").unwrap();
        let c = Crystal::spin(5).unwrap();
        let bottom = c.spin_schubert_ideal(c.lowest(), &a).unwrap();
        assert!(bottom.is_zero());
        let top = c.spin_schubert_ideal(c.highest(), &a).unwrap();
        assert_eq!(top.generators().len(), 15);
        assert!(matches!(
            c.spin_schubert_ideal(&el("+++++"), &SkewMatrix::generic(4, "x").unwrap()),
            Err(SchubertError::RankMismatch { .. })
        ));
    }

    #[test]
    fn single_plus_gives_prefix_pfaffians() {
        let a = SkewMatrix::generic(5, "x").unwrap();
        let cfg = crate::GbConfig::default();
        // at j = m the position m - j does not exist
        assert!(CrystalElement::single_plus(5, 0).is_err());
        for j in 3..=4 {
            let el = CrystalElement::single_plus(5, 5 - j);
            let got = spin_schubert_ideal(&el.unwrap(), &a).unwrap();
            let want = a.pfaffian_ideal_containing(j).unwrap();
            assert!(crate::groebner::ideals_equal(&got, &want, &cfg).unwrap(), "j = {j}");
        }
    }
}
