use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::PolyError;

pub type Exponent = u16;

/// Dense exponent vector with cached total degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[Exponent; 30]>,
}

impl Monomial {
    pub fn one(arity: usize) -> Self {
        Monomial {
            deg: 0,
            exps: SmallVec::from_elem(0, arity),
        }
    }

    pub fn from_exponents(exps: &[Exponent]) -> Self {
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps: SmallVec::from_slice(exps),
        }
    }

    /// The monomial `x_var` in a ring of the given arity.
    pub fn variable(arity: usize, var: usize) -> Self {
        let mut m = Self::one(arity);
        m.exps[var] = 1;
        m.deg = 1;
        m
    }

    pub fn arity(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> Exponent {
        self.exps[var]
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.arity(), other.arity());
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self | other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            deg: other.deg - self.deg,
            exps: other.exps.iter().zip(&self.exps).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: SmallVec<_> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| *a.max(b))
            .collect();
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Bitmask of the variables (index mod 64) occurring in the monomial.
    pub fn support_mask(&self) -> u64 {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .fold(0u64, |m, (i, _)| m | (1u64 << (i % 64)))
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, e)| **e > 0)
            .map(|(i, _)| i)
    }

    /// Copy with `var`'s exponent lowered by one; `None` if it is zero.
    pub fn lower(&self, var: usize) -> Option<Monomial> {
        if self.exps[var] == 0 {
            return None;
        }
        let mut m = self.clone();
        m.exps[var] -= 1;
        m.deg -= 1;
        Some(m)
    }

    /// Re-indexes the exponent vector: new position `i` takes old position `map[i]`,
    /// or zero when `map[i]` is `None`.
    pub fn permuted(&self, map: &[Option<usize>]) -> Monomial {
        let exps: SmallVec<_> = map
            .iter()
            .map(|src| src.map_or(0, |s| self.exps[s]))
            .collect();
        Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps,
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Term orders supported by the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Grevlex on the first `front` variables, ties broken by grevlex on the rest.
    BlockElim(usize),
}

fn grevlex_slice(a: &[Exponent], b: &[Exponent]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                // smaller exponent in the last differing variable wins
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

impl MonomialOrder {
    /// Total order on monomials of equal arity.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match *self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::Grevlex => a.deg.cmp(&b.deg).then_with(|| {
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
            MonomialOrder::BlockElim(front) => {
                let front = front.min(a.arity());
                grevlex_slice(&a.exps[..front], &b.exps[..front])
                    .then_with(|| grevlex_slice(&a.exps[front..], &b.exps[front..]))
            }
        }
    }

    /// Checked variant that rejects mismatched arities.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering, PolyError> {
        if a.arity() != b.arity() {
            return Err(PolyError::ArityMismatch {
                left: a.arity(),
                right: b.arity(),
            });
        }
        Ok(self.compare(a, b))
    }

    pub fn name(&self) -> String {
        match self {
            MonomialOrder::Lex => "lex".into(),
            MonomialOrder::Grevlex => "grevlex".into(),
            MonomialOrder::BlockElim(k) => format!("elim{k}"),
        }
    }
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::Grevlex
    }
}

impl std::str::FromStr for MonomialOrder {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grevlex" => Ok(MonomialOrder::Grevlex),
            other => match other.strip_prefix("elim").map(str::parse) {
                Some(Ok(k)) => Ok(MonomialOrder::BlockElim(k)),
                _ => Err(PolyError::UnknownOrder(s.to_string())),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[Exponent]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn order_examples() {
        // x vs y^2 in lex over [x, y]
        assert_eq!(MonomialOrder::Lex.compare(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        // x*y vs x^2 in grevlex
        assert_eq!(MonomialOrder::Grevlex.compare(&m(&[1, 1]), &m(&[2, 0])), Ordering::Less);
        // t vs x^5 y^5 with t eliminated
        assert_eq!(
            MonomialOrder::BlockElim(1).compare(&m(&[1, 0, 0]), &m(&[0, 5, 5])),
            Ordering::Greater
        );
        assert!(MonomialOrder::Grevlex
            .try_compare(&m(&[1]), &m(&[1, 0]))
            .is_err());
    }

    #[test]
    fn grevlex_reverse_tiebreak() {
        // x^2 z > x y^2 in grevlex? degree 3 both; last variable z: 1 vs 0 -> x y^2 larger.
        assert_eq!(
            MonomialOrder::Grevlex.compare(&m(&[2, 0, 1]), &m(&[1, 2, 0])),
            Ordering::Less
        );
    }

    fn orders() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::Grevlex),
            (0usize..=8).prop_map(MonomialOrder::BlockElim),
        ]
    }

    fn vecs(n: usize) -> impl Strategy<Value = Vec<Exponent>> {
        proptest::collection::vec(0u16..=6, n)
    }

    proptest! {
        #[test]
        fn total_order_properties(
            order in orders(),
            (a, b, c) in (1usize..=8).prop_flat_map(|n| (vecs(n), vecs(n), vecs(n))),
        ) {
            let (a, b, c) = (m(&a), m(&b), m(&c));
            let ab = order.compare(&a, &b);
            prop_assert_eq!(ab, order.compare(&b, &a).reverse());
            prop_assert_eq!(ab == Ordering::Equal, a == b);
            if ab != Ordering::Greater && order.compare(&b, &c) != Ordering::Greater {
                prop_assert_ne!(order.compare(&a, &c), Ordering::Greater);
            }
            // refines divisibility
            if a.divides(&b) && a != b {
                prop_assert_eq!(ab, Ordering::Less);
            }
            // multiplicative
            prop_assert_eq!(order.compare(&a.mul(&c), &b.mul(&c)), ab);
        }
    }
}
