use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use super::{Monomial, MonomialOrder, PolyError, Ring};
use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Rational,
    pub mono: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, mono: Monomial) -> Self {
        Term { coeff, mono }
    }
}

/// Sparse polynomial: nonzero terms strictly descending in the ring's order.
#[derive(Clone)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<Term>,
}

/// `f + c * m * g` as a fresh canonical term vector.
pub(crate) fn add_scaled(
    f: &[Term],
    c: &Rational,
    m: &Monomial,
    g: &[Term],
    order: MonomialOrder,
) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut gi = g.iter().map(|t| Term::new(c * &t.coeff, m.mul(&t.mono))).peekable();
    while i < f.len() {
        let Some(gt) = gi.peek() else { break };
        match order.compare(&f[i].mono, &gt.mono) {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => out.push(gi.next().unwrap()),
            Ordering::Equal => {
                let gt = gi.next().unwrap();
                let s = &f[i].coeff + &gt.coeff;
                if !s.is_zero() {
                    out.push(Term::new(s, gt.mono));
                }
                i += 1;
            }
        }
    }
    out.extend_from_slice(&f[i..]);
    out.extend(gi);
    out
}

pub(crate) fn canonicalize(acc: HashMap<Monomial, Rational>, order: MonomialOrder) -> Vec<Term> {
    let mut terms: Vec<Term> = acc
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| Term::new(c, m))
        .collect();
    terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
    terms
}

impl Polynomial {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![Term::new(c, Monomial::one(ring.arity()))]
        };
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Self, PolyError> {
        let i = ring.require_var(name)?;
        Ok(Self::var_at(ring, i))
    }

    pub fn var_at(ring: &Ring, index: usize) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: vec![Term::new(Rational::one(), Monomial::variable(ring.arity(), index))],
        }
    }

    /// Builds a polynomial from arbitrary (possibly repeated, zero, unsorted) terms.
    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Rational, Monomial)>) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (c, m) in terms {
            assert_eq!(m.arity(), ring.arity(), "monomial arity differs from ring");
            let e = acc.entry(m).or_insert_with(Rational::zero);
            *e = &*e + &c;
        }
        Polynomial { ring: ring.clone(), terms: canonicalize(acc, ring.order()) }
    }

    /// Trusted constructor: `terms` must already be canonical for `ring`.
    pub(crate) fn from_sorted(ring: &Ring, terms: Vec<Term>) -> Self {
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].mono, &w[1].mono) == Ordering::Greater));
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// True for nonzero constants.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].mono.is_one()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.degree()).max()
    }

    pub fn degrees(&self) -> Vec<u32> {
        self.terms.iter().map(|t| t.mono.degree()).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => {
                let d = t.mono.degree();
                self.terms.iter().all(|s| s.mono.degree() == d)
            }
        }
    }

    /// Indices of the ring variables that occur in some term.
    pub fn variables_used(&self) -> Vec<usize> {
        let mut used = vec![false; self.ring.arity()];
        for t in &self.terms {
            for v in t.mono.support() {
                used[v] = true;
            }
        }
        used.iter().enumerate().filter(|(_, u)| **u).map(|(i, _)| i).collect()
    }

    fn check_ring(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.ring.same(&other.ring) {
            Ok(())
        } else {
            Err(PolyError::RingMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let m = Monomial::one(self.ring.arity());
        let terms = add_scaled(&self.terms, &Rational::one(), &m, &other.terms, self.ring.order());
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        let m = Monomial::one(self.ring.arity());
        let terms = add_scaled(&self.terms, &-Rational::one(), &m, &other.terms, self.ring.order());
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let order = self.ring.order();
        if other.terms.len() == 1 {
            return Ok(self.mul_term(&other.terms[0].coeff, &other.terms[0].mono));
        }
        if self.terms.len() == 1 {
            return Ok(other.mul_term(&self.terms[0].coeff, &self.terms[0].mono));
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let m = a.mono.mul(&b.mono);
                let c = &a.coeff * &b.coeff;
                match acc.get_mut(&m) {
                    Some(e) => *e = &*e + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Ok(Polynomial { ring: self.ring.clone(), terms: canonicalize(acc, order) })
    }

    /// `c * m * self`; term order is preserved by monomial multiplication.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term::new(c * &t.coeff, t.mono.mul(m)))
            .collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        self.mul_term(c, &Monomial::one(self.ring.arity()))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same ring");
        }
        acc
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(c) if c.is_one() => self.clone(),
            Some(c) => self.scale(&c.recip().expect("nonzero")),
        }
    }

    pub fn partial_derivative(&self, var: &str) -> Result<Polynomial, PolyError> {
        let v = self.ring.require_var(var)?;
        Ok(self.derivative_at(v))
    }

    pub fn derivative_at(&self, v: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|t| {
            let e = t.mono.exponent(v);
            t.mono
                .lower(v)
                .map(|m| (&t.coeff * &Rational::from_int(e as i64), m))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    ///
    /// Every variable used by `self` must exist in `target`.
    pub fn map_to_ring(&self, target: &Ring) -> Result<Polynomial, PolyError> {
        if self.ring.same(target) {
            return Ok(self.clone());
        }
        let map: Vec<Option<usize>> = target
            .vars()
            .iter()
            .map(|name| self.ring.var_index(name))
            .collect();
        for v in self.variables_used() {
            let name = &self.ring.vars()[v];
            if target.var_index(name).is_none() {
                return Err(PolyError::UnknownVariable(name.clone()));
            }
        }
        let mut terms: Vec<Term> = self
            .terms
            .iter()
            .map(|t| Term::new(t.coeff.clone(), t.mono.permuted(&map)))
            .collect();
        let order = target.order();
        terms.sort_by(|a, b| order.compare(&b.mono, &a.mono));
        Ok(Polynomial { ring: target.clone(), terms })
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Polynomial) -> Result<Option<Polynomial>, PolyError> {
        self.check_ring(divisor)?;
        let Some(lead) = divisor.leading_term() else {
            return Err(PolyError::DivisionByZero);
        };
        let order = self.ring.order();
        let inv = lead.coeff.recip().expect("nonzero");
        let mut rest = self.terms.clone();
        let mut quot: Vec<Term> = Vec::new();
        while let Some(t) = rest.first() {
            if !lead.mono.divides(&t.mono) {
                return Ok(None);
            }
            let m = lead.mono.quotient_of(&t.mono);
            let c = &t.coeff * &inv;
            rest = add_scaled(&rest, &-&c, &m, &divisor.terms, order);
            quot.push(Term::new(c, m));
        }
        // quotient terms are produced in strictly descending order
        Ok(Some(Polynomial { ring: self.ring.clone(), terms: quot }))
    }

    /// Substitutes rational values for some variables (by index).
    pub fn substitute(&self, values: &[(usize, Rational)]) -> Polynomial {
        let terms = self.terms.iter().map(|t| {
            let mut c = t.coeff.clone();
            let mut exps = t.mono.exponents().to_vec();
            for (v, val) in values {
                for _ in 0..exps[*v] {
                    c = &c * val;
                }
                exps[*v] = 0;
            }
            (c, Monomial::from_exponents(&exps))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// Replaces variable `v` by the polynomial `p`.
    pub fn compose_var(&self, v: usize, p: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_ring(p)?;
        let mut acc = Polynomial::zero(&self.ring);
        let mut powers: Vec<Polynomial> = vec![Polynomial::one(&self.ring)];
        for t in &self.terms {
            let e = t.mono.exponent(v) as usize;
            while powers.len() <= e {
                let next = powers.last().unwrap().try_mul(p)?;
                powers.push(next);
            }
            let mut exps = t.mono.exponents().to_vec();
            exps[v] = 0;
            let rest = powers[e].mul_term(&t.coeff, &Monomial::from_exponents(&exps));
            acc = acc.try_add(&rest)?;
        }
        Ok(acc)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let vars = self.ring.vars();
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let abs = t.coeff.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || t.mono.is_one() {
                factors.push(abs.to_string());
            }
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(vars[v].clone()),
                    _ => factors.push(format!("{}^{}", vars[v], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn ring() -> Ring {
        Ring::grevlex(&["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse_poly(s, &ring()).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(p("x + y").try_add(&p("-y")).unwrap(), p("x"));
        assert_eq!(p("x - y").try_mul(&p("x + y")).unwrap(), p("x^2 - y^2"));
        assert!(p("x^3 + 2").scale(&Rational::zero()).is_zero());
    }

    #[test]
    fn derivatives() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let q = |s: &str| parse_poly(s, &r).unwrap();
        assert_eq!(q("x^2*y").partial_derivative("x").unwrap(), q("2*x*y"));
        assert!(q("y^3").partial_derivative("x").unwrap().is_zero());
        assert!(matches!(
            q("x").partial_derivative("w"),
            Err(PolyError::UnknownVariable(_))
        ));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let other = Ring::grevlex(&["x", "y"]).unwrap();
        let q = parse_poly("x", &other).unwrap();
        assert!(matches!(p("x").try_add(&q), Err(PolyError::RingMismatch)));
    }

    #[test]
    fn exact_division() {
        let f = p("x^3 - y^3");
        let g = p("x - y");
        assert_eq!(f.div_exact(&g).unwrap().unwrap(), p("x^2 + x*y + y^2"));
        assert_eq!(p("x^2 + 1").div_exact(&g).unwrap(), None);
    }

    #[test]
    fn map_between_rings() {
        let lex = Ring::new(&["z", "y", "x"], MonomialOrder::Lex).unwrap();
        let f = p("x^2 + z*y + 1");
        let g = f.map_to_ring(&lex).unwrap();
        assert_eq!(g.to_string(), "z*y + x^2 + 1");
        assert_eq!(g.map_to_ring(&ring()).unwrap(), f);
        let small = Ring::grevlex(&["x"]).unwrap();
        assert!(f.map_to_ring(&small).is_err());
    }

    #[test]
    fn printing() {
        assert_eq!(p("-x*y + 3*z^2 - 1").to_string(), "-x*y + 3*z^2 - 1");
        assert_eq!(p("0").to_string(), "0");
        assert_eq!(p("x").scale(&Rational::new(-1, 2)).to_string(), "-1/2*x");
    }

    #[test]
    fn composition() {
        let f = p("x^2 + y");
        let g = f.compose_var(0, &p("y + 1")).unwrap();
        assert_eq!(g, p("y^2 + 3*y + 1"));
    }
}
