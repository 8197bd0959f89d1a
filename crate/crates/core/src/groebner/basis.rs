use std::fmt;

use crate::poly::{MonomialOrder, Monomial, Polynomial, Ring, Term};
use crate::rational::Rational;

use super::buchberger::{buchberger, normal_form_terms, Budget, Reducer};
use super::{GbConfig, IdealError};

/// A reduced Gröbner basis: monic elements sorted ascending by leading
/// monomial under the ring's order.
#[derive(Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    elements: Vec<Polynomial>,
    reducers: Vec<Reducer>,
}

fn unlimited() -> Budget {
    Budget { used: 0, max: u64::MAX, max_bits: u64::MAX }
}

fn monic_terms(p: &Polynomial) -> Vec<Term> {
    p.monic().terms().to_vec()
}

impl GroebnerBasis {
    /// Computes the reduced basis of the ideal generated by `gens` in `ring`.
    pub fn compute(ring: &Ring, gens: &[Polynomial], cfg: &GbConfig) -> Result<Self, IdealError> {
        let mut input = Vec::with_capacity(gens.len());
        for g in gens {
            if !g.ring().same(ring) {
                return Err(IdealError::RingMismatch);
            }
            if !g.is_zero() {
                input.push(g.terms().to_vec());
            }
        }
        let out = buchberger(input, ring.order(), cfg)?;
        Ok(Self::from_reduced_terms(ring, out))
    }

    fn from_reduced_terms(ring: &Ring, terms: Vec<Vec<Term>>) -> Self {
        let elements: Vec<Polynomial> = terms
            .into_iter()
            .map(|t| Polynomial::from_sorted(ring, t))
            .collect();
        let reducers = elements.iter().map(|e| Reducer::new(e.terms().to_vec())).collect();
        GroebnerBasis { ring: ring.clone(), elements, reducers }
    }

    /// Wraps polynomials already known to form the reduced basis of their ideal.
    ///
    /// Used when a basis is recovered from a cache or an elimination; the
    /// elements are normalized (monic, sorted) but not re-verified.
    pub(crate) fn from_trusted(ring: &Ring, mut elements: Vec<Polynomial>) -> Self {
        let order = ring.order();
        elements.retain(|e| !e.is_zero());
        let mut terms: Vec<Vec<Term>> = elements.iter().map(monic_terms).collect();
        terms.sort_by(|a, b| order.compare(&a[0].mono, &b[0].mono));
        Self::from_reduced_terms(ring, terms)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> MonomialOrder {
        self.ring.order()
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// True when the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.elements.len() == 1 && self.elements[0].is_unit()
    }

    pub fn leading_monomials(&self) -> Vec<&Monomial> {
        self.elements
            .iter()
            .filter_map(|e| e.leading_monomial())
            .collect()
    }

    /// Normal form of `f` modulo the basis.
    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial, IdealError> {
        if !f.ring().same(&self.ring) {
            return Err(IdealError::RingMismatch);
        }
        let active: Vec<usize> = (0..self.reducers.len()).collect();
        let r = normal_form_terms(
            f.terms().to_vec(),
            &self.reducers,
            &active,
            self.ring.order(),
            &mut unlimited(),
            false,
        )?;
        Ok(Polynomial::from_sorted(&self.ring, r))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, IdealError> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Buchberger's criterion: every S-polynomial reduces to zero.
    pub fn verify_certificate(&self) -> bool {
        let order = self.ring.order();
        let n = self.elements.len();
        for i in 0..n {
            for j in i + 1..n {
                let (a, b) = (&self.elements[i], &self.elements[j]);
                let (la, lb) = (a.leading_monomial().unwrap(), b.leading_monomial().unwrap());
                if la.is_coprime(lb) {
                    continue;
                }
                let l = la.lcm(lb);
                let s = a
                    .mul_term(&Rational::one(), &la.quotient_of(&l))
                    .try_sub(&b.mul_term(&Rational::one(), &lb.quotient_of(&l)))
                    .expect("same ring");
                debug_assert!(s.terms().iter().all(|t| order.compare(&t.mono, &l).is_lt()));
                match self.reduce(&s) {
                    Ok(r) if r.is_zero() => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// Monic, and no monomial of an element is divisible by another element's
    /// leading monomial.
    pub fn is_reduced(&self) -> bool {
        let lms = self.leading_monomials();
        self.elements.iter().enumerate().all(|(i, e)| {
            e.leading_coefficient().is_some_and(|c| c.is_one())
                && e.terms().iter().all(|t| {
                    lms.iter()
                        .enumerate()
                        .all(|(j, l)| j == i || !l.divides(&t.mono))
                })
        })
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same(&other.ring) && self.elements == other.elements
    }
}

impl Eq for GroebnerBasis {}

impl fmt::Debug for GroebnerBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.elements.iter()).finish()
    }
}

/// Remainder of `f` under multivariate division by `basis` (any generating
/// set, not necessarily a Gröbner basis), using the ring's order.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial, IdealError> {
    let ring = f.ring();
    let mut reducers = Vec::with_capacity(basis.len());
    for b in basis {
        if !b.ring().same(ring) {
            return Err(IdealError::RingMismatch);
        }
        if !b.is_zero() {
            reducers.push(Reducer::new(monic_terms(b)));
        }
    }
    let active: Vec<usize> = (0..reducers.len()).collect();
    let r = normal_form_terms(f.terms().to_vec(), &reducers, &active, ring.order(), &mut unlimited(), false)?;
    Ok(Polynomial::from_sorted(ring, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    fn polys(ring: &Ring, src: &[&str]) -> Vec<Polynomial> {
        src.iter().map(|s| parse_poly(s, ring).unwrap()).collect()
    }

    #[test]
    fn normal_form_examples() {
        let r = Ring::grevlex(&["x", "y"]).unwrap();
        let b = polys(&r, &["x"]);
        assert!(normal_form(&parse_poly("x^2", &r).unwrap(), &b).unwrap().is_zero());
        assert_eq!(
            normal_form(&parse_poly("x + y", &r).unwrap(), &b).unwrap(),
            parse_poly("y", &r).unwrap()
        );
        let p = Ring::grevlex(&["p_12", "p_13", "p_14", "p_23", "p_24", "p_34"]).unwrap();
        let rel = polys(&p, &["p_12*p_34 - p_13*p_24 + p_14*p_23"]);
        let gb = GroebnerBasis::compute(&p, &rel, &GbConfig::default()).unwrap();
        assert!(gb.reduce(&rel[0]).unwrap().is_zero());
    }

    #[test]
    fn small_bases() {
        let r = Ring::new(&["x", "y"], MonomialOrder::Lex).unwrap();
        let gb = GroebnerBasis::compute(&r, &polys(&r, &["x + y", "y"]), &GbConfig::default()).unwrap();
        assert_eq!(gb.elements(), polys(&r, &["y", "x"]).as_slice());
        let g = Ring::grevlex(&["x", "y"]).unwrap();
        let gb = GroebnerBasis::compute(&g, &polys(&g, &["x*y", "y^2"]), &GbConfig::default()).unwrap();
        assert_eq!(gb.elements(), polys(&g, &["y^2", "x*y"]).as_slice());
        let gb = GroebnerBasis::compute(&g, &polys(&g, &["x^2 - 1", "x - 1"]), &GbConfig::default()).unwrap();
        assert_eq!(gb.elements(), polys(&g, &["x - 1"]).as_slice());
        let gb = GroebnerBasis::compute(&g, &polys(&g, &["x", "x + 1"]), &GbConfig::default()).unwrap();
        assert!(gb.is_unit());
        let gb = GroebnerBasis::compute(&g, &[], &GbConfig::default()).unwrap();
        assert!(gb.is_empty());
    }

    #[test]
    fn cyclic_four_certificate() {
        let r = Ring::grevlex(&["a", "b", "c", "d"]).unwrap();
        let gens = polys(
            &r,
            &[
                "a + b + c + d",
                "a*b + b*c + c*d + d*a",
                "a*b*c + b*c*d + c*d*a + d*a*b",
                "a*b*c*d - 1",
            ],
        );
        let gb = GroebnerBasis::compute(&r, &gens, &GbConfig::default()).unwrap();
        assert!(gb.verify_certificate());
        assert!(gb.is_reduced());
        for g in &gens {
            assert!(gb.contains(g).unwrap());
        }
    }

    #[test]
    fn budget_is_enforced() {
        let r = Ring::grevlex(&["a", "b", "c", "d"]).unwrap();
        let gens = polys(&r, &["a + b + c + d", "a*b + b*c + c*d + d*a", "a*b*c*d - 1"]);
        let cfg = GbConfig::default().with_max_reductions(3);
        assert!(matches!(
            GroebnerBasis::compute(&r, &gens, &cfg),
            Err(IdealError::BudgetExceeded { .. })
        ));
        let cfg = GbConfig::default().with_max_coeff_bits(8);
        assert!(matches!(
            GroebnerBasis::compute(&r, &polys(&r, &["1000*a^2 + 7*b", "999*a*b - 5*c^2"]), &cfg),
            Err(IdealError::BudgetExceeded { what: "coefficient bits", .. })
        ));
    }
}
