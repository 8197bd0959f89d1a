//! The homogeneous coordinate ring of `Gr(2, n)` presented by Plücker
//! coordinates `p_st` (`s < t`) and the three-term quadratic relations.

use crate::groebner::Ideal;
use crate::poly::{indexed_name, Polynomial, Ring};

use super::matrix::index_subsets;
use super::FamilyError;

#[derive(Clone, Debug)]
pub struct PlueckerGr2 {
    n: usize,
    ring: Ring,
    relations: Vec<Polynomial>,
}

impl PlueckerGr2 {
    pub fn new(n: usize) -> Result<Self, FamilyError> {
        if n < 4 {
            return Err(FamilyError::OutOfRange(format!("Gr(2, n) needs n >= 4, got {n}")));
        }
        let names: Vec<String> = index_subsets(n, 2)
            .iter()
            .map(|st| indexed_name("p", st, n))
            .collect();
        let ring = Ring::grevlex(&names)?;
        let mut g = PlueckerGr2 { n, ring, relations: Vec::new() };
        let mut rel = Vec::new();
        for q in index_subsets(n, 4) {
            let (s, t, u, v) = (q[0], q[1], q[2], q[3]);
            let a = g.var(s, t).try_mul(&g.var(u, v))?;
            let b = g.var(s, u).try_mul(&g.var(t, v))?;
            let c = g.var(s, v).try_mul(&g.var(t, u))?;
            rel.push(a.try_sub(&b)?.try_add(&c)?);
        }
        g.relations = rel;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    /// The coordinate `p_st`; the indices may come in either order.
    pub fn var(&self, s: usize, t: usize) -> Polynomial {
        let (a, b) = if s < t { (s, t) } else { (t, s) };
        assert!(a >= 1 && b <= self.n && a < b, "p_{s}{t} is not a coordinate");
        let name = indexed_name("p", &[a, b], self.n);
        Polynomial::var(&self.ring, &name).expect("coordinate exists")
    }

    fn with_relations(&self, mut gens: Vec<Polynomial>) -> Result<Ideal, FamilyError> {
        gens.extend(self.relations.iter().cloned());
        Ok(Ideal::new(&self.ring, gens)?)
    }

    pub fn relation_ideal(&self) -> Result<Ideal, FamilyError> {
        self.with_relations(Vec::new())
    }

    fn check_j(&self, j: usize) -> Result<(), FamilyError> {
        if j == 0 || j >= self.n {
            return Err(FamilyError::OutOfRange(format!("need 1 <= j < {}, got {j}", self.n)));
        }
        Ok(())
    }

    /// `(p_in : 1 <= i < n)` plus the relations.
    pub fn i_ideal(&self) -> Result<Ideal, FamilyError> {
        self.with_relations((1..self.n).map(|i| self.var(i, self.n)).collect())
    }

    /// `(p_in : j <= i < n)` plus the relations.
    pub fn k_ideal(&self, j: usize) -> Result<Ideal, FamilyError> {
        self.check_j(j)?;
        self.with_relations((j..self.n).map(|i| self.var(i, self.n)).collect())
    }

    /// `(p_st : j <= s < t <= n)` plus the relations.
    pub fn i_j_ideal(&self, j: usize) -> Result<Ideal, FamilyError> {
        self.check_j(j)?;
        let gens = (j..=self.n)
            .flat_map(|s| (s + 1..=self.n).map(move |t| (s, t)))
            .map(|(s, t)| self.var(s, t))
            .collect();
        self.with_relations(gens)
    }
}
