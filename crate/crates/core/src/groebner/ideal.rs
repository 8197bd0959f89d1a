use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::poly::{parse_poly, Polynomial, Ring};

use super::{store, GbConfig, GroebnerBasis, IdealError};

/// An ideal given by generators, with its reduced Gröbner basis under the
/// ring's order computed on first use and cached.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
    gb: OnceLock<Arc<GroebnerBasis>>,
}

impl Ideal {
    /// Zero generators are dropped.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Self, IdealError> {
        if gens.iter().any(|g| !g.ring().same(ring)) {
            return Err(IdealError::RingMismatch);
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            gb: OnceLock::new(),
        })
    }

    pub fn parse<S: AsRef<str>>(ring: &Ring, sources: &[S]) -> Result<Self, IdealError> {
        let gens = sources
            .iter()
            .map(|s| parse_poly(s.as_ref(), ring))
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(ring, gens)
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), gb: OnceLock::new() }
    }

    pub fn unit(ring: &Ring) -> Self {
        let one = Polynomial::one(ring);
        let gb = GroebnerBasis::from_trusted(ring, vec![one.clone()]);
        Self::with_basis(ring, vec![one], gb)
    }

    /// An ideal whose generators are known to be its reduced basis.
    pub(crate) fn with_basis(ring: &Ring, gens: Vec<Polynomial>, gb: GroebnerBasis) -> Self {
        let cell = OnceLock::new();
        let _ = cell.set(Arc::new(gb));
        Ideal { ring: ring.clone(), gens, gb: cell }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The reduced Gröbner basis under the ring's order.
    pub fn groebner_basis(&self, cfg: &GbConfig) -> Result<Arc<GroebnerBasis>, IdealError> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb.clone());
        }
        let gb = match store::load(cfg, &self.ring, &self.gens) {
            Some(gb) => gb,
            None => {
                let gb = GroebnerBasis::compute(&self.ring, &self.gens, cfg)?;
                store::save(cfg, &self.ring, &self.gens, &gb);
                gb
            }
        };
        // a concurrent reader may have won the race; both values are identical
        Ok(self.gb.get_or_init(|| Arc::new(gb)).clone())
    }

    /// The cached basis, if it has been computed.
    pub fn cached_basis(&self) -> Option<Arc<GroebnerBasis>> {
        self.gb.get().cloned()
    }

    /// The same ideal moved into `target` (variables matched by name).
    pub fn map_to_ring(&self, target: &Ring) -> Result<Ideal, IdealError> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.map_to_ring(target))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(target, gens)
    }

    /// The ideal generated by the generators of `self` and `other`.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal, IdealError> {
        if !self.ring.same(&other.ring) {
            return Err(IdealError::RingMismatch);
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    /// The ideal with one more generator.
    pub fn with_generator(&self, f: Polynomial) -> Result<Ideal, IdealError> {
        let mut gens = self.gens.clone();
        gens.push(f);
        Ideal::new(&self.ring, gens)
    }
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let gb = OnceLock::new();
        if let Some(b) = self.gb.get() {
            let _ = gb.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), gb }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}
