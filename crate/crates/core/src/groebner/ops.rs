use crate::poly::{MonomialOrder, Polynomial, Ring};

use super::{GbConfig, GroebnerBasis, Ideal, IdealError};

fn same_ring(a: &Ideal, b: &Ideal) -> Result<(), IdealError> {
    if a.ring().same(b.ring()) {
        Ok(())
    } else {
        Err(IdealError::RingMismatch)
    }
}

pub fn is_member(f: &Polynomial, ideal: &Ideal, cfg: &GbConfig) -> Result<bool, IdealError> {
    if !f.ring().same(ideal.ring()) {
        return Err(IdealError::RingMismatch);
    }
    ideal.groebner_basis(cfg)?.contains(f)
}

/// Compares reduced bases under the shared ring's order.
pub fn ideals_equal(a: &Ideal, b: &Ideal, cfg: &GbConfig) -> Result<bool, IdealError> {
    same_ring(a, b)?;
    Ok(a.groebner_basis(cfg)?.elements() == b.groebner_basis(cfg)?.elements())
}

/// Computes a basis in `big` under block elimination and returns the elements
/// free of the first `front` variables, moved back into `ring`.
fn eliminate_in(
    ring: &Ring,
    big: &Ring,
    front: usize,
    gens: Vec<Polynomial>,
    cfg: &GbConfig,
) -> Result<Ideal, IdealError> {
    let gb = GroebnerBasis::compute(big, &gens, cfg)?;
    let kept = gb
        .elements()
        .iter()
        .filter(|e| {
            e.terms()
                .iter()
                .all(|t| t.mono.exponents()[..front].iter().all(|&x| x == 0))
        })
        .map(|e| e.map_to_ring(ring))
        .collect::<Result<Vec<_>, _>>()?;
    // the tail block is ordered by grevlex in the original variable order
    if ring.order() == MonomialOrder::Grevlex {
        let basis = GroebnerBasis::from_trusted(ring, kept.clone());
        Ok(Ideal::with_basis(ring, kept, basis))
    } else {
        Ideal::new(ring, kept)
    }
}

/// Generators of `I ∩ k[remaining variables]`, as an ideal of the same ring.
pub fn eliminate<S: AsRef<str>>(
    ideal: &Ideal,
    front: &[S],
    cfg: &GbConfig,
) -> Result<Ideal, IdealError> {
    let ring = ideal.ring();
    let mut is_front = vec![false; ring.arity()];
    for name in front {
        is_front[ring.require_var(name.as_ref())?] = true;
    }
    let count = is_front.iter().filter(|&&b| b).count();
    if count == 0 {
        let gb = ideal.groebner_basis(cfg)?;
        return Ok(Ideal::with_basis(ring, gb.elements().to_vec(), (*gb).clone()));
    }
    let mut vars: Vec<&str> = Vec::with_capacity(ring.arity());
    vars.extend(ring.vars().iter().zip(&is_front).filter(|(_, f)| **f).map(|(v, _)| v.as_str()));
    vars.extend(ring.vars().iter().zip(&is_front).filter(|(_, f)| !**f).map(|(v, _)| v.as_str()));
    let big = Ring::new(&vars, MonomialOrder::BlockElim(count))?;
    let gens = ideal
        .generators()
        .iter()
        .map(|g| g.map_to_ring(&big))
        .collect::<Result<Vec<_>, _>>()?;
    eliminate_in(ring, &big, count, gens, cfg)
}

pub fn intersect(a: &Ideal, b: &Ideal, cfg: &GbConfig) -> Result<Ideal, IdealError> {
    same_ring(a, b)?;
    let ring = a.ring();
    if a.is_zero() || b.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    if a.groebner_basis(cfg)?.is_unit() {
        return Ok(b.clone());
    }
    if b.groebner_basis(cfg)?.is_unit() {
        return Ok(a.clone());
    }
    let t = ring.fresh_name("t");
    let mut vars: Vec<String> = vec![t.clone()];
    vars.extend(ring.vars().iter().cloned());
    let big = Ring::new(&vars, MonomialOrder::BlockElim(1))?;
    let tv = Polynomial::var_at(&big, 0);
    let one_minus_t = Polynomial::one(&big).try_sub(&tv)?;
    let mut gens = Vec::with_capacity(a.generators().len() + b.generators().len());
    for g in a.generators() {
        gens.push(g.map_to_ring(&big)?.try_mul(&tv)?);
    }
    for g in b.generators() {
        gens.push(g.map_to_ring(&big)?.try_mul(&one_minus_t)?);
    }
    eliminate_in(ring, &big, 1, gens, cfg)
}

/// Intersection of a nonempty list of ideals of one ring.
pub fn intersect_all(ideals: &[Ideal], cfg: &GbConfig) -> Result<Ideal, IdealError> {
    let (first, rest) = ideals.split_first().expect("nonempty list of ideals");
    let mut acc = first.clone();
    for i in rest {
        acc = intersect(&acc, i, cfg)?;
    }
    Ok(acc)
}

/// `I : f`, computed as `(I ∩ (f)) / f`.
pub fn quotient_by_poly(ideal: &Ideal, f: &Polynomial, cfg: &GbConfig) -> Result<Ideal, IdealError> {
    let ring = ideal.ring();
    if !f.ring().same(ring) {
        return Err(IdealError::RingMismatch);
    }
    if f.is_zero() {
        return Err(IdealError::ZeroIdealDivisor);
    }
    if ideal.groebner_basis(cfg)?.contains(f)? {
        return Ok(Ideal::unit(ring));
    }
    if f.is_unit() {
        return Ok(ideal.clone());
    }
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let meet = intersect(ideal, &principal, cfg)?;
    let mut gens = Vec::with_capacity(meet.generators().len());
    for g in meet.generators() {
        match g.div_exact(f)? {
            Some(q) => gens.push(q),
            None => unreachable!("element of (f) not divisible by f"),
        }
    }
    Ideal::new(ring, gens)
}

/// `I : J = ∩_g (I : g)` over the generators `g` of `J`.
pub fn quotient(ideal: &Ideal, by: &Ideal, cfg: &GbConfig) -> Result<Ideal, IdealError> {
    same_ring(ideal, by)?;
    if by.is_zero() {
        return Err(IdealError::ZeroIdealDivisor);
    }
    let gb = ideal.groebner_basis(cfg)?;
    let mut parts = Vec::new();
    for g in by.generators() {
        if gb.contains(g)? {
            continue;
        }
        parts.push(quotient_by_poly(ideal, g, cfg)?);
    }
    if parts.is_empty() {
        return Ok(Ideal::unit(ideal.ring()));
    }
    intersect_all(&parts, cfg)
}

/// A minimal generating subset of the given generators of a homogeneous ideal.
///
/// Generators are scanned by ascending degree and kept when they are not in
/// the ideal of those kept so far.
pub fn min_generators(ideal: &Ideal, cfg: &GbConfig) -> Result<Vec<Polynomial>, IdealError> {
    if !ideal.is_homogeneous() {
        return Err(IdealError::NonHomogeneous);
    }
    let ring = ideal.ring();
    let mut gens: Vec<&Polynomial> = ideal.generators().iter().collect();
    gens.sort_by_key(|g| g.total_degree());
    let mut kept: Vec<Polynomial> = Vec::new();
    for g in gens {
        let partial = GroebnerBasis::compute(ring, &kept, cfg)?;
        if !partial.contains(g)? {
            kept.push(g.clone());
        }
    }
    Ok(kept)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring() -> Ring {
        Ring::grevlex(&["x", "y", "z"]).unwrap()
    }

    fn ideal(ring: &Ring, src: &[&str]) -> Ideal {
        Ideal::parse(ring, src).unwrap()
    }

    fn cfg() -> GbConfig {
        GbConfig::default()
    }

    fn eq(a: &Ideal, b: &Ideal) -> bool {
        ideals_equal(a, b, &cfg()).unwrap()
    }

    #[test]
    fn membership_and_equality() {
        let r = ring();
        let x = ideal(&r, &["x"]);
        assert!(is_member(&crate::parse_poly("x*y", &r).unwrap(), &x, &cfg()).unwrap());
        assert!(!is_member(&crate::parse_poly("y", &r).unwrap(), &x, &cfg()).unwrap());
        assert!(eq(&ideal(&r, &["x", "y"]), &ideal(&r, &["y", "x + y"])));
        assert!(!eq(&ideal(&r, &["x"]), &ideal(&r, &["x^2"])));
    }

    #[test]
    fn elimination_examples() {
        let r = Ring::grevlex(&["t", "x", "y"]).unwrap();
        let e = eliminate(&ideal(&r, &["t*x - 1", "t*y"]), &["t"], &cfg()).unwrap();
        assert!(eq(&e, &ideal(&r, &["y"])));
        let e = eliminate(&ideal(&r, &["x"]), &["y"], &cfg()).unwrap();
        assert!(eq(&e, &ideal(&r, &["x"])));
        let e = eliminate(&ideal(&r, &["t - x*y"]), &["t"], &cfg()).unwrap();
        assert!(e.is_zero());
        assert!(eliminate(&ideal(&r, &["x"]), &["w"], &cfg()).is_err());
    }

    #[test]
    fn intersection_examples() {
        let r = ring();
        let i = intersect(&ideal(&r, &["x"]), &ideal(&r, &["y"]), &cfg()).unwrap();
        assert!(eq(&i, &ideal(&r, &["x*y"])));
        let i = intersect(&ideal(&r, &["x"]), &ideal(&r, &["x"]), &cfg()).unwrap();
        assert!(eq(&i, &ideal(&r, &["x"])));
        let i = intersect(&ideal(&r, &["x^2", "y"]), &ideal(&r, &["x", "y^2"]), &cfg()).unwrap();
        assert!(eq(&i, &ideal(&r, &["x^2", "x*y", "y^2"])));
    }

    #[test]
    fn quotient_examples() {
        let r = ring();
        let q = quotient(&ideal(&r, &["x*y"]), &ideal(&r, &["y"]), &cfg()).unwrap();
        assert!(eq(&q, &ideal(&r, &["x"])));
        let q = quotient(&ideal(&r, &["x^2", "x*y"]), &ideal(&r, &["x"]), &cfg()).unwrap();
        assert!(eq(&q, &ideal(&r, &["x", "y"])));
        let q = quotient(&ideal(&r, &["x"]), &ideal(&r, &["x"]), &cfg()).unwrap();
        assert!(q.groebner_basis(&cfg()).unwrap().is_unit());
        assert!(matches!(
            quotient(&ideal(&r, &["x"]), &Ideal::zero(&r), &cfg()),
            Err(IdealError::ZeroIdealDivisor)
        ));
        let other = Ring::grevlex(&["x", "y"]).unwrap();
        assert!(matches!(
            quotient(&ideal(&r, &["x"]), &ideal(&other, &["x"]), &cfg()),
            Err(IdealError::RingMismatch)
        ));
    }

    #[test]
    fn minimal_generators() {
        let r = ring();
        let m = min_generators(&ideal(&r, &["x*y", "x"]), &cfg()).unwrap();
        assert_eq!(m, vec![crate::parse_poly("x", &r).unwrap()]);
        let m = min_generators(&ideal(&r, &["x", "y", "x + y"]), &cfg()).unwrap();
        assert_eq!(m.len(), 2);
        assert!(matches!(
            min_generators(&ideal(&r, &["x + 1"]), &cfg()),
            Err(IdealError::NonHomogeneous)
        ));
    }
}
