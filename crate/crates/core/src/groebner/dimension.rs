use super::{GbConfig, Ideal, IdealError};

/// Codimension of a proper ideal: the ring arity minus the largest set of
/// variables containing the support of no leading monomial of the basis.
///
/// Equivalently, the smallest set of variables meeting every such support.
pub fn codim(ideal: &Ideal, cfg: &GbConfig) -> Result<usize, IdealError> {
    let arity = ideal.ring().arity();
    if arity > 128 {
        return Err(IdealError::TooManyVariables(arity));
    }
    let gb = ideal.groebner_basis(cfg)?;
    if gb.is_unit() {
        return Err(IdealError::UnitIdeal);
    }
    let supports: Vec<u128> = gb
        .leading_monomials()
        .iter()
        .map(|m| m.support().fold(0u128, |acc, v| acc | (1u128 << v)))
        .collect();
    Ok(min_hitting_set(&supports))
}

/// Size of the smallest variable set meeting every (nonempty) support mask.
pub fn min_hitting_set(supports: &[u128]) -> usize {
    let mut sets: Vec<u128> = supports.to_vec();
    sets.sort_by_key(|s| s.count_ones());
    sets.dedup();
    // only inclusion-minimal supports constrain the answer
    let mut minimal: Vec<u128> = Vec::with_capacity(sets.len());
    for s in sets {
        assert!(s != 0, "a constant leading monomial has no support");
        if !minimal.iter().any(|m| m & s == *m) {
            minimal.push(s);
        }
    }
    let mut best = minimal.iter().fold(0u128, |a, s| a | s).count_ones() as usize;
    search(&minimal, 0, 0, &mut best);
    best
}

fn search(sets: &[u128], chosen: u128, size: usize, best: &mut usize) {
    if size >= *best {
        return;
    }
    // branch on the unhit set with the fewest variables
    let mut pick: Option<u128> = None;
    let mut disjoint: Vec<u128> = Vec::new();
    for &s in sets {
        if s & chosen != 0 {
            continue;
        }
        if pick.map_or(true, |p| s.count_ones() < p.count_ones()) {
            pick = Some(s);
        }
        if disjoint.iter().all(|d| d & s == 0) {
            disjoint.push(s);
        }
    }
    let Some(pick) = pick else {
        *best = size;
        return;
    };
    // pairwise disjoint unhit sets each need their own variable
    if size + disjoint.len() >= *best {
        return;
    }
    let mut rest = pick;
    while rest != 0 {
        let bit = rest & rest.wrapping_neg();
        rest &= rest - 1;
        search(sets, chosen | bit, size + 1, best);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn brute(supports: &[u128], n: usize) -> usize {
        (0u32..1 << n)
            .filter(|c| supports.iter().all(|s| s & (*c as u128) != 0))
            .map(|c| c.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn hitting_set_against_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(1..=10);
            let k = rng.gen_range(1..=8);
            let sets: Vec<u128> = (0..k)
                .map(|_| loop {
                    let s = rng.gen_range(1u128..(1 << n));
                    if s.count_ones() <= 3 {
                        break s;
                    }
                })
                .collect();
            assert_eq!(min_hitting_set(&sets), brute(&sets, n), "{sets:?}");
        }
    }

    #[test]
    fn codim_examples() {
        let r = Ring::grevlex(&["a", "b", "c", "d", "e"]).unwrap();
        let cfg = GbConfig::default();
        assert_eq!(codim(&Ideal::parse(&r, &["a", "b", "c"]).unwrap(), &cfg).unwrap(), 3);
        assert_eq!(codim(&Ideal::zero(&r), &cfg).unwrap(), 0);
        assert_eq!(codim(&Ideal::parse(&r, &["a*b", "a*c"]).unwrap(), &cfg).unwrap(), 1);
        assert!(matches!(
            codim(&Ideal::parse(&r, &["a", "a + 1"]).unwrap(), &cfg),
            Err(IdealError::UnitIdeal)
        ));
    }
}
