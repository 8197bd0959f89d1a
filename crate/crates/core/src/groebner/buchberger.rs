//! Buchberger's algorithm with the Gebauer–Möller pair criteria and sugar
//! pair selection.
//!
//! Everything here works on raw term vectors in a single ring; the caller owns
//! ring bookkeeping.

use crate::poly::{add_scaled, Monomial, MonomialOrder, Term};
use crate::rational::Rational;

use super::{GbConfig, IdealError};

#[derive(Clone)]
pub(crate) struct Reducer {
    pub terms: Vec<Term>,
    pub mask: u64,
}

impl Reducer {
    pub fn new(terms: Vec<Term>) -> Self {
        let mask = terms[0].mono.support_mask();
        Reducer { terms, mask }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].mono
    }
}

/// Counts single-term reduction steps and watches coefficient growth
/// against configured ceilings.
pub(crate) struct Budget {
    pub used: u64,
    pub max: u64,
    pub max_bits: u64,
}

impl Budget {
    pub fn new(cfg: &GbConfig) -> Self {
        Budget { used: 0, max: cfg.max_reductions, max_bits: cfg.max_coeff_bits }
    }

    fn tick(&mut self, coeff: &Rational) -> Result<(), IdealError> {
        self.used += 1;
        if coeff.bits() > self.max_bits {
            return Err(IdealError::BudgetExceeded {
                what: "coefficient bits",
                limit: self.max_bits,
            });
        }
        if self.used > self.max {
            Err(IdealError::BudgetExceeded {
                what: "reduction steps",
                limit: self.max,
            })
        } else {
            Ok(())
        }
    }
}

fn find_reducer<'a>(
    reducers: &'a [Reducer],
    active: &[usize],
    m: &Monomial,
) -> Option<&'a Reducer> {
    let mask = m.support_mask();
    let mut best: Option<&Reducer> = None;
    for &i in active {
        let r = &reducers[i];
        if r.mask & !mask != 0 || !r.lm().divides(m) {
            continue;
        }
        if best.map_or(true, |b| r.terms.len() < b.terms.len()) {
            best = Some(r);
        }
    }
    best
}

/// Full normal form of `f` with respect to the monic polynomials `reducers[active]`.
///
/// With `tail_only`, the leading term of `f` is kept as is.
pub(crate) fn normal_form_terms(
    f: Vec<Term>,
    reducers: &[Reducer],
    active: &[usize],
    order: MonomialOrder,
    budget: &mut Budget,
    tail_only: bool,
) -> Result<Vec<Term>, IdealError> {
    let mut rem: Vec<Term> = Vec::new();
    let mut f = f;
    let mut start = 0;
    if tail_only && !f.is_empty() {
        rem.push(f[0].clone());
        start = 1;
    }
    while start < f.len() {
        let lead = &f[start];
        match find_reducer(reducers, active, &lead.mono) {
            None => {
                rem.push(lead.clone());
                start += 1;
            }
            Some(r) => {
                budget.tick(&lead.coeff)?;
                let m = r.lm().quotient_of(&lead.mono);
                let c = -&lead.coeff;
                f = add_scaled(&f[start + 1..], &c, &m, &r.terms[1..], order);
                start = 0;
            }
        }
    }
    Ok(rem)
}

fn make_monic(mut terms: Vec<Term>) -> Vec<Term> {
    if let Some(first) = terms.first() {
        if !first.coeff.is_one() {
            let inv = first.coeff.recip().expect("nonzero");
            for t in terms.iter_mut() {
                t.coeff = &t.coeff * &inv;
            }
        }
    }
    terms
}

fn spoly(a: &[Term], b: &[Term], lcm: &Monomial, order: MonomialOrder) -> Vec<Term> {
    let ma = a[0].mono.quotient_of(lcm);
    let mb = b[0].mono.quotient_of(lcm);
    let left: Vec<Term> = a[1..]
        .iter()
        .map(|t| Term::new(t.coeff.clone(), t.mono.mul(&ma)))
        .collect();
    add_scaled(&left, &-Rational::one(), &mb, &b[1..], order)
}

enum Item {
    Input(usize),
    Pair(usize, usize),
}

struct Pending {
    item: Item,
    lcm: Monomial,
    sugar: u32,
}

struct Entry {
    sugar: u32,
}

/// Computes the reduced Gröbner basis (monic, sorted ascending by leading
/// monomial) of the ideal generated by `input` under `order`.
pub(crate) fn buchberger(
    input: Vec<Vec<Term>>,
    order: MonomialOrder,
    cfg: &GbConfig,
) -> Result<Vec<Vec<Term>>, IdealError> {
    let mut budget = Budget::new(cfg);
    let input: Vec<Vec<Term>> = input.into_iter().filter(|t| !t.is_empty()).collect();
    let mut pending: Vec<Pending> = input
        .iter()
        .enumerate()
        .map(|(k, t)| Pending {
            item: Item::Input(k),
            lcm: t[0].mono.clone(),
            sugar: t.iter().map(|s| s.mono.degree()).max().unwrap_or(0),
        })
        .collect();

    let mut basis: Vec<Reducer> = Vec::new();
    let mut info: Vec<Entry> = Vec::new();
    let mut active: Vec<usize> = Vec::new();

    while !pending.is_empty() {
        if pending.len() > cfg.max_pairs {
            return Err(IdealError::BudgetExceeded {
                what: "pending pairs",
                limit: cfg.max_pairs as u64,
            });
        }
        let best = (0..pending.len())
            .min_by(|&x, &y| {
                let (a, b) = (&pending[x], &pending[y]);
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| order.compare(&a.lcm, &b.lcm))
                    .then_with(|| x.cmp(&y))
            })
            .expect("nonempty");
        let next = pending.swap_remove(best);
        let raw = match next.item {
            Item::Input(k) => input[k].clone(),
            Item::Pair(i, j) => spoly(&basis[i].terms, &basis[j].terms, &next.lcm, order),
        };
        let h = normal_form_terms(raw, &basis, &active, order, &mut budget, false)?;
        if h.is_empty() {
            continue;
        }
        let h = make_monic(h);
        if h[0].mono.is_one() {
            return Ok(vec![h]);
        }
        let idx = basis.len();
        let h_lm = h[0].mono.clone();
        basis.push(Reducer::new(h));
        info.push(Entry { sugar: next.sugar });
        update_pairs(&mut pending, &basis, &active, idx, &h_lm, order, &info);
        active.retain(|&g| !h_lm.divides(basis[g].lm()));
        active.push(idx);
    }

    // interreduce: leading monomials are already pairwise non-divisible
    let mut out: Vec<Vec<Term>> = Vec::with_capacity(active.len());
    for (pos, &g) in active.iter().enumerate() {
        let others: Vec<usize> = active
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != pos)
            .map(|(_, &i)| i)
            .collect();
        let t = normal_form_terms(basis[g].terms.clone(), &basis, &others, order, &mut budget, true)?;
        out.push(make_monic(t));
    }
    out.sort_by(|a, b| order.compare(&a[0].mono, &b[0].mono));
    Ok(out)
}

/// Gebauer–Möller update for the new basis element `h = basis[idx]`.
fn update_pairs(
    pending: &mut Vec<Pending>,
    basis: &[Reducer],
    active: &[usize],
    idx: usize,
    h_lm: &Monomial,
    order: MonomialOrder,
    info: &[Entry],
) {
    // chain criterion on existing pairs
    pending.retain(|p| match p.item {
        Item::Input(_) => true,
        Item::Pair(a, b) => {
            if !h_lm.divides(&p.lcm) {
                return true;
            }
            let la = basis[a].lm().lcm(h_lm);
            let lb = basis[b].lm().lcm(h_lm);
            la == p.lcm || lb == p.lcm
        }
    });

    struct Cand {
        j: usize,
        lcm: Monomial,
        coprime: bool,
        keep: bool,
    }
    let mut cands: Vec<Cand> = active
        .iter()
        .map(|&j| {
            let lm = basis[j].lm();
            Cand {
                j,
                lcm: lm.lcm(h_lm),
                coprime: lm.is_coprime(h_lm),
                keep: true,
            }
        })
        .collect();

    // criterion M: drop pairs whose lcm is properly divisible by another new lcm
    for a in 0..cands.len() {
        for b in 0..cands.len() {
            if a != b && cands[b].lcm.divides(&cands[a].lcm) && cands[b].lcm != cands[a].lcm {
                cands[a].keep = false;
                break;
            }
        }
    }
    // criterion F plus product criterion: one representative per lcm, none if any is coprime
    cands.sort_by(|a, b| order.compare(&a.lcm, &b.lcm).then(a.j.cmp(&b.j)));
    let mut i = 0;
    while i < cands.len() {
        let mut k = i;
        while k < cands.len() && cands[k].lcm == cands[i].lcm {
            k += 1;
        }
        let any_coprime = cands[i..k].iter().any(|c| c.coprime);
        let survivor = cands[i..k].iter().position(|c| c.keep);
        for (off, c) in cands[i..k].iter_mut().enumerate() {
            c.keep = !any_coprime && Some(off) == survivor;
        }
        i = k;
    }
    let h_shift = info[idx].sugar as i64 - h_lm.degree() as i64;
    for c in cands.into_iter().filter(|c| c.keep) {
        let g_shift = info[c.j].sugar as i64 - basis[c.j].lm().degree() as i64;
        let sugar = (h_shift.max(g_shift) + c.lcm.degree() as i64).max(0) as u32;
        pending.push(Pending {
            item: Item::Pair(c.j, idx),
            lcm: c.lcm,
            sugar,
        });
    }
}
