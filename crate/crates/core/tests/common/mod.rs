//! Oracles shared by the acceptance and property suites. None of them use
//! Gröbner bases.
#![allow(dead_code)]

use rand::Rng;
use resint::schubert::Crystal;
use resint::{Monomial, Polynomial, Rational, Ring};

pub type Exps = Vec<u16>;

fn divides(a: &Exps, b: &Exps) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// Minimal generators of a monomial ideal, sorted.
pub fn minimalize(gens: &[Exps]) -> Vec<Exps> {
    let mut out: Vec<Exps> = Vec::new();
    for g in gens {
        if gens.iter().any(|h| h != g && divides(h, g)) || out.contains(g) {
            continue;
        }
        out.push(g.clone());
    }
    out.sort();
    out
}

/// `I : J` for monomial ideals: the intersection over `n ∈ J` of
/// `(m / gcd(m, n))`, intersections taken by pairwise lcm.
pub fn monomial_colon(i: &[Exps], j: &[Exps]) -> Vec<Exps> {
    let mut acc: Option<Vec<Exps>> = None;
    for n in j {
        let part: Vec<Exps> = i
            .iter()
            .map(|m| m.iter().zip(n).map(|(a, b)| a.saturating_sub(*b)).collect())
            .collect();
        let part = minimalize(&part);
        acc = Some(match acc {
            None => part,
            Some(prev) => {
                let mut lcms = Vec::new();
                for a in &prev {
                    for b in &part {
                        lcms.push(a.iter().zip(b).map(|(x, y)| *x.max(y)).collect());
                    }
                }
                minimalize(&lcms)
            }
        });
    }
    acc.expect("J has a generator")
}

pub fn monomial_poly(ring: &Ring, e: &Exps) -> Polynomial {
    Polynomial::from_terms(ring, [(Rational::one(), Monomial::from_exponents(e))])
}

pub fn random_exps<R: Rng>(rng: &mut R, vars: usize, max_deg: u16) -> Exps {
    loop {
        let e: Exps = (0..vars).map(|_| rng.gen_range(0..=max_deg)).collect();
        if e.iter().any(|&x| x > 0) {
            return e;
        }
    }
}

/// A random polynomial with small integer coefficients.
pub fn random_poly<R: Rng>(rng: &mut R, ring: &Ring, terms: usize, max_deg: u16) -> Polynomial {
    let n = ring.arity();
    Polynomial::from_terms(
        ring,
        (0..terms).map(|_| {
            let e: Exps = (0..n).map(|_| rng.gen_range(0..=max_deg)).collect();
            let c = rng.gen_range(-3i64..=3);
            (Rational::from_int(if c == 0 { 1 } else { c }), Monomial::from_exponents(&e))
        }),
    )
}

/// Checks `e_j f_j b = b` and `f_j e_j b = b` wherever defined.
pub fn partial_inverse_law(c: &Crystal) -> Result<(), String> {
    for b in c.elements() {
        for j in 1..=c.operator_count() {
            if let Some(fb) = c.f(j, b).unwrap() {
                if c.e(j, &fb).unwrap().as_ref() != Some(b) {
                    return Err(format!("e_{j} f_{j} {b} != {b}"));
                }
            }
            if let Some(eb) = c.e(j, b).unwrap() {
                if c.f(j, &eb).unwrap().as_ref() != Some(b) {
                    return Err(format!("f_{j} e_{j} {b} != {b}"));
                }
            }
        }
    }
    Ok(())
}

pub fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of signed terms in a polynomial listing written as a sum of
/// products, counted on the text.
pub fn listed_term_count(text: &str) -> usize {
    text.split(['+', '-']).filter(|t| !t.trim().is_empty()).count()
}

/// Text of the `poly NAME = ...` statement of a dataset, continuation
/// lines joined.
pub fn poly_source(dataset: &str, name: &str) -> String {
    let mut out = String::new();
    let mut inside = false;
    let head = format!("poly {name} =");
    for line in dataset.lines() {
        if line.starts_with(&head) {
            inside = true;
            out.push_str(&line[head.len()..]);
        } else if inside && line.starts_with(char::is_whitespace) && !line.trim().is_empty() {
            out.push_str(line);
        } else if inside {
            break;
        }
    }
    out
}
