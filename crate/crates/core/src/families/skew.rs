use std::collections::HashMap;

use crate::groebner::Ideal;
use crate::poly::{indexed_name, Polynomial, Ring};

use super::matrix::{index_subsets, PolyMatrix};
use super::FamilyError;

/// A skew-symmetric matrix of polynomials, stored by its strict upper
/// triangle. Indices are 1-based.
#[derive(Clone, Debug)]
pub struct SkewMatrix {
    ring: Ring,
    size: usize,
    upper: Vec<Polynomial>,
}

impl SkewMatrix {
    /// Generic `m x m` skew matrix with variables `prefix_ij` for `i < j` in a
    /// fresh ring.
    pub fn generic(m: usize, prefix: &str) -> Result<Self, FamilyError> {
        if m == 0 || m > 64 {
            return Err(FamilyError::OutOfRange(format!("skew matrix size {m}")));
        }
        let names: Vec<String> = (1..=m)
            .flat_map(|i| (i + 1..=m).map(move |j| (i, j)))
            .map(|(i, j)| indexed_name(prefix, &[i, j], m))
            .collect();
        let ring = Ring::grevlex(&names)?;
        let upper = (0..names.len()).map(|v| Polynomial::var_at(&ring, v)).collect();
        Ok(SkewMatrix { ring, size: m, upper })
    }

    /// Builds a skew matrix from its upper entries `f(i, j)`, `i < j`.
    pub fn from_upper(ring: &Ring, size: usize, mut f: impl FnMut(usize, usize) -> Polynomial) -> Result<Self, FamilyError> {
        if size == 0 || size > 64 {
            return Err(FamilyError::OutOfRange(format!("skew matrix size {size}")));
        }
        let mut upper = Vec::with_capacity(size * (size - 1) / 2);
        for i in 1..=size {
            for j in i + 1..=size {
                let e = f(i, j);
                if !e.ring().same(ring) {
                    return Err(FamilyError::Ideal(crate::IdealError::RingMismatch));
                }
                upper.push(e);
            }
        }
        Ok(SkewMatrix { ring: ring.clone(), size, upper })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn size(&self) -> usize {
        self.size
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        // row-major position of (i, j), i < j, in the strict upper triangle
        let m = self.size;
        (i - 1) * m - (i - 1) * i / 2 + (j - i - 1)
    }

    pub fn entry(&self, i: usize, j: usize) -> Polynomial {
        assert!((1..=self.size).contains(&i) && (1..=self.size).contains(&j), "index out of range");
        match i.cmp(&j) {
            std::cmp::Ordering::Equal => Polynomial::zero(&self.ring),
            std::cmp::Ordering::Less => self.upper[self.slot(i, j)].clone(),
            std::cmp::Ordering::Greater => self.upper[self.slot(j, i)].neg(),
        }
    }

    pub fn as_matrix(&self) -> PolyMatrix {
        let entries = (1..=self.size)
            .flat_map(|i| (1..=self.size).map(move |j| (i, j)))
            .map(|(i, j)| self.entry(i, j))
            .collect();
        PolyMatrix::new(&self.ring, self.size, self.size, entries).expect("square")
    }

    /// Pfaffian of the principal submatrix on `rows` (1-based, any order is
    /// normalized to increasing); `pf(∅) = 1`.
    pub fn pfaffian(&self, rows: &[usize]) -> Result<Polynomial, FamilyError> {
        if rows.len() % 2 == 1 {
            return Err(FamilyError::OddSize(rows.len()));
        }
        let mut mask = 0u64;
        for &r in rows {
            if !(1..=self.size).contains(&r) {
                return Err(FamilyError::OutOfRange(format!("row {r} of a {}x{0} matrix", self.size)));
            }
            mask |= 1 << (r - 1);
        }
        Ok(self.pf_mask(mask, &mut HashMap::new()))
    }

    fn pf_mask(&self, mask: u64, memo: &mut HashMap<u64, Polynomial>) -> Polynomial {
        if mask == 0 {
            return Polynomial::one(&self.ring);
        }
        if let Some(p) = memo.get(&mask) {
            return p.clone();
        }
        let first = mask.trailing_zeros() as usize + 1;
        let rest = mask & (mask - 1);
        let mut acc = Polynomial::zero(&self.ring);
        let mut negate = false;
        let mut it = rest;
        while it != 0 {
            let bit = it & it.wrapping_neg();
            it &= it - 1;
            let l = bit.trailing_zeros() as usize + 1;
            let a = self.entry(first, l);
            if !a.is_zero() {
                let sub = self.pf_mask(rest & !bit, memo);
                let term = a.try_mul(&sub).expect("same ring");
                acc = if negate { acc.try_sub(&term) } else { acc.try_add(&term) }.expect("same ring");
            }
            negate = !negate;
        }
        memo.insert(mask, acc.clone());
        acc
    }

    /// `pf([1, m] \ {t})` for `t = 1..m`, for odd `m`.
    pub fn submaximal_pfaffians(&self) -> Result<Vec<Polynomial>, FamilyError> {
        if self.size % 2 == 0 {
            return Err(FamilyError::EvenSize(self.size));
        }
        (1..=self.size)
            .map(|t| {
                let rows: Vec<usize> = (1..=self.size).filter(|&i| i != t).collect();
                self.pfaffian(&rows)
            })
            .collect()
    }

    /// Pfaffians of all even principal submatrices whose index set contains
    /// `[1, prefix]`, ordered by size then lexicographically.
    pub fn pfaffians_containing_prefix(&self, prefix: usize) -> Result<Vec<Polynomial>, FamilyError> {
        if prefix > self.size {
            return Err(FamilyError::OutOfRange(format!("prefix {prefix} of size {}", self.size)));
        }
        let free = self.size - prefix;
        let mut out = Vec::new();
        let mut memo = HashMap::new();
        for extra in 0..=free {
            if (prefix + extra) % 2 == 1 {
                continue;
            }
            for pick in index_subsets(free, extra) {
                let mut mask = (1u64 << prefix) - 1;
                for p in pick {
                    mask |= 1 << (prefix + p - 1);
                }
                out.push(self.pf_mask(mask, &mut memo));
            }
        }
        Ok(out)
    }

    /// The ideal of Pfaffians of all even principal submatrices containing
    /// `[1, m - j]`, for `3 <= j <= m`.
    pub fn pfaffian_ideal_containing(&self, j: usize) -> Result<Ideal, FamilyError> {
        self.check_j(j)?;
        let gens = self.pfaffians_containing_prefix(self.size - j)?;
        Ok(Ideal::new(&self.ring, gens)?)
    }

    /// Colon generators `pf([1, m] \ {t})` for `t` in `[m - j + 1, m]`.
    pub fn residual_generators(&self, j: usize) -> Result<Vec<Polynomial>, FamilyError> {
        self.check_j(j)?;
        let sub = self.submaximal_pfaffians()?;
        Ok(sub[self.size - j..].to_vec())
    }

    fn check_j(&self, j: usize) -> Result<(), FamilyError> {
        if j < 3 || j > self.size {
            return Err(FamilyError::OutOfRange(format!("j = {j} outside [3, {}]", self.size)));
        }
        Ok(())
    }

    /// The copy of `self` with the south-east `j x j` block set to zero.
    pub fn zero_southeast(&self, j: usize) -> Result<SkewMatrix, FamilyError> {
        if j > self.size {
            return Err(FamilyError::OutOfRange(format!("block {j} of size {}", self.size)));
        }
        let cut = self.size - j;
        SkewMatrix::from_upper(&self.ring, self.size, |a, b| {
            if a > cut && b > cut {
                Polynomial::zero(&self.ring)
            } else {
                self.entry(a, b)
            }
        })
    }

    /// `T = [[A, B], [-Bᵗ, 0]]` where `B` is `m x j` with a zero top block and
    /// the `j x j` identity at the bottom.
    pub fn ku_bordered(&self, j: usize) -> Result<SkewMatrix, FamilyError> {
        let m = self.size;
        if j == 0 || j > m {
            return Err(FamilyError::OutOfRange(format!("j = {j} outside [1, {m}]")));
        }
        SkewMatrix::from_upper(&self.ring, m + j, |a, b| {
            if b <= m {
                self.entry(a, b)
            } else if a <= m {
                // B has its identity block on rows m - j + 1 .. m
                if a == m - j + (b - m) {
                    Polynomial::one(&self.ring)
                } else {
                    Polynomial::zero(&self.ring)
                }
            } else {
                Polynomial::zero(&self.ring)
            }
        })
    }

    /// Pfaffians of the even principal submatrices of [`SkewMatrix::ku_bordered`]
    /// whose index set contains `[1, m]`.
    pub fn bordered_pfaffians(&self, j: usize) -> Result<Vec<Polynomial>, FamilyError> {
        let t = self.ku_bordered(j)?;
        let m = self.size;
        let mut out = Vec::new();
        for extra in 0..=j {
            if (m + extra) % 2 == 1 {
                continue;
            }
            for pick in index_subsets(j, extra) {
                let rows: Vec<usize> = (1..=m).chain(pick.iter().map(|p| m + p)).collect();
                out.push(t.pfaffian(&rows)?);
            }
        }
        Ok(out)
    }
}
