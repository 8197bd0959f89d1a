//! Schubert ideals on the opposite big cell of `Gr(k, n)`.
//!
//! The cell is `M = [Y | I_k]` with `Y` a `k x (n-k)` block of variables
//! `y_ij`; the Plücker coordinate `p_L` is the minor of `M` on the columns
//! `L`. The ideal of `X^K` is generated by the `p_L` with `L` not
//! componentwise above `K`.

use crate::groebner::Ideal;
use crate::poly::{Polynomial, Ring};

use super::matrix::{index_subsets, PolyMatrix};
use super::FamilyError;

#[derive(Clone, Debug)]
pub struct BigCell {
    k: usize,
    n: usize,
    matrix: PolyMatrix,
}

/// Which submatrix describes the left-arm ideals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum LeftArmReading {
    /// Generated by the Plücker coordinates vanishing on the Schubert variety.
    #[default]
    Schubert,
    /// Maximal minors of the last `k - s + 1` rows of `Y`.
    LastRows,
}

impl BigCell {
    pub fn new(k: usize, n: usize) -> Result<Self, FamilyError> {
        if k == 0 || 2 * k > n {
            return Err(FamilyError::OutOfRange(format!("need 1 <= k <= n - k, got k = {k}, n = {n}")));
        }
        let y = PolyMatrix::generic(k, n - k, "y")?;
        let ring = y.ring().clone();
        let id_entries = (0..k * k)
            .map(|i| if i % (k + 1) == 0 { Polynomial::one(&ring) } else { Polynomial::zero(&ring) })
            .collect();
        let id = PolyMatrix::new(&ring, k, k, id_entries)?;
        Ok(BigCell { k, n, matrix: y.hconcat(&id)? })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ring(&self) -> &Ring {
        self.matrix.ring()
    }

    pub fn matrix(&self) -> &PolyMatrix {
        &self.matrix
    }

    /// The `k x (n-k)` variable block.
    pub fn y_block(&self) -> PolyMatrix {
        let rows: Vec<usize> = (1..=self.k).collect();
        let cols: Vec<usize> = (1..=self.n - self.k).collect();
        self.matrix.submatrix(&rows, &cols)
    }

    fn check_subset(&self, cols: &[usize]) -> Result<(), FamilyError> {
        if cols.len() != self.k
            || cols.windows(2).any(|w| w[0] >= w[1])
            || cols.iter().any(|&c| c == 0 || c > self.n)
        {
            return Err(FamilyError::OutOfRange(format!(
                "{cols:?} is not an increasing {}-subset of [1, {}]",
                self.k, self.n
            )));
        }
        Ok(())
    }

    pub fn pluecker(&self, cols: &[usize]) -> Result<Polynomial, FamilyError> {
        self.check_subset(cols)?;
        let rows: Vec<usize> = (1..=self.k).collect();
        Ok(self.matrix.minor(&rows, cols))
    }

    /// Generators of the ideal of `X^K` on the big cell: the nonzero `p_L`
    /// with `L` not componentwise `>= K`, without repetitions up to sign.
    pub fn schubert_generators(&self, subset: &[usize]) -> Result<Vec<Polynomial>, FamilyError> {
        self.check_subset(subset)?;
        let mut out: Vec<Polynomial> = Vec::new();
        for l in index_subsets(self.n, self.k) {
            if l.iter().zip(subset).all(|(a, b)| a >= b) {
                continue;
            }
            let p = self.pluecker(&l)?;
            if p.is_zero() || out.iter().any(|q| *q == p || *q == p.neg()) {
                continue;
            }
            out.push(p);
        }
        Ok(out)
    }

    pub fn schubert_ideal(&self, subset: &[usize]) -> Result<Ideal, FamilyError> {
        Ok(Ideal::new(self.ring(), self.schubert_generators(subset)?)?)
    }

    /// `{1, …, k-1, k+s}` for `0 <= s <= n - k`.
    pub fn left_index(&self, s: usize) -> Result<Vec<usize>, FamilyError> {
        if s > self.n - self.k {
            return Err(FamilyError::OutOfRange(format!("left arm s = {s} > {}", self.n - self.k)));
        }
        let mut v: Vec<usize> = (1..self.k).collect();
        v.push(self.k + s);
        Ok(v)
    }

    /// `[1, k+1] \ {k+1-s}` for `0 <= s <= k`.
    pub fn right_index(&self, s: usize) -> Result<Vec<usize>, FamilyError> {
        if s > self.k {
            return Err(FamilyError::OutOfRange(format!("right arm s = {s} > {}", self.k)));
        }
        Ok((1..=self.k + 1).filter(|&i| i != self.k + 1 - s).collect())
    }

    pub fn left_ideal(&self, s: usize, reading: LeftArmReading) -> Result<Ideal, FamilyError> {
        let idx = self.left_index(s)?;
        match reading {
            LeftArmReading::Schubert => self.schubert_ideal(&idx),
            LeftArmReading::LastRows => {
                if s > self.k {
                    return Err(FamilyError::OutOfRange(format!("last-rows reading needs s <= k = {}", self.k)));
                }
                let y = self.y_block();
                // at s = 0 the row count k + 1 exceeds k; all rows are used
                let size = (self.k + 1 - s).min(self.k);
                let rows: Vec<usize> = (self.k + 1 - size..=self.k).collect();
                let cols: Vec<usize> = (1..=self.n - self.k).collect();
                let gens = y.submatrix(&rows, &cols).maximal_minors();
                Ok(Ideal::new(self.ring(), gens)?)
            }
        }
    }

    /// Maximal minors of the first `k - s + 1` columns of `M`; equal to the
    /// Schubert ideal of the right-arm index set.
    pub fn right_ideal(&self, s: usize) -> Result<Ideal, FamilyError> {
        let idx = self.right_index(s)?;
        self.schubert_ideal(&idx)
    }

    /// The right-arm ideal read directly as maximal minors of a column block.
    pub fn right_ideal_by_columns(&self, s: usize) -> Result<Ideal, FamilyError> {
        self.right_index(s)?;
        let width = self.k + 1 - s;
        if width == 0 {
            return Ok(Ideal::unit(self.ring()));
        }
        let rows: Vec<usize> = (1..=self.k).collect();
        let cols: Vec<usize> = (1..=width).collect();
        let gens = self.matrix.submatrix(&rows, &cols).maximal_minors();
        Ok(Ideal::new(self.ring(), gens)?)
    }

    /// `(p_{K_0}, …, p_{K_s}) : I(R_2) = I(K_{s+1})` as `(A, I, K)`, for
    /// `0 <= s < n - k`.
    pub fn left_identity(&self, s: usize) -> Result<(Ideal, Ideal, Ideal), FamilyError> {
        if s + 1 > self.n - self.k {
            return Err(FamilyError::OutOfRange(format!("left identity s = {s}")));
        }
        let a = (0..=s)
            .map(|i| self.pluecker(&self.left_index(i)?))
            .collect::<Result<Vec<_>, _>>()?;
        let i = self.right_ideal(2.min(self.k))?;
        let k = self.left_ideal(s + 1, LeftArmReading::Schubert)?;
        Ok((Ideal::new(self.ring(), a)?, i, k))
    }

    /// `(p_{R_0}, …, p_{R_s}) : I(K_2) = I(R_{s+1})` as `(A, I, K)`, for
    /// `0 <= s < k`.
    pub fn right_identity(&self, s: usize) -> Result<(Ideal, Ideal, Ideal), FamilyError> {
        if s + 1 > self.k {
            return Err(FamilyError::OutOfRange(format!("right identity s = {s}")));
        }
        let a = (0..=s)
            .map(|i| self.pluecker(&self.right_index(i)?))
            .collect::<Result<Vec<_>, _>>()?;
        let i = self.left_ideal(2.min(self.n - self.k), LeftArmReading::Schubert)?;
        let k = self.right_ideal(s + 1)?;
        Ok((Ideal::new(self.ring(), a)?, i, k))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideals_equal;
    use crate::GbConfig;

    #[test]
    fn shapes() {
        let c = BigCell::new(2, 5).unwrap();
        assert_eq!(c.ring().arity(), 6);
        assert!(c.pluecker(&[4, 5]).unwrap().is_unit());
        assert!(BigCell::new(3, 5).is_err());
        assert_eq!(c.left_index(1).unwrap(), vec![1, 3]);
        assert_eq!(c.right_index(2).unwrap(), vec![2, 3]);
        assert_eq!(c.right_ideal(1).unwrap().generators().len(), 1);
        assert_eq!(c.left_ideal(1, LeftArmReading::LastRows).unwrap().generators().len(), 3);
        assert_eq!(c.left_ideal(1, LeftArmReading::Schubert).unwrap().generators().len(), 1);
        assert!(c.left_ideal(0, LeftArmReading::Schubert).unwrap().is_zero());
    }

    #[test]
    fn right_arm_readings_agree() {
        let cfg = GbConfig::default();
        for (k, n) in [(2, 4), (2, 5), (3, 6)] {
            let c = BigCell::new(k, n).unwrap();
            for s in 1..=k {
                let a = c.right_ideal(s).unwrap();
                let b = c.right_ideal_by_columns(s).unwrap();
                assert!(ideals_equal(&a, &b, &cfg).unwrap(), "k={k} n={n} s={s}");
            }
        }
    }
}
