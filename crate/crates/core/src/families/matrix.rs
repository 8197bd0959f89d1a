use std::collections::HashMap;

use crate::poly::{indexed_name, Polynomial, Ring};

use super::FamilyError;

/// A dense matrix of polynomials over one ring. Row and column indices in
/// the public API are 1-based.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    ring: Ring,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

pub type GenericMatrix = PolyMatrix;

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (1..=r).collect();
    if r > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // advance to the next r-subset of [1, n] in lex order
        let mut i = r;
        while i > 0 && cur[i - 1] == n - r + i {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        cur[i - 1] += 1;
        for l in i..r {
            cur[l] = cur[l - 1] + 1;
        }
    }
}

/// All `r`-element subsets of `[1, n]` in lexicographic order.
pub fn index_subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    subsets(n, r)
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Polynomial>) -> Result<Self, FamilyError> {
        if rows == 0 || cols == 0 || entries.len() != rows * cols {
            return Err(FamilyError::OutOfRange(format!(
                "{} entries do not fill a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if entries.iter().any(|e| !e.ring().same(ring)) {
            return Err(FamilyError::Ideal(crate::IdealError::RingMismatch));
        }
        Ok(PolyMatrix { ring: ring.clone(), rows, cols, entries })
    }

    /// A `rows x cols` matrix of distinct variables `prefix_ij` in a fresh ring.
    pub fn generic(rows: usize, cols: usize, prefix: &str) -> Result<Self, FamilyError> {
        if rows == 0 || cols == 0 {
            return Err(FamilyError::OutOfRange("matrix dimensions must be positive".into()));
        }
        let max = rows.max(cols);
        let names: Vec<String> = (1..=rows)
            .flat_map(|i| (1..=cols).map(move |j| (i, j)))
            .map(|(i, j)| indexed_name(prefix, &[i, j], max))
            .collect();
        let ring = Ring::grevlex(&names)?;
        let entries = (0..names.len()).map(|v| Polynomial::var_at(&ring, v)).collect();
        Ok(PolyMatrix { ring, rows, cols, entries })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        assert!((1..=self.rows).contains(&i) && (1..=self.cols).contains(&j), "index out of range");
        &self.entries[(i - 1) * self.cols + (j - 1)]
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let entries = rows
            .iter()
            .flat_map(|&i| cols.iter().map(move |&j| (i, j)))
            .map(|(i, j)| self.entry(i, j).clone())
            .collect();
        PolyMatrix { ring: self.ring.clone(), rows: rows.len(), cols: cols.len(), entries }
    }

    /// `[self | other]`.
    pub fn hconcat(&self, other: &PolyMatrix) -> Result<PolyMatrix, FamilyError> {
        if self.rows != other.rows || !self.ring.same(&other.ring) {
            return Err(FamilyError::OutOfRange("row counts or rings differ".into()));
        }
        let mut entries = Vec::with_capacity(self.rows * (self.cols + other.cols));
        for i in 1..=self.rows {
            entries.extend((1..=self.cols).map(|j| self.entry(i, j).clone()));
            entries.extend((1..=other.cols).map(|j| other.entry(i, j).clone()));
        }
        Ok(PolyMatrix { ring: self.ring.clone(), rows: self.rows, cols: self.cols + other.cols, entries })
    }

    /// Minor on the given (1-based, increasing) rows and columns, by cofactor
    /// expansion along the first row.
    pub fn minor(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        assert_eq!(rows.len(), cols.len(), "minor needs a square selection");
        let mut memo = HashMap::new();
        let mask = cols.iter().fold(0u64, |m, &c| m | 1 << (c - 1));
        self.expand(rows, 0, mask, &mut memo)
    }

    fn expand(&self, rows: &[usize], depth: usize, mask: u64, memo: &mut HashMap<(usize, u64), Polynomial>) -> Polynomial {
        if depth == rows.len() {
            return Polynomial::one(&self.ring);
        }
        if let Some(p) = memo.get(&(depth, mask)) {
            return p.clone();
        }
        let mut acc = Polynomial::zero(&self.ring);
        let mut sign_neg = false;
        let mut rest = mask;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest &= rest - 1;
            let c = bit.trailing_zeros() as usize + 1;
            let a = self.entry(rows[depth], c);
            if !a.is_zero() {
                let sub = self.expand(rows, depth + 1, mask & !bit, memo);
                let term = a.try_mul(&sub).expect("same ring");
                acc = if sign_neg { acc.try_sub(&term) } else { acc.try_add(&term) }.expect("same ring");
            }
            sign_neg = !sign_neg;
        }
        memo.insert((depth, mask), acc.clone());
        acc
    }

    /// Minor by cofactor expansion along the first column; an independent
    /// route used to cross-check [`PolyMatrix::minor`].
    pub fn minor_by_columns(&self, rows: &[usize], cols: &[usize]) -> Polynomial {
        let t = self.transpose();
        t.minor(cols, rows)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let entries = (1..=self.cols)
            .flat_map(|j| (1..=self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.entry(i, j).clone())
            .collect();
        PolyMatrix { ring: self.ring.clone(), rows: self.cols, cols: self.rows, entries }
    }

    pub fn determinant(&self) -> Result<Polynomial, FamilyError> {
        if self.rows != self.cols {
            return Err(FamilyError::OutOfRange("determinant of a non-square matrix".into()));
        }
        let idx: Vec<usize> = (1..=self.rows).collect();
        Ok(self.minor(&idx, &idx))
    }

    /// All `r x r` minors: row subsets in lex order, column subsets in lex order
    /// within each.
    pub fn minors(&self, r: usize) -> Result<Vec<Polynomial>, FamilyError> {
        if r == 0 || r > self.rows.min(self.cols) {
            return Err(FamilyError::OutOfRange(format!(
                "minor size {r} for a {}x{} matrix",
                self.rows, self.cols
            )));
        }
        if self.cols > 64 {
            return Err(FamilyError::OutOfRange("more than 64 columns".into()));
        }
        let col_sets = subsets(self.cols, r);
        let mut out = Vec::with_capacity(subsets(self.rows, r).len() * col_sets.len());
        for rows in subsets(self.rows, r) {
            let mut memo = HashMap::new();
            for cols in &col_sets {
                let mask = cols.iter().fold(0u64, |m, &c| m | 1 << (c - 1));
                out.push(self.expand(&rows, 0, mask, &mut memo));
            }
        }
        Ok(out)
    }

    pub fn maximal_minors(&self) -> Vec<Polynomial> {
        self.minors(self.rows.min(self.cols)).expect("maximal size is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::parse_poly;

    #[test]
    fn generic_shapes() {
        let m = PolyMatrix::generic(2, 3, "y").unwrap();
        assert_eq!(m.ring().arity(), 6);
        assert_eq!(m.ring().vars()[0], "y_11");
        let one = PolyMatrix::generic(1, 1, "y").unwrap();
        assert_eq!(one.ring().vars(), ["y_11"]);
        assert!(PolyMatrix::generic(0, 2, "y").is_err());
        let big = PolyMatrix::generic(2, 10, "y").unwrap();
        assert_eq!(big.ring().vars()[9], "y_1_10");
    }

    #[test]
    fn small_minors() {
        let m = PolyMatrix::generic(2, 2, "y").unwrap();
        assert_eq!(
            m.minors(2).unwrap(),
            vec![parse_poly("y_11*y_22 - y_12*y_21", m.ring()).unwrap()]
        );
        let m = PolyMatrix::generic(2, 3, "y").unwrap();
        assert_eq!(m.minors(2).unwrap().len(), 3);
        assert_eq!(m.minors(1).unwrap().len(), 6);
        assert!(m.minors(3).is_err());
    }

    #[test]
    fn identity_determinant() {
        let r = Ring::grevlex(&["x"]).unwrap();
        let entries = (0..9)
            .map(|i| if i % 4 == 0 { Polynomial::one(&r) } else { Polynomial::zero(&r) })
            .collect();
        let id = PolyMatrix::new(&r, 3, 3, entries).unwrap();
        assert!(id.determinant().unwrap().is_unit());
    }

    #[test]
    fn laplace_consistency() {
        let m = PolyMatrix::generic(4, 5, "a").unwrap();
        for r in 1..=4 {
            for rows in subsets(4, r) {
                for cols in subsets(5, r) {
                    assert_eq!(m.minor(&rows, &cols), m.minor_by_columns(&rows, &cols));
                }
            }
        }
        let counts: Vec<usize> = (1..=4).map(|r| m.minors(r).unwrap().len()).collect();
        assert_eq!(counts, vec![20, 60, 40, 5]);
    }
}
