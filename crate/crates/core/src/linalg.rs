//! Dense Gaussian elimination over GF(p).

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeModulus};

/// Row-major dense matrix over GF(p).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldMatrix {
    modulus: PrimeModulus,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// A solution set `particular + span(nullspace_basis)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSolution {
    pub particular: Vec<FieldElement>,
    pub nullspace_basis: Vec<Vec<FieldElement>>,
    pub rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveOutcome {
    Solved(LinearSolution),
    Inconsistent,
}

impl SolveOutcome {
    pub fn solution(self) -> Option<LinearSolution> {
        match self {
            SolveOutcome::Solved(s) => Some(s),
            SolveOutcome::Inconsistent => None,
        }
    }
}

impl FieldMatrix {
    pub fn zeros(modulus: PrimeModulus, rows: usize, cols: usize) -> Self {
        Self { modulus, rows, cols, entries: vec![modulus.zero(); rows * cols] }
    }

    pub fn identity(modulus: PrimeModulus, n: usize) -> Self {
        let mut m = Self::zeros(modulus, n, n);
        for i in 0..n {
            m.set(i, i, modulus.one());
        }
        m
    }

    pub fn from_entries(
        modulus: PrimeModulus,
        rows: usize,
        cols: usize,
        entries: Vec<FieldElement>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.modulus() != modulus) {
            return Err(Error::ModulusMismatch(modulus.value(), e.modulus().value()));
        }
        Ok(Self { modulus, rows, cols, entries })
    }

    /// Builds a matrix from rows of integers, reducing each mod p.
    pub fn from_rows(modulus: PrimeModulus, rows: &[Vec<u64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        let entries = rows.iter().flatten().map(|&v| modulus.element(v)).collect();
        Ok(Self { modulus, rows: rows.len(), cols, entries })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElement {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.entries[row * self.cols + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: FieldElement) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        assert_eq!(v.modulus(), self.modulus, "entry from a different field");
        self.entries[row * self.cols + col] = v;
    }

    pub fn row(&self, row: usize) -> &[FieldElement] {
        &self.entries[row * self.cols..(row + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|e| e.value()).collect()).collect()
    }

    pub fn mat_vec(&self, x: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} against {} columns",
                x.len(),
                self.cols
            )));
        }
        self.check_vector(x)?;
        let m = self.modulus;
        Ok((0..self.rows)
            .map(|i| {
                let acc = self
                    .row(i)
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (a, b)| m.add_raw(acc, m.mul_raw(a.value(), b.value())));
                m.element(acc)
            })
            .collect())
    }

    /// Solves `self * x = rhs` by reduction to reduced row echelon form.
    ///
    /// Pivots are the first nonzero entry scanning columns left to right, and
    /// free variables are zero in the particular solution, so the result is
    /// deterministic.
    pub fn solve(&self, rhs: &[FieldElement]) -> Result<SolveOutcome> {
        if rhs.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} against {} rows",
                rhs.len(),
                self.rows
            )));
        }
        self.check_vector(rhs)?;
        let m = self.modulus;
        let width = self.cols + 1;
        let mut aug: Vec<u64> = Vec::with_capacity(self.rows * width);
        for (i, b) in rhs.iter().enumerate() {
            aug.extend(self.row(i).iter().map(|e| e.value()));
            aug.push(b.value());
        }

        let mut pivots: Vec<usize> = Vec::new();
        for col in 0..self.cols {
            let rank = pivots.len();
            if rank == self.rows {
                break;
            }
            let Some(pr) = (rank..self.rows).find(|&r| aug[r * width + col] != 0) else {
                continue;
            };
            if pr != rank {
                for k in 0..width {
                    aug.swap(pr * width + k, rank * width + k);
                }
            }
            let inv = m.inv_raw(aug[rank * width + col])?;
            for k in col..width {
                aug[rank * width + k] = m.mul_raw(aug[rank * width + k], inv);
            }
            let (before, rest) = aug.split_at_mut(rank * width);
            let (pivot_row, after) = rest.split_at_mut(width);
            for row in before.chunks_exact_mut(width).chain(after.chunks_exact_mut(width)) {
                let factor = row[col];
                if factor == 0 {
                    continue;
                }
                for k in col..width {
                    row[k] = m.sub_raw(row[k], m.mul_raw(factor, pivot_row[k]));
                }
            }
            pivots.push(col);
        }

        let rank = pivots.len();
        if (rank..self.rows).any(|r| aug[r * width + self.cols] != 0) {
            return Ok(SolveOutcome::Inconsistent);
        }

        let mut particular = vec![m.zero(); self.cols];
        for (r, &c) in pivots.iter().enumerate() {
            particular[c] = m.element(aug[r * width + self.cols]);
        }

        let mut is_pivot = vec![false; self.cols];
        pivots.iter().for_each(|&c| is_pivot[c] = true);
        let nullspace_basis = (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![m.zero(); self.cols];
                v[f] = m.one();
                for (r, &c) in pivots.iter().enumerate() {
                    v[c] = m.element(m.neg_raw(aug[r * width + f]));
                }
                v
            })
            .collect();

        Ok(SolveOutcome::Solved(LinearSolution { particular, nullspace_basis, rank }))
    }

    fn check_vector(&self, v: &[FieldElement]) -> Result<()> {
        match v.iter().find(|e| e.modulus() != self.modulus) {
            Some(e) => Err(Error::ModulusMismatch(self.modulus.value(), e.modulus().value())),
            None => Ok(()),
        }
    }
}
