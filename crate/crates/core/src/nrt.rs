//! NRT (Niederreiter-Rosenbloom-Tsfasman) weight and distance on `s x r`
//! matrices over GF(p).
//!
//! Row 0 holds order-0 derivatives. A nonzero column whose topmost nonzero
//! entry sits at 0-based row `i` weighs `s - i`.

use crate::error::{Error, Result};
use crate::field::{FieldElement, PrimeModulus};

/// An `s x r` matrix stored column-major; column `j` belongs to evaluation
/// point `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct NrtMatrix {
    modulus: PrimeModulus,
    s: usize,
    r: usize,
    entries: Vec<FieldElement>,
}

impl NrtMatrix {
    pub fn zeros(modulus: PrimeModulus, s: usize, r: usize) -> Self {
        Self { modulus, s, r, entries: vec![modulus.zero(); s * r] }
    }

    /// Builds from `s` rows of `r` integers each, reducing mod p.
    pub fn from_rows(modulus: PrimeModulus, rows: &[Vec<u64>]) -> Result<Self> {
        let s = rows.len();
        let r = rows.first().map_or(0, Vec::len);
        if s == 0 || r == 0 || rows.iter().any(|row| row.len() != r) {
            return Err(Error::DimensionMismatch(
                "matrix rows must be nonempty and of equal length".into(),
            ));
        }
        let mut m = Self::zeros(modulus, s, r);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, modulus.element(v));
            }
        }
        Ok(m)
    }

    /// Builds from `r` columns of `s` elements each.
    pub fn from_columns(modulus: PrimeModulus, columns: Vec<Vec<FieldElement>>) -> Result<Self> {
        let r = columns.len();
        let s = columns.first().map_or(0, Vec::len);
        if s == 0 || r == 0 || columns.iter().any(|c| c.len() != s) {
            return Err(Error::DimensionMismatch(
                "matrix columns must be nonempty and of equal length".into(),
            ));
        }
        let entries: Vec<_> = columns.into_iter().flatten().collect();
        if let Some(e) = entries.iter().find(|e| e.modulus() != modulus) {
            return Err(Error::ModulusMismatch(modulus.value(), e.modulus().value()));
        }
        Ok(Self { modulus, s, r, entries })
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    /// Number of rows (derivative orders).
    pub fn s(&self) -> usize {
        self.s
    }

    /// Number of columns (evaluation points).
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn get(&self, row: usize, col: usize) -> FieldElement {
        assert!(row < self.s && col < self.r, "index out of range");
        self.entries[col * self.s + row]
    }

    pub fn set(&mut self, row: usize, col: usize, v: FieldElement) {
        assert!(row < self.s && col < self.r, "index out of range");
        assert_eq!(v.modulus(), self.modulus, "entry from a different field");
        self.entries[col * self.s + row] = v;
    }

    pub fn column(&self, col: usize) -> &[FieldElement] {
        &self.entries[col * self.s..(col + 1) * self.s]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[FieldElement]> {
        self.entries.chunks_exact(self.s)
    }

    /// Row-major integer view, row 0 first.
    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.s).map(|i| (0..self.r).map(|j| self.get(i, j).value()).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn weight(&self) -> usize {
        nrt_weight(self)
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn try_sub(&self, rhs: &Self) -> Result<Self> {
        self.zip_with(rhs, |a, b| a - b)
    }

    /// Entrywise product with `other` (same shape).
    pub fn hadamard(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a * b)
    }

    fn zip_with(
        &self,
        rhs: &Self,
        op: impl Fn(FieldElement, FieldElement) -> FieldElement,
    ) -> Result<Self> {
        if self.modulus != rhs.modulus {
            return Err(Error::ModulusMismatch(self.modulus.value(), rhs.modulus.value()));
        }
        if (self.s, self.r) != (rhs.s, rhs.r) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} against {}x{}",
                self.s, self.r, rhs.s, rhs.r
            )));
        }
        let entries = self.entries.iter().zip(&rhs.entries).map(|(&a, &b)| op(a, b)).collect();
        Ok(Self { entries, ..*self })
    }
}

/// NRT weight of one column of height `col.len()`.
pub fn column_weight(col: &[FieldElement]) -> usize {
    col.iter().position(|e| !e.is_zero()).map_or(0, |i| col.len() - i)
}

pub fn nrt_weight(a: &NrtMatrix) -> usize {
    a.columns().map(column_weight).sum()
}

pub fn nrt_distance(a: &NrtMatrix, b: &NrtMatrix) -> Result<usize> {
    Ok(nrt_weight(&a.try_sub(b)?))
}
