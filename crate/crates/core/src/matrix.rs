//! Dense exact matrices with Gauss-Jordan elimination.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::subspace::Subspace;
use std::fmt;

/// A dense matrix over a fixed [`FieldSpec`], stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, field, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let mut entries = Vec::with_capacity(r * c);
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch("ragged rows".into()));
            }
            for e in row {
                if e.field() != field {
                    return Err(Error::FieldMismatch("entry field differs from matrix field".into()));
                }
            }
            entries.extend(row.iter().cloned());
        }
        Ok(Matrix { rows: r, cols: c, field, entries })
    }

    /// Convenience constructor from signed integers.
    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let data = rows
            .iter()
            .map(|r| r.iter().map(|v| field.from_i64(*v)).collect())
            .collect();
        Self::from_rows(field, data).expect("uniform rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        debug_assert_eq!(v.field(), self.field);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a = a.add(b);
        }
        out
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.entries.iter_mut().zip(rhs.entries.iter()) {
            *a = a.sub(b);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        let mut out = self.clone();
        for a in out.entries.iter_mut() {
            *a = a.mul(s);
        }
        out
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&self.field.from_i64(-1))
    }

    pub fn mul(&self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "inner dimensions");
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.get(r, c).add(&a.mul(b));
                    out.set(r, c, v);
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = acc.add(&a.mul(&v[c]));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn vstack(&self, below: &Matrix) -> Matrix {
        assert_eq!(self.cols, below.cols);
        let mut entries = self.entries.clone();
        entries.extend(below.entries.iter().cloned());
        Matrix { rows: self.rows + below.rows, cols: self.cols, field: self.field, entries }
    }

    pub fn hstack(&self, right: &Matrix) -> Matrix {
        assert_eq!(self.rows, right.rows);
        let mut out = Matrix::zeros(self.field, self.rows, self.cols + right.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(r, c, self.get(r, c).clone());
            }
            for c in 0..right.cols {
                out.set(r, self.cols + c, right.get(r, c).clone());
            }
        }
        out
    }

    /// Block diagonal sum.
    pub fn block_direct_sum(blocks: &[&Matrix]) -> Matrix {
        let field = blocks.first().map_or(FieldSpec::Rationals, |m| m.field);
        let rows = blocks.iter().map(|m| m.rows).sum();
        let cols = blocks.iter().map(|m| m.cols).sum();
        let mut out = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for m in blocks {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(r0 + r, c0 + c, m.get(r, c).clone());
                }
            }
            r0 += m.rows;
            c0 += m.cols;
        }
        out
    }

    pub fn kronecker_product(&self, rhs: &Matrix) -> Matrix {
        let mut out = Matrix::zeros(self.field, self.rows * rhs.rows, self.cols * rhs.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.get(r, c);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = rhs.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r * rhs.rows + r2, c * rhs.cols + c2, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }

    /// Reduced row echelon form together with the pivot columns.
    /// Zero rows are dropped, so the result has full row rank.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0usize;
        for col in 0..m.cols {
            // find a nonzero entry at or below pivot_row
            let mut sel = None;
            for r in pivot_row..m.rows {
                if !m.get(r, col).is_zero() {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            m.swap_rows(pivot_row, sel);
            let inv = m.get(pivot_row, col).inv();
            m.scale_row(pivot_row, &inv);
            for r in 0..m.rows {
                if r != pivot_row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    m.row_axpy(r, pivot_row, &factor.neg());
                }
            }
            pivots.push(col);
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        m.truncate_rows(pivot_row);
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right null space, as a subspace of k^cols.
    pub fn kernel(&self) -> Subspace {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !is_pivot[*c]).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![self.field.zero(); self.cols];
            v[f] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, f).neg();
            }
            basis.push(v);
        }
        Subspace::from_spanning(self.field, self.cols, basis)
    }

    /// One solution of A x = b, if any.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.field, self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.set(r, c, self.get(r, c).clone());
            }
            aug.set(r, self.cols, b[r].clone());
        }
        let (red, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = red.get(i, self.cols).clone();
        }
        Some(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    fn scale_row(&mut self, r: usize, s: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(r, c).mul(s);
            self.set(r, c, v);
        }
    }

    /// row[dst] += factor * row[src]
    fn row_axpy(&mut self, dst: usize, src: usize, factor: &Scalar) {
        for c in 0..self.cols {
            let v = self.get(dst, c).add(&self.get(src, c).mul(factor));
            self.set(dst, c, v);
        }
    }

    fn truncate_rows(&mut self, keep: usize) {
        self.entries.truncate(keep * self.cols);
        self.rows = keep;
    }

    /// Square and invertible?
    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over {}", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(FieldSpec::Rationals, 2);
        let (r, pivots) = id.rref();
        assert_eq!(r, id);
        assert_eq!(pivots, vec![0, 1]);
    }

    #[test]
    fn rref_rank_one_over_gf2() {
        let f = FieldSpec::prime_field(2).unwrap();
        let m = Matrix::from_i64(f, &[&[1, 1], &[1, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_i64(f, &[&[1, 1]]));
        assert_eq!(pivots, vec![0]);
    }

    #[test]
    fn rref_zero_matrix_has_no_rows() {
        let m = Matrix::zeros(FieldSpec::Rationals, 3, 3);
        let (r, pivots) = m.rref();
        assert_eq!(r.rows(), 0);
        assert!(pivots.is_empty());
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let id = Matrix::identity(FieldSpec::Rationals, 3);
        assert_eq!(id.kernel().dim(), 0);
    }

    #[test]
    fn kernel_of_row_sums() {
        // [[1,1]] x = 0  <=>  x = t(1,-1)
        let f = FieldSpec::Rationals;
        let m = Matrix::from_i64(f, &[&[1, 1]]);
        let k = m.kernel();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&[f.from_i64(1), f.from_i64(-1)]));
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let m = Matrix::zeros(FieldSpec::Rationals, 2, 3);
        assert_eq!(m.kernel().dim(), 3);
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let f = FieldSpec::Rationals;
        let m = Matrix::from_i64(f, &[&[1, 2], &[3, 4]]);
        let x = m.solve(&[f.from_i64(5), f.from_i64(11)]).unwrap();
        assert_eq!(m.apply(&x), vec![f.from_i64(5), f.from_i64(11)]);

        let sing = Matrix::from_i64(f, &[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&[f.from_i64(0), f.from_i64(1)]).is_none());
    }

    #[test]
    fn kronecker_shape_and_entries() {
        let f = FieldSpec::Rationals;
        let a = Matrix::from_i64(f, &[&[1, 2]]);
        let b = Matrix::from_i64(f, &[&[0, 1], &[1, 0]]);
        let k = a.kronecker_product(&b);
        assert_eq!((k.rows(), k.cols()), (2, 4));
        assert_eq!(k.get(0, 3), &f.from_i64(2));
        assert_eq!(k.get(1, 2), &f.from_i64(2));
    }
}
