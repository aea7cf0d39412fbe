//! Subspaces of k^n in canonical reduced row echelon form.

use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;

/// A linear subspace of k^ambient. The basis matrix is kept in reduced row
/// echelon form with strictly increasing pivot columns, so two subspaces are
/// equal as data exactly when they are equal as subspaces.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    field: FieldSpec,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace { ambient, field, basis: Matrix::zeros(field, 0, ambient), pivots: vec![] }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            field,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    pub fn from_spanning(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        if vectors.is_empty() {
            return Self::zero(field, ambient);
        }
        let m = Matrix::from_rows(field, vectors).expect("uniform spanning vectors");
        assert_eq!(m.cols(), ambient);
        let (basis, pivots) = m.rref();
        Subspace { ambient, field, basis, pivots }
    }

    pub fn from_matrix_rows(m: &Matrix) -> Self {
        let (basis, pivots) = m.rref();
        Subspace { ambient: m.cols(), field: m.field(), basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim()).map(|r| self.basis.row(r).to_vec()).collect()
    }

    /// Reduce v against the basis; the remainder is zero iff v lies in the
    /// subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut w = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !w[p].is_zero() {
                let factor = w[p].clone();
                for c in 0..self.ambient {
                    w[c] = w[c].sub(&factor.mul(self.basis.get(i, c)));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|e| e.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        let mut vs = self.basis_vectors();
        vs.extend(other.basis_vectors());
        Subspace::from_spanning(self.field, self.ambient, vs)
    }

    /// Null space of the basis matrix: all vectors pairing to zero with every
    /// element of the subspace under the coordinatewise dual pairing.
    pub fn annihilator(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field, self.ambient);
        }
        self.basis.kernel()
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        // ann(ann U + ann W) under the nondegenerate coordinate pairing.
        self.annihilator().sum(&other.annihilator()).annihilator()
    }

    /// Coordinates of v in the subspace basis, if v lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        // In rref, the coefficient of basis row i is just v[pivot_i] after
        // clearing previous pivots; reduce() performs exactly that sweep.
        let mut w = v.to_vec();
        let mut coords = Vec::with_capacity(self.dim());
        for (i, &p) in self.pivots.iter().enumerate() {
            let factor = w[p].clone();
            coords.push(factor.clone());
            if !factor.is_zero() {
                for c in 0..self.ambient {
                    w[c] = w[c].sub(&factor.mul(self.basis.get(i, c)));
                }
            }
        }
        Some(coords)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Subspace(dim {} of k^{}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> FieldSpec {
        FieldSpec::Rationals
    }

    #[test]
    fn annihilator_of_coordinate_plane() {
        // span{e1, e2} in k^3  ->  span{e3}
        let f = q();
        let s = Subspace::from_spanning(
            f,
            3,
            vec![
                vec![f.from_i64(1), f.from_i64(0), f.from_i64(0)],
                vec![f.from_i64(0), f.from_i64(1), f.from_i64(0)],
            ],
        );
        let a = s.annihilator();
        assert_eq!(a.dim(), 1);
        assert!(a.contains(&[f.from_i64(0), f.from_i64(0), f.from_i64(1)]));
    }

    #[test]
    fn annihilator_of_zero_is_full() {
        let s = Subspace::zero(q(), 2);
        assert_eq!(s.annihilator(), Subspace::full(q(), 2));
    }

    #[test]
    fn annihilator_of_diagonal_line() {
        // span{(1,1)} -> span{(1,-1)}
        let f = q();
        let s = Subspace::from_spanning(f, 2, vec![vec![f.from_i64(1), f.from_i64(1)]]);
        let a = s.annihilator();
        assert_eq!(a.dim(), 1);
        assert!(a.contains(&[f.from_i64(1), f.from_i64(-1)]));
    }

    #[test]
    fn sum_and_intersection() {
        let f = q();
        let u = Subspace::from_spanning(f, 3, vec![vec![f.from_i64(1), f.from_i64(0), f.from_i64(0)]]);
        let w = Subspace::from_spanning(
            f,
            3,
            vec![
                vec![f.from_i64(1), f.from_i64(1), f.from_i64(0)],
                vec![f.from_i64(0), f.from_i64(0), f.from_i64(1)],
            ],
        );
        assert_eq!(u.sum(&w).dim(), 3);
        let i = u.intersect(&w);
        assert_eq!(i.dim(), 0);
        let w2 = Subspace::from_spanning(f, 3, vec![vec![f.from_i64(1), f.from_i64(0), f.from_i64(0)], vec![f.from_i64(0), f.from_i64(1), f.from_i64(0)]]);
        assert_eq!(u.intersect(&w2), u);
    }

    #[test]
    fn coordinates_roundtrip() {
        let f = q();
        let s = Subspace::from_spanning(
            f,
            3,
            vec![
                vec![f.from_i64(1), f.from_i64(2), f.from_i64(0)],
                vec![f.from_i64(0), f.from_i64(0), f.from_i64(1)],
            ],
        );
        let v = vec![f.from_i64(2), f.from_i64(4), f.from_i64(-3)];
        let coords = s.coordinates(&v).unwrap();
        // rebuild
        let mut rebuilt = vec![f.zero(); 3];
        for (i, c) in coords.iter().enumerate() {
            for j in 0..3 {
                rebuilt[j] = rebuilt[j].add(&c.mul(s.basis().get(i, j)));
            }
        }
        assert_eq!(rebuilt, v);
        assert!(s.coordinates(&[f.one(), f.zero(), f.zero()]).is_none());
    }
}
