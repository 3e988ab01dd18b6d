//! Coordinate subspaces in canonical (reduced row echelon) form.
//!
//! The basis matrix is always the RREF of whatever spanned the space, with
//! zero rows dropped. Two subspaces are equal exactly when their canonical
//! bases are identical, so `==` decides subspace equality.

use num_traits::Zero;

use super::{LinalgError, Matrix};
use crate::field::Field;

#[derive(Clone, PartialEq, Debug)]
pub struct Subspace<F> {
    ambient: usize,
    basis: Matrix<F>,
    pivots: Vec<usize>,
}

impl<F: Field> Subspace<F> {
    /// The span of the given vectors inside `ambient`-dimensional space.
    pub fn span(ambient: usize, vectors: &[Vec<F>]) -> Self {
        assert!(
            vectors.iter().all(|v| v.len() == ambient),
            "spanning vector of wrong length"
        );
        let (red, pivots) = Matrix::from_rows(vectors.to_vec()).rref();
        if pivots.is_empty() {
            return Self::zero(ambient);
        }
        let rows: Vec<Vec<F>> = (0..pivots.len()).map(|r| red.row(r).to_vec()).collect();
        Subspace {
            ambient,
            basis: Matrix::from_rows(rows),
            pivots,
        }
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient: usize, axes: &[usize]) -> Self {
        let mut vectors = Vec::new();
        for &a in axes {
            assert!(a < ambient, "axis out of range");
            let mut v = vec![F::zero(); ambient];
            v[a] = F::one();
            vectors.push(v);
        }
        Self::span(ambient, &vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Canonical basis, one vector per row.
    pub fn basis(&self) -> &Matrix<F> {
        &self.basis
    }

    pub fn basis_rows(&self) -> Vec<Vec<F>> {
        self.basis.row_vecs()
    }

    /// Pivot columns of the canonical basis.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot: a canonical complement coordinate set.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..self.ambient)
            .filter(|c| !self.pivots.contains(c))
            .collect()
    }

    /// Reduces `v` modulo the subspace; the result is zero iff `v` lies in it.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut out = v.to_vec();
        for (t, &p) in self.pivots.iter().enumerate() {
            if out[p].is_zero() {
                continue;
            }
            let factor = out[p].clone();
            for c in 0..self.ambient {
                let b = self.basis.get(t, c);
                if !b.is_zero() {
                    out[c] = out[c].clone() - factor.clone() * b.clone();
                }
            }
        }
        out
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the canonical basis; `None` if `v` is outside.
    pub fn coordinates(&self, v: &[F]) -> Option<Vec<F>> {
        let coords: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut rem = v.to_vec();
        for (t, row) in self.basis.row_vecs().iter().enumerate() {
            for c in 0..self.ambient {
                if !row[c].is_zero() {
                    rem[c] = rem[c].clone() - coords[t].clone() * row[c].clone();
                }
            }
        }
        rem.iter().all(Zero::is_zero).then_some(coords)
    }

    pub fn contains_subspace(&self, other: &Self) -> bool {
        other.basis_rows().iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        let mut rows = self.basis_rows();
        rows.extend(other.basis_rows());
        Ok(Self::span(self.ambient, &rows))
    }

    /// Intersection, computed from the kernel of the stacked coefficient system.
    pub fn intersect(&self, other: &Self) -> Result<Self, LinalgError> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.ambient));
        }
        let a = self.dim();
        let b = other.dim();
        // Columns: coefficients (u | w) with sum_t u_t A_t - sum_s w_s B_s = 0.
        let mut m = Matrix::zeros(self.ambient, a + b);
        for (t, row) in self.basis_rows().iter().enumerate() {
            for c in 0..self.ambient {
                m.set(c, t, row[c].clone());
            }
        }
        for (s, row) in other.basis_rows().iter().enumerate() {
            for c in 0..self.ambient {
                m.set(c, a + s, -row[c].clone());
            }
        }
        let coeffs = kernel(&m);
        let vectors: Vec<Vec<F>> = coeffs
            .basis_rows()
            .iter()
            .map(|uw| {
                let mut v = vec![F::zero(); self.ambient];
                for (t, row) in self.basis_rows().iter().enumerate() {
                    if uw[t].is_zero() {
                        continue;
                    }
                    for c in 0..self.ambient {
                        if !row[c].is_zero() {
                            v[c] = v[c].clone() + uw[t].clone() * row[c].clone();
                        }
                    }
                }
                v
            })
            .collect();
        Ok(Self::span(self.ambient, &vectors))
    }

    fn check_ambient(&self, other: &Self) -> Result<(), LinalgError> {
        if self.ambient != other.ambient {
            return Err(LinalgError::DimensionMismatch {
                expected: self.ambient,
                got: other.ambient,
            });
        }
        Ok(())
    }
}

/// Null space of a matrix, as a canonical subspace of the column space.
pub fn kernel<F: Field>(m: &Matrix<F>) -> Subspace<F> {
    let (red, pivots) = m.rref();
    let n = m.cols();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vec<F>> = free
        .iter()
        .map(|&j| {
            let mut v = vec![F::zero(); n];
            v[j] = F::one();
            for (t, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(t, j).clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GaussianScalar, Scalar};

    type M = Matrix<Scalar>;

    fn vi(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&n| GaussianScalar::from_int(n)).collect()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        assert!(kernel(&M::identity(3)).is_zero());
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = kernel(&M::zeros(2, 3));
        assert_eq!(k, Subspace::full(3));
    }

    #[test]
    fn kernel_matches_quadratic_condition() {
        // [[b1, b3], [b2, -b1]] with (b1,b2,b3) = (1,1,-1): b1^2 + b2*b3 = 0,
        // so the kernel is one-dimensional; direct solve gives span{(1,1)}.
        let m = M::from_int_rows(&[&[1, -1], &[1, -1]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&vi(&[1, 1])));
        // check the kernel vector really solves the system
        for row in 0..2 {
            let dot = m.apply(&vi(&[1, 1]))[row].clone();
            assert!(dot.is_zero());
        }
    }

    #[test]
    fn span_canonicalizes() {
        let s = Subspace::span(3, &[vi(&[1, 0, 0]), vi(&[1, 1, 0])]);
        assert_eq!(s.dim(), 2);
        assert_eq!(s.basis_rows(), vec![vi(&[1, 0, 0]), vi(&[0, 1, 0])]);
    }

    #[test]
    fn plane_intersection() {
        let xy = Subspace::<Scalar>::coordinate(3, &[0, 1]);
        let yz = Subspace::coordinate(3, &[1, 2]);
        let meet = xy.intersect(&yz).unwrap();
        assert_eq!(meet, Subspace::coordinate(3, &[1]));
    }

    #[test]
    fn full_space_contains_everything() {
        let full = Subspace::full(4);
        assert!(full.contains(&vi(&[3, -1, 7, 2])));
        assert!(full.contains_subspace(&Subspace::coordinate(4, &[2, 3])));
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::<Scalar>::full(2);
        let b = Subspace::full(3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
    }

    #[test]
    fn coordinates_in_canonical_basis() {
        let s = Subspace::span(3, &[vi(&[1, 2, 0]), vi(&[0, 0, 1])]);
        let c = s.coordinates(&vi(&[2, 4, 5])).unwrap();
        assert_eq!(c, vi(&[2, 5]));
        assert!(s.coordinates(&vi(&[0, 1, 0])).is_none());
    }
}
