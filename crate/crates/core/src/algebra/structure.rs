//! The structure tensor itself, plus the constructions that produce new
//! algebras from old: direct/semidirect assembly, quotients, basis changes.


use super::AlgebraError;
use crate::field::Field;
use crate::linalg::{Matrix, Subspace};

/// A finite-dimensional algebra given by a labeled basis and its structure
/// constants `[b_i, b_j] = sum_k c_{ij}^k b_k`.
///
/// No algebraic law is assumed at construction; the checks live in methods
/// like [`AlgebraStructure::check_leibniz`]. Products are stored sparsely and
/// kept canonical (indices sorted, zero coefficients dropped), so `==` is
/// exact tensor equality.
#[derive(Clone, PartialEq, Debug)]
pub struct AlgebraStructure<F> {
    labels: Vec<String>,
    /// `table[i * dim + j]` lists the nonzero components of `[b_i, b_j]`.
    table: Vec<Vec<(usize, F)>>,
}

impl<F: Field> AlgebraStructure<F> {
    pub fn new(labels: Vec<String>) -> Result<Self, AlgebraError> {
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(AlgebraError::DuplicateLabel(l.clone()));
            }
        }
        let dim = labels.len();
        Ok(AlgebraStructure {
            labels,
            table: vec![Vec::new(); dim * dim],
        })
    }

    /// The zero algebra on the given labels.
    pub fn abelian(labels: Vec<String>) -> Result<Self, AlgebraError> {
        Self::new(labels)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label_index(&self, label: &str) -> Result<usize, AlgebraError> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| AlgebraError::UnknownLabel(label.to_string()))
    }

    /// Sets `[b_i, b_j]`, replacing any previous value.
    pub fn set_product(&mut self, i: usize, j: usize, entries: Vec<(usize, F)>) {
        let dim = self.dim();
        assert!(i < dim && j < dim, "basis index out of range");
        let mut normalized: Vec<(usize, F)> = Vec::with_capacity(entries.len());
        for (k, c) in entries {
            assert!(k < dim, "component index out of range");
            if c.is_zero() {
                continue;
            }
            match normalized.iter_mut().find(|(k2, _)| *k2 == k) {
                Some((_, c2)) => *c2 = c2.clone() + c,
                None => normalized.push((k, c)),
            }
        }
        normalized.retain(|(_, c)| !c.is_zero());
        normalized.sort_by_key(|(k, _)| *k);
        self.table[i * dim + j] = normalized;
    }

    /// Sets `[b_i, b_j]` to the entries and `[b_j, b_i]` to their negation.
    pub fn set_antisymmetric(&mut self, i: usize, j: usize, entries: Vec<(usize, F)>) {
        let negated = entries.iter().map(|(k, c)| (*k, -c.clone())).collect();
        self.set_product(i, j, entries);
        self.set_product(j, i, negated);
    }

    /// Label-addressed variant of [`Self::set_product`].
    pub fn set_product_by_labels(
        &mut self,
        left: &str,
        right: &str,
        entries: &[(&str, F)],
    ) -> Result<(), AlgebraError> {
        let i = self.label_index(left)?;
        let j = self.label_index(right)?;
        let mut resolved = Vec::with_capacity(entries.len());
        for (l, c) in entries {
            resolved.push((self.label_index(l)?, c.clone()));
        }
        self.set_product(i, j, resolved);
        Ok(())
    }

    /// Nonzero components of `[b_i, b_j]`.
    pub fn product_entries(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.table[i * self.dim() + j]
    }

    /// Structure constant `c_{ij}^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> F {
        self.product_entries(i, j)
            .iter()
            .find(|(l, _)| *l == k)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(F::zero)
    }

    /// All pairs `(i, j)` with `[b_i, b_j] != 0`.
    pub fn nonzero_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let dim = self.dim();
        (0..dim * dim)
            .filter(|idx| !self.table[*idx].is_empty())
            .map(move |idx| (idx / dim, idx % dim))
    }

    /// `[b_i, b_j]` as a dense coordinate vector.
    pub fn product_of_basis(&self, i: usize, j: usize) -> Vec<F> {
        let mut out = vec![F::zero(); self.dim()];
        for (k, c) in self.product_entries(i, j) {
            out[*k] = c.clone();
        }
        out
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn product(&self, x: &[F], y: &[F]) -> Result<Vec<F>, AlgebraError> {
        let dim = self.dim();
        for v in [x, y] {
            if v.len() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        let mut out = vec![F::zero(); dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let scale = xi.clone() * yj.clone();
                for (k, c) in self.product_entries(i, j) {
                    out[*k] = out[*k].clone() + scale.clone() * c.clone();
                }
            }
        }
        Ok(out)
    }

    /// Span of `[a, b]` over basis vectors `a` of `A` and `b` of `B`.
    pub fn bracket_subspaces(
        &self,
        a: &Subspace<F>,
        b: &Subspace<F>,
    ) -> Result<Subspace<F>, AlgebraError> {
        let dim = self.dim();
        for s in [a, b] {
            if s.ambient_dim() != dim {
                return Err(AlgebraError::DimensionMismatch {
                    expected: dim,
                    got: s.ambient_dim(),
                });
            }
        }
        let mut products = Vec::new();
        for x in a.basis_rows() {
            for y in b.basis_rows() {
                let p = self.product(&x, &y)?;
                if p.iter().any(|c| !c.is_zero()) {
                    products.push(p);
                }
            }
        }
        Ok(Subspace::span(dim, &products))
    }

    /// The whole coordinate space as a subspace.
    pub fn full_space(&self) -> Subspace<F> {
        Subspace::full(self.dim())
    }

    /// Coordinate span of the given labels.
    pub fn span_of_labels(&self, labels: &[&str]) -> Result<Subspace<F>, AlgebraError> {
        let axes = labels
            .iter()
            .map(|l| self.label_index(l))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Subspace::coordinate(self.dim(), &axes))
    }

    /// Quotient by a verified two-sided ideal.
    ///
    /// The quotient keeps the coordinates without a pivot in the ideal's
    /// canonical basis, so the complement is determined by the ideal alone.
    /// Returns the quotient algebra and the projection matrix (old coordinates
    /// to quotient coordinates).
    pub fn quotient(&self, ideal: &Subspace<F>) -> Result<(Self, Matrix<F>), AlgebraError> {
        let dim = self.dim();
        if ideal.ambient_dim() != dim {
            return Err(AlgebraError::DimensionMismatch {
                expected: dim,
                got: ideal.ambient_dim(),
            });
        }
        let full = self.full_space();
        let left = self.bracket_subspaces(&full, ideal)?;
        let right = self.bracket_subspaces(ideal, &full)?;
        if !ideal.contains_subspace(&left) {
            return Err(AlgebraError::NotAnIdeal(
                "[L, J] is not contained in J".into(),
            ));
        }
        if !ideal.contains_subspace(&right) {
            return Err(AlgebraError::NotAnIdeal(
                "[J, L] is not contained in J".into(),
            ));
        }

        let complement = ideal.complement_coordinates();
        let labels: Vec<String> = complement.iter().map(|&c| self.labels[c].clone()).collect();
        let mut quot = AlgebraStructure::new(labels)?;

        let mut projection = Matrix::zeros(complement.len(), dim);
        for j in 0..dim {
            let mut unit = vec![F::zero(); dim];
            unit[j] = F::one();
            let reduced = ideal.reduce(&unit);
            for (r, &c) in complement.iter().enumerate() {
                projection.set(r, j, reduced[c].clone());
            }
        }

        for (a, &ca) in complement.iter().enumerate() {
            for (b, &cb) in complement.iter().enumerate() {
                let w = self.product_of_basis(ca, cb);
                let reduced = ideal.reduce(&w);
                let entries: Vec<(usize, F)> = complement
                    .iter()
                    .enumerate()
                    .map(|(k, &c)| (k, reduced[c].clone()))
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                quot.set_product(a, b, entries);
            }
        }
        Ok((quot, projection))
    }

    /// Block assembly: within-part brackets from `parts`, `[module, actor]`
    /// blocks from the cross actions, every other block zero.
    pub fn assemble(parts: &[Self], cross: &[CrossAction<F>]) -> Result<Self, AlgebraError> {
        let offsets: Vec<usize> = parts
            .iter()
            .scan(0, |acc, p| {
                let o = *acc;
                *acc += p.dim();
                Some(o)
            })
            .collect();
        let mut labels: Vec<String> = parts.iter().flat_map(|p| p.labels.clone()).collect();
        let mut seen = std::collections::HashSet::new();
        let clash = labels.iter().any(|l| !seen.insert(l.clone()));
        if clash {
            labels = parts
                .iter()
                .enumerate()
                .flat_map(|(pi, p)| {
                    p.labels
                        .iter()
                        .map(move |l| format!("{}{}", l, pi + 1))
                })
                .collect();
        }
        let mut out = AlgebraStructure::new(labels)?;

        for (pi, part) in parts.iter().enumerate() {
            let off = offsets[pi];
            for (i, j) in part.nonzero_pairs() {
                let entries = part
                    .product_entries(i, j)
                    .iter()
                    .map(|(k, c)| (off + k, c.clone()))
                    .collect();
                out.set_product(off + i, off + j, entries);
            }
        }

        for action in cross {
            let (mp, ap) = (action.module_part, action.actor_part);
            if mp >= parts.len() || ap >= parts.len() || mp == ap {
                return Err(AlgebraError::ShapeMismatch(
                    "cross action references invalid parts".into(),
                ));
            }
            let module = &parts[mp];
            let actor = &parts[ap];
            if module.nonzero_pairs().next().is_some() {
                return Err(AlgebraError::ShapeMismatch(
                    "module part must have zero internal bracket".into(),
                ));
            }
            if action.matrices.len() != actor.dim() {
                return Err(AlgebraError::ShapeMismatch(format!(
                    "expected {} action matrices, got {}",
                    actor.dim(),
                    action.matrices.len()
                )));
            }
            for (aj, mat) in action.matrices.iter().enumerate() {
                if mat.rows() != module.dim() || mat.cols() != module.dim() {
                    return Err(AlgebraError::ShapeMismatch(format!(
                        "action matrix {} is {}x{}, module dimension is {}",
                        aj,
                        mat.rows(),
                        mat.cols(),
                        module.dim()
                    )));
                }
                for mk in 0..module.dim() {
                    let entries: Vec<(usize, F)> = (0..module.dim())
                        .map(|ml| (offsets[mp] + ml, mat.get(ml, mk).clone()))
                        .filter(|(_, c)| !c.is_zero())
                        .collect();
                    out.set_product(offsets[mp] + mk, offsets[ap] + aj, entries);
                }
            }
        }
        Ok(out)
    }

    /// Conjugates the tensor by an invertible basis change.
    pub fn change_basis(&self, t: &BasisChange<F>) -> Self {
        let dim = self.dim();
        assert_eq!(t.matrix().rows(), dim, "basis change dimension");
        let mut out = AlgebraStructure::new(self.labels.clone()).expect("labels already unique");
        // New coordinates y of a vector with old coordinates x: y = (T^t)^{-1} x.
        let back = t.inverse().transpose();
        for i in 0..dim {
            for j in 0..dim {
                let w = self
                    .product(t.matrix().row(i), t.matrix().row(j))
                    .expect("rows have algebra dimension");
                let y = back.apply(&w);
                let entries = y
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                out.set_product(i, j, entries);
            }
        }
        out
    }
}

/// An invertible change of basis; rows express the new basis in the old one.
#[derive(Clone, Debug)]
pub struct BasisChange<F> {
    matrix: Matrix<F>,
    inverse: Matrix<F>,
}

impl<F: Field> BasisChange<F> {
    pub fn new(matrix: Matrix<F>) -> Result<Self, AlgebraError> {
        assert_eq!(matrix.rows(), matrix.cols(), "basis change must be square");
        let inverse = matrix.inverse().ok_or(AlgebraError::SingularTransform)?;
        Ok(BasisChange { matrix, inverse })
    }

    pub fn identity(n: usize) -> Self {
        BasisChange {
            matrix: Matrix::identity(n),
            inverse: Matrix::identity(n),
        }
    }

    /// First `other`, then `self`, as one basis change.
    pub fn compose(&self, other: &Self) -> Self {
        BasisChange {
            matrix: self.matrix.mul(other.matrix()),
            inverse: other.inverse.mul(&self.inverse),
        }
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn inverse(&self) -> &Matrix<F> {
        &self.inverse
    }
}

/// A right action of one assembly part on another, used by
/// [`AlgebraStructure::assemble`]: `matrices[j]` sends module coordinates to
/// the coordinates of `[m, actor_j]`.
#[derive(Clone, Debug)]
pub struct CrossAction<F> {
    pub module_part: usize,
    pub actor_part: usize,
    pub matrices: Vec<Matrix<F>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reps::{irreducible_module, sl2_canonical};
    use crate::{GaussianScalar, Scalar};

    fn int(n: i64) -> Scalar {
        GaussianScalar::from_int(n)
    }

    fn iv(v: &[i64]) -> Vec<Scalar> {
        v.iter().map(|&n| int(n)).collect()
    }

    #[test]
    fn sl2_products_extend_bilinearly() {
        let a = sl2_canonical::<Scalar>();
        // [e,h] = 2e, [e,f] = h
        assert_eq!(a.product(&iv(&[1, 0, 0]), &iv(&[0, 1, 0])).unwrap(), iv(&[2, 0, 0]));
        assert_eq!(a.product(&iv(&[1, 0, 0]), &iv(&[0, 0, 1])).unwrap(), iv(&[0, 1, 0]));
        // [0, y] = 0
        assert_eq!(a.product(&iv(&[0, 0, 0]), &iv(&[3, 1, -2])).unwrap(), iv(&[0, 0, 0]));
        assert!(a.product(&iv(&[1, 0]), &iv(&[0, 1, 0])).is_err());
    }

    #[test]
    fn duplicate_labels_rejected() {
        assert!(matches!(
            AlgebraStructure::<Scalar>::new(vec!["a".into(), "a".into()]),
            Err(AlgebraError::DuplicateLabel(_))
        ));
    }

    #[test]
    fn quotient_by_zero_and_by_everything() {
        let a = sl2_canonical::<Scalar>();
        let (same, proj) = a.quotient(&Subspace::zero(3)).unwrap();
        assert_eq!(same, a);
        assert_eq!(proj, Matrix::identity(3));
        let (nothing, _) = a.quotient(&Subspace::full(3)).unwrap();
        assert_eq!(nothing.dim(), 0);
    }

    #[test]
    fn quotient_requires_an_ideal() {
        let a = sl2_canonical::<Scalar>();
        let not_ideal = Subspace::coordinate(3, &[0]);
        assert!(matches!(
            a.quotient(&not_ideal),
            Err(AlgebraError::NotAnIdeal(_))
        ));
    }

    #[test]
    fn direct_sum_of_two_sl2_copies() {
        let s = sl2_canonical::<Scalar>();
        let sum = AlgebraStructure::assemble(&[s.clone(), s], &[]).unwrap();
        assert_eq!(sum.dim(), 6);
        assert_eq!(
            sum.labels(),
            ["e1", "h1", "f1", "e2", "h2", "f2"]
        );
        assert!(sum.check_lie());
        // cross blocks vanish
        assert!(sum.product_entries(0, 3).is_empty());
    }

    #[test]
    fn semidirect_assembly_is_leibniz_until_perturbed() {
        let sl2 = sl2_canonical::<Scalar>();
        let module = irreducible_module::<Scalar>(2);
        let x_part =
            AlgebraStructure::abelian(vec!["x0".into(), "x1".into(), "x2".into()]).unwrap();
        let cross = CrossAction {
            module_part: 1,
            actor_part: 0,
            matrices: module.matrices().to_vec(),
        };
        let good = AlgebraStructure::assemble(&[sl2.clone(), x_part.clone()], &[cross]).unwrap();
        assert!(good.check_leibniz().passed());
        // [x0, f] = x1
        let x0 = good.label_index("x0").unwrap();
        let f = good.label_index("f").unwrap();
        let x1 = good.label_index("x1").unwrap();
        assert_eq!(good.constant(x0, f, x1), int(1));

        let mut broken_mats = module.matrices().to_vec();
        let v = broken_mats[1].get(0, 0).clone() + int(1);
        broken_mats[1].set(0, 0, v);
        let bad = AlgebraStructure::assemble(
            &[sl2, x_part],
            &[CrossAction {
                module_part: 1,
                actor_part: 0,
                matrices: broken_mats,
            }],
        )
        .unwrap();
        assert!(!bad.check_leibniz().passed());
    }

    #[test]
    fn assembly_shape_errors() {
        let sl2 = sl2_canonical::<Scalar>();
        let x_part = AlgebraStructure::<Scalar>::abelian(vec!["x0".into()]).unwrap();
        let bad_count = CrossAction {
            module_part: 1,
            actor_part: 0,
            matrices: vec![Matrix::zeros(1, 1)],
        };
        assert!(matches!(
            AlgebraStructure::assemble(&[sl2.clone(), x_part], &[bad_count]),
            Err(AlgebraError::ShapeMismatch(_))
        ));
        let nonabelian_module = CrossAction {
            module_part: 1,
            actor_part: 0,
            matrices: vec![Matrix::zeros(3, 3); 3],
        };
        assert!(matches!(
            AlgebraStructure::assemble(&[sl2.clone(), sl2], &[nonabelian_module]),
            Err(AlgebraError::ShapeMismatch(_))
        ));
    }

    #[test]
    fn identity_change_is_a_no_op() {
        let a = sl2_canonical::<Scalar>();
        assert_eq!(a.change_basis(&BasisChange::identity(3)), a);
    }

    #[test]
    fn rescaling_e_and_f_fixes_the_sl2_table() {
        // e' = 2e, f' = f/2, h' = h reproduces the canonical constants:
        // [e',h] = 2[e,h] = 4e = 2e', [e',f'] = [e,f] = h.
        let a = sl2_canonical::<Scalar>();
        let mut t = Matrix::identity(3);
        t.set(0, 0, int(2));
        t.set(2, 2, GaussianScalar::from_fraction(1, 2));
        let moved = a.change_basis(&BasisChange::new(t).unwrap());
        assert_eq!(moved, a);
    }

    #[test]
    fn singular_change_is_rejected() {
        assert!(matches!(
            BasisChange::<Scalar>::new(Matrix::zeros(2, 2)),
            Err(AlgebraError::SingularTransform)
        ));
    }

    #[test]
    fn change_basis_round_trips() {
        let a = sl2_canonical::<Scalar>();
        let t = BasisChange::new(Matrix::from_int_rows(&[
            &[1, 2, 0],
            &[0, 1, 0],
            &[3, 0, 1],
        ]))
        .unwrap();
        let back = BasisChange::new(t.inverse().clone()).unwrap();
        assert_eq!(a.change_basis(&t).change_basis(&back), a);
    }
}
