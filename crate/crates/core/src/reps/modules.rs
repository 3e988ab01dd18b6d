//! Right modules given by action matrices, their weight spaces, and the
//! decomposition into irreducible sl2-modules.


use super::{simple::sl2_canonical, RepsError};
use crate::algebra::AlgebraStructure;
use crate::field::Field;
use crate::linalg::{kernel, Matrix, Subspace};

/// A right action of an algebra on a coordinate module: one matrix per actor
/// basis element, applied to column vectors (`matrices[j] * v` is `[v, a_j]`).
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleAction<F> {
    actor: AlgebraStructure<F>,
    module_dim: usize,
    matrices: Vec<Matrix<F>>,
}

impl<F: Field> ModuleAction<F> {
    pub fn new(
        actor: AlgebraStructure<F>,
        module_dim: usize,
        matrices: Vec<Matrix<F>>,
    ) -> Result<Self, RepsError> {
        if matrices.len() != actor.dim() {
            return Err(RepsError::DecompositionFailed(format!(
                "expected {} action matrices, got {}",
                actor.dim(),
                matrices.len()
            )));
        }
        for m in &matrices {
            if m.rows() != module_dim || m.cols() != module_dim {
                return Err(RepsError::DecompositionFailed(format!(
                    "action matrix is {}x{}, module dimension is {}",
                    m.rows(),
                    m.cols(),
                    module_dim
                )));
            }
        }
        Ok(ModuleAction {
            actor,
            module_dim,
            matrices,
        })
    }

    pub fn actor(&self) -> &AlgebraStructure<F> {
        &self.actor
    }

    pub fn module_dim(&self) -> usize {
        self.module_dim
    }

    pub fn matrices(&self) -> &[Matrix<F>] {
        &self.matrices
    }

    pub fn matrix(&self, actor_index: usize) -> &Matrix<F> {
        &self.matrices[actor_index]
    }

    /// Checks the right-module law `R_{[a,b]} = R_b R_a - R_a R_b` on every
    /// actor basis pair; returns the first violating pair.
    pub fn check_homomorphism(&self) -> Result<(), (usize, usize)> {
        let n = self.actor.dim();
        for a in 0..n {
            for b in 0..n {
                let mut lhs = Matrix::zeros(self.module_dim, self.module_dim);
                for (k, c) in self.actor.product_entries(a, b) {
                    lhs = lhs.add(&self.matrices[*k].scale(c));
                }
                let rhs = self.matrices[b]
                    .mul(&self.matrices[a])
                    .sub(&self.matrices[a].mul(&self.matrices[b]));
                if lhs != rhs {
                    return Err((a, b));
                }
            }
        }
        Ok(())
    }

    /// Restriction to an invariant subspace, in that subspace's canonical basis.
    pub fn restrict(&self, sub: &Subspace<F>) -> Result<Self, RepsError> {
        if sub.ambient_dim() != self.module_dim {
            return Err(RepsError::NotInvariant(
                "subspace lives in a different module".into(),
            ));
        }
        let rows = sub.basis_rows();
        let mut matrices = Vec::with_capacity(self.matrices.len());
        for m in &self.matrices {
            let mut restricted = Matrix::zeros(sub.dim(), sub.dim());
            for (k, v) in rows.iter().enumerate() {
                let image = m.apply(v);
                let coords = sub.coordinates(&image).ok_or_else(|| {
                    RepsError::NotInvariant("subspace is not action-invariant".into())
                })?;
                for (l, c) in coords.into_iter().enumerate() {
                    if !c.is_zero() {
                        restricted.set(l, k, c);
                    }
                }
            }
            matrices.push(restricted);
        }
        ModuleAction::new(self.actor.clone(), sub.dim(), matrices)
    }

    /// Block-diagonal direct sum; all summands must share one actor.
    pub fn direct_sum(parts: &[&ModuleAction<F>]) -> Result<Self, RepsError> {
        let actor = parts
            .first()
            .ok_or_else(|| RepsError::DecompositionFailed("empty direct sum".into()))?
            .actor
            .clone();
        if parts.iter().any(|p| p.actor != actor) {
            return Err(RepsError::DecompositionFailed(
                "direct sum over different actors".into(),
            ));
        }
        let total: usize = parts.iter().map(|p| p.module_dim).sum();
        let mut matrices = Vec::with_capacity(actor.dim());
        for j in 0..actor.dim() {
            let mut m = Matrix::zeros(total, total);
            let mut off = 0;
            for p in parts {
                for r in 0..p.module_dim {
                    for c in 0..p.module_dim {
                        let v = p.matrices[j].get(r, c);
                        if !v.is_zero() {
                            m.set(off + r, off + c, v.clone());
                        }
                    }
                }
                off += p.module_dim;
            }
            matrices.push(m);
        }
        ModuleAction::new(actor, total, matrices)
    }
}

/// Eigenspaces of the `h`-action, one per integer eigenvalue that occurs.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightDecomposition<F> {
    /// `(weight, eigenspace)` pairs, weights strictly decreasing.
    pub pairs: Vec<(i64, Subspace<F>)>,
}

impl<F> WeightDecomposition<F> {
    pub fn weights(&self) -> Vec<i64> {
        self.pairs.iter().map(|(w, _)| *w).collect()
    }
}

/// The `(m+1)`-dimensional irreducible right sl2-module `V_m` on the basis
/// `x_0..x_m`: `[x_k,h] = (m-2k) x_k`, `[x_k,f] = x_{k+1}`,
/// `[x_k,e] = -k(m+1-k) x_{k-1}`.
pub fn irreducible_module<F: Field>(m: usize) -> ModuleAction<F> {
    let d = m + 1;
    let mi = m as i64;
    let mut r_e = Matrix::zeros(d, d);
    let mut r_h = Matrix::zeros(d, d);
    let mut r_f = Matrix::zeros(d, d);
    for k in 0..d {
        let ki = k as i64;
        r_h.set(k, k, F::int(mi - 2 * ki));
        if k + 1 < d {
            r_f.set(k + 1, k, F::one());
        }
        if k >= 1 {
            r_e.set(k - 1, k, F::int(-ki * (mi + 1 - ki)));
        }
    }
    ModuleAction::new(sl2_canonical(), d, vec![r_e, r_h, r_f])
        .expect("three square matrices for sl2")
}

/// Splits the module into eigenspaces of `matrices[h_index]`.
///
/// Eigenvalues are located by scanning the integers in
/// `[-module_dim, module_dim]`; anything with a non-integer or
/// non-semisimple `h`-action is rejected.
pub fn weight_decomposition<F: Field>(
    action: &ModuleAction<F>,
    h_index: usize,
) -> Result<WeightDecomposition<F>, RepsError> {
    let d = action.module_dim();
    let r_h = action.matrix(h_index);
    let shifted_by = |w: i64| {
        let mut m = r_h.clone();
        for k in 0..d {
            let v = m.get(k, k).clone() - F::int(w);
            m.set(k, k, v);
        }
        m
    };
    let mut pairs = Vec::new();
    let mut covered = 0;
    let bound = d as i64;
    for w in (-bound..=bound).rev() {
        let space = kernel(&shifted_by(w));
        if !space.is_zero() {
            covered += space.dim();
            pairs.push((w, space));
            if covered == d {
                break;
            }
        }
    }
    if covered != d {
        // Distinguish a non-integer eigenvalue from a nilpotent part: the
        // product of (R_h - w)^d over all integer candidates kills every
        // generalized eigenspace with integer eigenvalue.
        let mut prod = Matrix::identity(d);
        for w in -bound..=bound {
            let shifted = shifted_by(w);
            for _ in 0..d {
                prod = prod.mul(&shifted);
                if prod.is_zero() {
                    break;
                }
            }
            if prod.is_zero() {
                break;
            }
        }
        return if prod.is_zero() {
            Err(RepsError::NonDiagonalizable)
        } else {
            Err(RepsError::NonIntegerSpectrum)
        };
    }
    Ok(WeightDecomposition { pairs })
}

fn expect_sl2_actor<F: Field>(action: &ModuleAction<F>) -> Result<(), RepsError> {
    let canon = sl2_canonical::<F>();
    if action.actor().dim() != 3 {
        return Err(RepsError::NotSl2Actor);
    }
    for i in 0..3 {
        for j in 0..3 {
            if action.actor().product_entries(i, j) != canon.product_entries(i, j) {
                return Err(RepsError::NotSl2Actor);
            }
        }
    }
    Ok(())
}

/// Decomposes a right sl2-module into irreducible summands.
///
/// Highest-weight vectors are taken from `ker R_e` intersected with the
/// weight spaces, processed in strictly decreasing weight order, skipping
/// anything already inside previously generated summands (ties broken by the
/// canonical basis order of the eigenspace). Each vector is expanded into a
/// summand by repeated application of `R_f`.
pub fn decompose<F: Field>(
    action: &ModuleAction<F>,
) -> Result<Vec<(usize, Subspace<F>)>, RepsError> {
    expect_sl2_actor(action)?;
    if let Err((a, b)) = action.check_homomorphism() {
        return Err(RepsError::DecompositionFailed(format!(
            "module law fails on actor pair ({a}, {b})"
        )));
    }
    let d = action.module_dim();
    if d == 0 {
        return Ok(Vec::new());
    }
    let weights = weight_decomposition(action, 1)?;
    let r_e = action.matrix(0);
    let r_f = action.matrix(2);
    let ker_e = kernel(r_e);

    let mut generated = Subspace::zero(d);
    let mut out = Vec::new();
    for (w, space) in &weights.pairs {
        let candidates = ker_e
            .intersect(space)
            .expect("module-sized subspaces");
        for v in candidates.basis_rows() {
            if generated.contains(&v) {
                continue;
            }
            if *w < 0 {
                return Err(RepsError::DecompositionFailed(format!(
                    "highest-weight vector at negative weight {w}"
                )));
            }
            let expected = *w as usize + 1;
            let mut chain = vec![v.clone()];
            let mut cur = v;
            loop {
                let next = r_f.apply(&cur);
                if next.iter().all(|c| c.is_zero()) {
                    break;
                }
                if chain.len() == expected {
                    return Err(RepsError::DecompositionFailed(format!(
                        "f-chain from weight {w} does not stop after {expected} vectors"
                    )));
                }
                chain.push(next.clone());
                cur = next;
            }
            if chain.len() != expected {
                return Err(RepsError::DecompositionFailed(format!(
                    "f-chain from weight {w} has length {}, expected {expected}",
                    chain.len()
                )));
            }
            let summand = Subspace::span(d, &chain);
            let grown = generated.sum(&summand).expect("module-sized subspaces");
            if summand.dim() != expected || grown.dim() != generated.dim() + expected {
                return Err(RepsError::DecompositionFailed(
                    "summand overlaps previously generated submodules".into(),
                ));
            }
            generated = grown;
            out.push((*w as usize, summand));
        }
    }
    if generated.dim() != d {
        return Err(RepsError::DecompositionFailed(format!(
            "summands span {} of {} dimensions",
            generated.dim(),
            d
        )));
    }
    Ok(out)
}

/// True iff the module is a single irreducible summand.
pub fn is_irreducible<F: Field>(action: &ModuleAction<F>) -> Result<bool, RepsError> {
    Ok(decompose(action)?.len() == 1)
}

/// Restricts right multiplication in `algebra` to an invariant `module`
/// subspace, acted on by an `actor` subalgebra.
///
/// Matrices are expressed in the canonical bases of the two subspaces, and
/// the acting algebra is the bracket induced on the actor coordinates.
pub fn action_from_algebra<F: Field>(
    algebra: &AlgebraStructure<F>,
    module: &Subspace<F>,
    actor: &Subspace<F>,
) -> Result<ModuleAction<F>, RepsError> {
    let module_rows = module.basis_rows();
    let actor_rows = actor.basis_rows();

    let mut induced = AlgebraStructure::new(
        (0..actor.dim()).map(|k| format!("a{k}")).collect(),
    )?;
    for (p, ap) in actor_rows.iter().enumerate() {
        for (q, aq) in actor_rows.iter().enumerate() {
            let w = algebra.product(ap, aq)?;
            let coords = actor.coordinates(&w).ok_or_else(|| {
                RepsError::NotInvariant("actor is not a subalgebra".into())
            })?;
            let entries = coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .collect();
            induced.set_product(p, q, entries);
        }
    }

    let mut matrices = Vec::with_capacity(actor.dim());
    for aj in &actor_rows {
        let mut m = Matrix::zeros(module.dim(), module.dim());
        for (k, mk) in module_rows.iter().enumerate() {
            let w = algebra.product(mk, aj)?;
            let coords = module.coordinates(&w).ok_or_else(|| {
                RepsError::NotInvariant(
                    "[module, actor] leaves the module subspace".into(),
                )
            })?;
            for (l, c) in coords.into_iter().enumerate() {
                if !c.is_zero() {
                    m.set(l, k, c);
                }
            }
        }
        matrices.push(m);
    }
    ModuleAction::new(induced, module.dim(), matrices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{GaussianScalar, Scalar};

    fn int(n: i64) -> Scalar {
        GaussianScalar::from_int(n)
    }

    #[test]
    fn trivial_module_is_all_zero() {
        let v0: ModuleAction<Scalar> = irreducible_module(0);
        assert_eq!(v0.module_dim(), 1);
        assert!(v0.matrices().iter().all(Matrix::is_zero));
    }

    #[test]
    fn v1_matrices() {
        let v1: ModuleAction<Scalar> = irreducible_module(1);
        // R_h = diag(1, -1)
        assert_eq!(*v1.matrix(1).get(0, 0), int(1));
        assert_eq!(*v1.matrix(1).get(1, 1), int(-1));
        // R_f shifts x0 -> x1
        assert_eq!(*v1.matrix(2).get(1, 0), int(1));
        // R_e sends x1 -> -x0
        assert_eq!(*v1.matrix(0).get(0, 1), int(-1));
    }

    #[test]
    fn v2_e_action() {
        let v2: ModuleAction<Scalar> = irreducible_module(2);
        // [x_1, e] = -1 * (2+1-1) x_0 = -2 x_0
        assert_eq!(*v2.matrix(0).get(0, 1), int(-2));
    }

    #[test]
    fn homomorphism_law_holds_up_to_m8() {
        for m in 0..=8 {
            let vm: ModuleAction<Scalar> = irreducible_module(m);
            assert!(vm.check_homomorphism().is_ok(), "V_{m}");
        }
    }

    #[test]
    fn weights_of_v2() {
        let v2: ModuleAction<Scalar> = irreducible_module(2);
        let wd = weight_decomposition(&v2, 1).unwrap();
        assert_eq!(wd.weights(), vec![2, 0, -2]);
        assert!(wd.pairs.iter().all(|(_, s)| s.dim() == 1));
    }

    #[test]
    fn weights_of_v1_plus_v1() {
        let v1: ModuleAction<Scalar> = irreducible_module(1);
        let sum = ModuleAction::direct_sum(&[&v1, &v1]).unwrap();
        let wd = weight_decomposition(&sum, 1).unwrap();
        assert_eq!(wd.weights(), vec![1, -1]);
        assert!(wd.pairs.iter().all(|(_, s)| s.dim() == 2));
    }

    #[test]
    fn zero_action_is_one_weight() {
        let actor = sl2_canonical::<Scalar>();
        let zero = ModuleAction::new(
            actor,
            3,
            vec![Matrix::zeros(3, 3), Matrix::zeros(3, 3), Matrix::zeros(3, 3)],
        )
        .unwrap();
        let wd = weight_decomposition(&zero, 1).unwrap();
        assert_eq!(wd.weights(), vec![0]);
        assert_eq!(wd.pairs[0].1, Subspace::full(3));
    }

    #[test]
    fn non_integer_spectrum_detected() {
        let actor = sl2_canonical::<Scalar>();
        let mut half = Matrix::zeros(1, 1);
        half.set(0, 0, GaussianScalar::from_fraction(1, 2));
        let act = ModuleAction::new(
            actor,
            1,
            vec![Matrix::zeros(1, 1), half, Matrix::zeros(1, 1)],
        )
        .unwrap();
        assert!(matches!(
            weight_decomposition(&act, 1),
            Err(RepsError::NonIntegerSpectrum)
        ));
    }

    #[test]
    fn nilpotent_h_detected() {
        let actor = sl2_canonical::<Scalar>();
        let jordan = Matrix::from_int_rows(&[&[0, 1], &[0, 0]]);
        let act = ModuleAction::new(
            actor,
            2,
            vec![Matrix::zeros(2, 2), jordan, Matrix::zeros(2, 2)],
        )
        .unwrap();
        assert!(matches!(
            weight_decomposition(&act, 1),
            Err(RepsError::NonDiagonalizable)
        ));
    }

    #[test]
    fn irreducible_stays_whole() {
        let v5: ModuleAction<Scalar> = irreducible_module(5);
        let parts = decompose(&v5).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, 5);
        assert_eq!(parts[0].1.dim(), 6);
        assert!(is_irreducible(&v5).unwrap());
    }

    #[test]
    fn block_sum_recovers_dimensions() {
        let v2: ModuleAction<Scalar> = irreducible_module(2);
        let v3: ModuleAction<Scalar> = irreducible_module(3);
        let sum = ModuleAction::direct_sum(&[&v2, &v3, &v3]).unwrap();
        let parts = decompose(&sum).unwrap();
        let mut dims: Vec<usize> = parts.iter().map(|(_, s)| s.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![3, 4, 4]);
        for (w, s) in &parts {
            assert_eq!(s.dim(), w + 1);
        }
    }

    #[test]
    fn zero_module_splits_into_trivial_lines() {
        let actor = sl2_canonical::<Scalar>();
        let zero = ModuleAction::new(
            actor,
            3,
            vec![Matrix::zeros(3, 3), Matrix::zeros(3, 3), Matrix::zeros(3, 3)],
        )
        .unwrap();
        let parts = decompose(&zero).unwrap();
        assert_eq!(parts.len(), 3);
        assert!(parts.iter().all(|(w, s)| *w == 0 && s.dim() == 1));
        assert!(!is_irreducible(&zero).unwrap());

        let one = ModuleAction::new(
            sl2_canonical::<Scalar>(),
            1,
            vec![Matrix::zeros(1, 1), Matrix::zeros(1, 1), Matrix::zeros(1, 1)],
        )
        .unwrap();
        assert!(is_irreducible(&one).unwrap());
    }

    #[test]
    fn v1_plus_v1_is_reducible() {
        let v1: ModuleAction<Scalar> = irreducible_module(1);
        let sum = ModuleAction::direct_sum(&[&v1, &v1]).unwrap();
        assert!(!is_irreducible(&sum).unwrap());
    }

    #[test]
    fn broken_module_is_rejected() {
        let mut v2: ModuleAction<Scalar> = irreducible_module(2);
        v2.matrices[0].set(2, 0, int(1));
        assert!(decompose(&v2).is_err());
    }
}
