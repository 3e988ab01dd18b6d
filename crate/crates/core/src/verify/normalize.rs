//! Normalization of a generic two-block action to the canonical table.
//!
//! The basis change acts on the x-coordinates only, in two stages: first
//! `x^1' = A x^1 + B x^2`, `x^2' = (A a1 + B a3) x^1 + (A a2 - B a1) x^2`
//! with `(A, B)` chosen invertibly, which brings the `e_2` action to the
//! shift form; then `x^1'' = x^1' + b1' x^2''` absorbs the leftover `f_2`
//! diagonal. The result must equal the canonical two-block table exactly.


use super::eq_system::quadratic_vanishes;
use super::VerifyError;
use crate::algebra::{AlgebraStructure, BasisChange};
use crate::catalog::{build, build_generic_action, CatalogSpec, Family};
use crate::field::Field;
use crate::linalg::Matrix;

/// Brings `build_generic_action(m, coeffs)` to the canonical table, returning
/// the composite basis change and the transformed algebra.
pub fn normalize_action<F: Field>(
    m: usize,
    coeffs: [F; 6],
) -> Result<(BasisChange<F>, AlgebraStructure<F>), VerifyError> {
    let [a1, a2, a3, b1, b2, b3] = coeffs.clone();
    if a1.is_zero() && a2.is_zero() && a3.is_zero() {
        return Err(VerifyError::DegenerateAction);
    }
    if !quadratic_vanishes(&a1, &a2, &a3) {
        return Err(VerifyError::NotNormalizable(
            "a1^2 + a2*a3 != 0".into(),
        ));
    }
    if !quadratic_vanishes(&b1, &b2, &b3) {
        return Err(VerifyError::NotNormalizable(
            "b1^2 + b2*b3 != 0".into(),
        ));
    }
    let alg = build_generic_action(m, coeffs);
    if !alg.is_leibniz() {
        return Err(VerifyError::NotNormalizable(
            "coefficients do not satisfy the Leibniz identity".into(),
        ));
    }

    // (A, B) with A^2 a2 - 2AB a1 - B^2 a3 != 0. If a2 = 0 then a1 = 0 too
    // (the quadratic vanishes), so a3 != 0 and (0, 1) works.
    let (big_a, big_b) = if !a2.is_zero() {
        (F::one(), F::zero())
    } else {
        (F::zero(), F::one())
    };

    let dim = alg.dim();
    let blocks = m + 1;
    let x_off = 6;
    let x1 = |i: usize| x_off + i;
    let x2 = |i: usize| x_off + blocks + i;

    let mut t1 = Matrix::identity(dim);
    let p = big_a.clone() * a1.clone() + big_b.clone() * a3.clone();
    let q = big_a.clone() * a2.clone() - big_b.clone() * a1.clone();
    for i in 0..blocks {
        t1.set(x1(i), x1(i), big_a.clone());
        t1.set(x1(i), x2(i), big_b.clone());
        t1.set(x2(i), x1(i), p.clone());
        t1.set(x2(i), x2(i), q.clone());
    }
    let t1 = BasisChange::new(t1).map_err(|_| VerifyError::DegenerateAction)?;
    let step1 = alg.change_basis(&t1);

    // Leftover f2-diagonal in the new basis.
    let f2 = 5;
    let b1_new = step1.constant(x1(0), f2, x1(0));
    let mut t2 = Matrix::identity(dim);
    for i in 0..blocks {
        t2.set(x1(i), x2(i), b1_new.clone());
    }
    let t2 = BasisChange::new(t2).expect("unitriangular change is invertible");
    let normalized = step1.change_basis(&t2);

    let expected = build(&CatalogSpec::<F>::new(Family::Thm42).with_m(m))
        .expect("canonical spec is valid");
    if normalized != expected {
        return Err(VerifyError::NotNormalizable(
            "transformed tensor differs from the canonical table".into(),
        ));
    }
    Ok((t2.compose(&t1), normalized))
}
