//! Structural laws that every genuine Leibniz algebra in the catalog obeys:
//! the squares ideal is a two-sided, abelian, right-annihilating ideal whose
//! quotient is Lie, and all of it is basis-independent.

use leibniz_core::algebra::BasisChange;
use leibniz_core::catalog::{build, CatalogSpec, Family};
use leibniz_core::{Algebra, GaussianScalar, Matrix, Scalar, Subspace};

fn int(n: i64) -> Scalar {
    GaussianScalar::from_int(n)
}

fn l1(s: usize, m: usize, alpha: i64, a: i64) -> Algebra {
    build(
        &CatalogSpec::new(Family::L1)
            .with_s(s)
            .with_m(m)
            .with_alpha(int(alpha))
            .with_a(int(a)),
    )
    .unwrap()
}

fn sample_algebras() -> Vec<Algebra> {
    vec![
        build(&CatalogSpec::new(Family::Thm25).with_m(3).with_a(int(2))).unwrap(),
        l1(2, 2, 1, -1),
        l1(1, 4, 0, 0),
        build(&CatalogSpec::new(Family::L2).with_s(1).with_m(1).with_a(int(1))).unwrap(),
        build(&CatalogSpec::<Scalar>::new(Family::Thm42).with_m(2)).unwrap(),
        build(&CatalogSpec::<Scalar>::new(Family::SimpleSl2).with_m(4)).unwrap(),
    ]
}

#[test]
fn squares_ideal_is_two_sided_abelian_and_right_annihilating() {
    for alg in sample_algebras() {
        assert!(alg.check_leibniz().passed());
        let detailed = alg.squares_ideal_detailed();
        let ideal = &detailed.subspace;
        let full = alg.full_space();

        // closure adds nothing: the span of squares is already the ideal
        assert_eq!(detailed.closure_passes, 1);

        // two-sided
        let left = alg.bracket_subspaces(&full, ideal).unwrap();
        let right = alg.bracket_subspaces(ideal, &full).unwrap();
        assert!(ideal.contains_subspace(&right));
        // I sits inside the right annihilator: [L, I] = 0
        assert!(left.is_zero());
        // and is abelian
        assert!(alg.bracket_subspaces(ideal, ideal).unwrap().is_zero());
    }
}

#[test]
fn quotient_by_squares_ideal_is_lie() {
    for alg in sample_algebras() {
        let ideal = alg.squares_ideal();
        let (quot, _) = alg.quotient(&ideal).unwrap();
        assert!(quot.check_lie());
    }
}

#[test]
fn leibniz_check_is_basis_independent() {
    let alg = l1(1, 2, 1, 1);
    let n = alg.dim();
    // an assortment of invertible transforms: permutation-ish, shear, scaling
    let mut shear = Matrix::identity(n);
    shear.set(0, 4, int(3));
    shear.set(5, 1, int(-2));
    let mut scale = Matrix::identity(n);
    scale.set(2, 2, GaussianScalar::from_fraction(1, 3));
    scale.set(7, 7, GaussianScalar::i());
    let mut mix = Matrix::identity(n);
    for k in 0..n - 1 {
        mix.set(k, k + 1, int(1));
    }
    for t in [shear, scale, mix] {
        let change = BasisChange::new(t).unwrap();
        let moved = alg.change_basis(&change);
        assert!(moved.check_leibniz().passed());
    }

    // and a non-Leibniz tensor stays broken after a change of basis
    let mut bad = alg.clone();
    bad.set_product(0, 1, vec![(0, int(7))]);
    let mut t = Matrix::identity(n);
    t.set(1, 3, int(1));
    let moved = bad.change_basis(&BasisChange::new(t).unwrap());
    assert!(!moved.check_leibniz().passed());
}

#[test]
fn right_annihilator_contains_the_ideal() {
    let alg = l1(1, 3, 2, 3);
    let inv = alg.solvability_invariants();
    let ideal = alg.squares_ideal();
    assert!(inv.right_annihilator.contains_subspace(&ideal));
}

#[test]
fn bracket_of_ideal_with_h_line() {
    // [x_k, h] = (m-2k) x_k. For odd m every coefficient is nonzero and the
    // bracket is all of I; for m = 4 the middle vector x_2 drops out.
    let odd = l1(1, 3, 1, 2);
    let ideal = odd.squares_ideal();
    let h_line = odd.span_of_labels(&["h1"]).unwrap();
    assert_eq!(odd.bracket_subspaces(&ideal, &h_line).unwrap(), ideal);

    let even = l1(1, 4, 1, 2);
    let ideal4 = even.squares_ideal();
    let h_line4 = even.span_of_labels(&["h1"]).unwrap();
    let image = even.bracket_subspaces(&ideal4, &h_line4).unwrap();
    assert_eq!(ideal4.dim(), 5);
    assert_eq!(image.dim(), 4);
    let x2 = even.span_of_labels(&["x2"]).unwrap();
    assert!(!image.contains_subspace(&x2));

    // bracketing with the zero subspace gives zero
    let zero = Subspace::zero(even.dim());
    assert!(even.bracket_subspaces(&ideal4, &zero).unwrap().is_zero());
}

#[test]
fn squares_ideal_is_the_x_span() {
    let alg = l1(2, 3, 1, 1);
    let x_span = alg
        .span_of_labels(&["x0", "x1", "x2", "x3"])
        .unwrap();
    assert_eq!(alg.squares_ideal(), x_span);

    let thm42 = build(&CatalogSpec::<Scalar>::new(Family::Thm42).with_m(1)).unwrap();
    let x_span = thm42
        .span_of_labels(&["x0^1", "x1^1", "x0^2", "x1^2"])
        .unwrap();
    assert_eq!(thm42.squares_ideal(), x_span);
}

#[test]
fn quotient_of_l1_is_the_expected_head() {
    use leibniz_core::catalog::expected_quotient;
    let spec = CatalogSpec::new(Family::L1)
        .with_s(1)
        .with_m(4)
        .with_alpha(int(2))
        .with_a(int(3));
    let alg = build(&spec).unwrap();
    let (quot, _) = alg.quotient(&alg.squares_ideal()).unwrap();
    assert_eq!(quot.dim(), 6);
    assert!(quot.check_lie());
    assert_eq!(quot, expected_quotient(&spec).unwrap());
}

#[test]
fn quotient_of_assembly_recovers_the_subalgebra() {
    use leibniz_core::algebra::{AlgebraStructure, CrossAction};
    use leibniz_core::reps::{irreducible_module, sl2_canonical};

    let sl2 = sl2_canonical::<Scalar>();
    let module = irreducible_module::<Scalar>(3);
    let x_part = AlgebraStructure::abelian(
        (0..4).map(|k| format!("x{k}")).collect(),
    )
    .unwrap();
    let asm = AlgebraStructure::assemble(
        &[sl2.clone(), x_part],
        &[CrossAction {
            module_part: 1,
            actor_part: 0,
            matrices: module.matrices().to_vec(),
        }],
    )
    .unwrap();
    let ideal = asm.squares_ideal();
    assert_eq!(ideal.dim(), 4);
    let (quot, _) = asm.quotient(&ideal).unwrap();
    assert_eq!(quot, sl2);
}
