//! Product-vanishing checks for the splitting structure, the submodule-count
//! claim for twin-block algebras, the action-uniformity claim, and the
//! dichotomy between twin-block normal forms and split second copies.


use super::report::VerdictReport;
use super::VerifyError;
use crate::algebra::AlgebraStructure;
use crate::field::Field;
use crate::linalg::Subspace;
use crate::reps::{action_from_algebra, decompose, is_irreducible};

/// Named coordinate blocks of an algebra: the sl2 copies, the solvable part
/// (if any), and the ideal.
#[derive(Debug, Clone)]
pub struct SplittingBlocks<F> {
    pub sl2: Vec<Subspace<F>>,
    pub solvable: Option<Subspace<F>>,
    pub ideal: Subspace<F>,
}

impl<F: Field> SplittingBlocks<F> {
    /// Natural blocks of a catalog-shaped algebra, read off the labels:
    /// `e*/h*/f*` triples, `y*`, and `x*`.
    pub fn from_labels(alg: &AlgebraStructure<F>) -> Result<Self, VerifyError> {
        let dim = alg.dim();
        let mut sl2_axes: Vec<Vec<usize>> = Vec::new();
        let mut y_axes: Vec<usize> = Vec::new();
        let mut x_axes: Vec<usize> = Vec::new();
        for (idx, label) in alg.labels().iter().enumerate() {
            match label.chars().next() {
                Some('e') | Some('h') | Some('f') => {
                    let copy: usize = label[1..].parse().unwrap_or(1);
                    while sl2_axes.len() < copy {
                        sl2_axes.push(Vec::new());
                    }
                    sl2_axes[copy - 1].push(idx);
                }
                Some('y') => y_axes.push(idx),
                Some('x') => x_axes.push(idx),
                _ => {
                    return Err(VerifyError::BadShape(format!(
                        "label {label:?} is not part of a catalog layout"
                    )))
                }
            }
        }
        if sl2_axes.iter().any(|a| a.len() != 3) {
            return Err(VerifyError::BadShape(
                "every sl2 copy needs exactly e, h, f".into(),
            ));
        }
        Ok(SplittingBlocks {
            sl2: sl2_axes
                .iter()
                .map(|a| Subspace::coordinate(dim, a))
                .collect(),
            solvable: if y_axes.is_empty() {
                None
            } else {
                Some(Subspace::coordinate(dim, &y_axes))
            },
            ideal: Subspace::coordinate(dim, &x_axes),
        })
    }

    fn check_partition(&self, dim: usize) -> Result<(), VerifyError> {
        let mut total = Subspace::zero(dim);
        let mut count = 0;
        let mut parts: Vec<&Subspace<F>> = self.sl2.iter().collect();
        if let Some(r) = &self.solvable {
            parts.push(r);
        }
        parts.push(&self.ideal);
        for p in parts {
            if p.ambient_dim() != dim {
                return Err(VerifyError::BlockMismatch(
                    "block ambient dimension differs from the algebra".into(),
                ));
            }
            count += p.dim();
            total = total.sum(p).expect("ambient dimensions agree");
        }
        if count != dim || total.dim() != dim {
            return Err(VerifyError::BlockMismatch(format!(
                "blocks cover {} of {} dimensions (sum of block dims {})",
                total.dim(),
                dim,
                count
            )));
        }
        Ok(())
    }
}

/// Checks the product-vanishing structure of a split algebra:
/// `[sl2^t, sl2^t] = sl2^t`, `[sl2^i, sl2^j] = 0` for `i != j`,
/// `[R, sl2^i] = [sl2^i, R] = 0` for `i >= 2`, invariance and irreducibility
/// of the ideal over the first copy, and (when that holds) `[I, sl2^j] = 0`
/// for `j >= 2`.
pub fn verify_splitting<F: Field>(
    alg: &AlgebraStructure<F>,
    blocks: &SplittingBlocks<F>,
) -> Result<VerdictReport, VerifyError> {
    blocks.check_partition(alg.dim())?;
    let mut report = VerdictReport::new("thm-3.4");
    let s = blocks.sl2.len();

    for t in 0..s {
        let b = alg.bracket_subspaces(&blocks.sl2[t], &blocks.sl2[t])?;
        report.record(
            &format!("lemma-3.2 [sl2^{0},sl2^{0}]=sl2^{0}", t + 1),
            b == blocks.sl2[t],
            format!("bracket has dimension {}", b.dim()),
        );
    }
    for i in 0..s {
        for j in 0..s {
            if i == j {
                continue;
            }
            let b = alg.bracket_subspaces(&blocks.sl2[i], &blocks.sl2[j])?;
            report.record(
                &format!("lemma-3.2 [sl2^{},sl2^{}]=0", i + 1, j + 1),
                b.is_zero(),
                format!("bracket has dimension {}", b.dim()),
            );
        }
    }

    if let Some(r) = &blocks.solvable {
        for i in 1..s {
            let left = alg.bracket_subspaces(r, &blocks.sl2[i])?;
            let right = alg.bracket_subspaces(&blocks.sl2[i], r)?;
            report.record(
                &format!("lemma-3.3 [R,sl2^{0}]=[sl2^{0},R]=0", i + 1),
                left.is_zero() && right.is_zero(),
                format!("dims {} and {}", left.dim(), right.dim()),
            );
        }
    }

    let into_ideal = alg.bracket_subspaces(&blocks.ideal, &blocks.sl2[0])?;
    let invariant = blocks.ideal.contains_subspace(&into_ideal);
    report.record(
        "[I,sl2^1] contained in I",
        invariant,
        format!("bracket has dimension {}", into_ideal.dim()),
    );

    // Lemma 3.1 presumes I is an irreducible module over exactly one copy.
    // When several copies act nontrivially that hypothesis is gone and the
    // vanishing claims do not apply.
    let mut acting = Vec::new();
    for (j, copy) in blocks.sl2.iter().enumerate() {
        if !alg.bracket_subspaces(&blocks.ideal, copy)?.is_zero() {
            acting.push(j);
        }
    }
    let multiple_act = acting.len() >= 2;

    if multiple_act {
        report.skip(
            "I irreducible over sl2^1",
            format!("not applicable: {} sl2 copies act on I", acting.len()),
        );
    } else if invariant && !blocks.ideal.is_zero() {
        match action_from_algebra(alg, &blocks.ideal, &blocks.sl2[0])
            .and_then(|action| is_irreducible(&action))
        {
            Ok(irr) => report.record(
                "I irreducible over sl2^1",
                irr,
                if irr {
                    "single irreducible summand".to_string()
                } else {
                    "I splits over sl2^1".to_string()
                },
            ),
            Err(e) => report.record("I irreducible over sl2^1", false, e.to_string()),
        }
    }

    for j in 1..s {
        let name = format!("lemma-3.1 [I,sl2^{}]=0", j + 1);
        if multiple_act {
            report.skip(&name, "not applicable: several sl2 copies act on I");
            continue;
        }
        let b = alg.bracket_subspaces(&blocks.ideal, &blocks.sl2[j])?;
        report.record(&name, b.is_zero(), format!("bracket has dimension {}", b.dim()));
    }

    Ok(report)
}

/// Blocks of an algebra with at least two sl2 copies and a nonzero x-span
/// ideal, read off the labels.
fn two_copy_blocks<F: Field>(
    alg: &AlgebraStructure<F>,
) -> Result<SplittingBlocks<F>, VerifyError> {
    let blocks = SplittingBlocks::from_labels(alg)?;
    if blocks.sl2.len() < 2 {
        return Err(VerifyError::BadShape(
            "need at least two sl2 copies".into(),
        ));
    }
    if blocks.ideal.is_zero() {
        return Err(VerifyError::BadShape("no x-labeled ideal".into()));
    }
    Ok(blocks)
}

/// Submodule-count claim for twin-block algebras: decomposing the ideal over
/// the second copy yields `dim(I)/2` summands of dimension 2 whose sum is
/// `I_1 ∩ I_2`, where `I_k = [I, sl2^k]`.
///
/// When one of the brackets `I_k` vanishes the hypothesis is vacuous and the
/// corresponding comparison is reported as skipped.
pub fn verify_thm28<F: Field>(alg: &AlgebraStructure<F>) -> Result<VerdictReport, VerifyError> {
    let blocks = two_copy_blocks(alg)?;
    let (ideal, sl2_1, sl2_2) = (&blocks.ideal, &blocks.sl2[0], &blocks.sl2[1]);
    let mut report = VerdictReport::new("thm-2.7");

    let i1 = alg.bracket_subspaces(ideal, sl2_1)?;
    let i2 = alg.bracket_subspaces(ideal, sl2_2)?;
    if i2.is_zero() {
        report.skip(
            "summand-count",
            "I2 = [I, sl2^2] is zero; the second copy acts trivially",
        );
        return Ok(report);
    }

    let expected = ideal.dim() / 2;
    let action = action_from_algebra(alg, ideal, sl2_2)?;
    let parts = decompose(&action)?;
    report.record(
        "summand-count",
        ideal.dim() % 2 == 0 && parts.len() == expected,
        format!("{} summands, expected {}", parts.len(), expected),
    );
    let all_dim2 = parts.iter().all(|(_, s)| s.dim() == 2);
    report.record(
        "summand-dimension",
        all_dim2,
        format!(
            "dims {:?}",
            parts.iter().map(|(_, s)| s.dim()).collect::<Vec<_>>()
        ),
    );

    // Summands live in ideal coordinates; lift them back into the algebra.
    let mut lifted: Vec<Vec<F>> = Vec::new();
    let ideal_rows = ideal.basis_rows();
    for (_, s) in &parts {
        for row in s.basis_rows() {
            let mut v = vec![F::zero(); alg.dim()];
            for (t, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    for (col, b) in ideal_rows[t].iter().enumerate() {
                        if !b.is_zero() {
                            v[col] = v[col].clone() + c.clone() * b.clone();
                        }
                    }
                }
            }
            lifted.push(v);
        }
    }
    let sum = Subspace::span(alg.dim(), &lifted);
    if i1.is_zero() {
        report.skip(
            "sum-is-i1-meet-i2",
            "I1 = [I, sl2^1] is zero (m = 0); the count hypothesis is vacuous",
        );
    } else {
        let meet = i1.intersect(&i2).expect("ambient dimensions agree");
        report.record(
            "sum-is-i1-meet-i2",
            sum == meet,
            format!("sum dim {}, intersection dim {}", sum.dim(), meet.dim()),
        );
    }
    Ok(report)
}

/// Instance dichotomy for a two-copy algebra with twin blocks: either the
/// ideal splits over the second copy into `dim(I)/2` irreducible
/// 2-dimensional summands, or the second copy annihilates the ideal.
pub fn verify_thm43<F: Field>(alg: &AlgebraStructure<F>) -> Result<VerdictReport, VerifyError> {
    let blocks = two_copy_blocks(alg)?;
    let (ideal, sl2_2) = (&blocks.ideal, &blocks.sl2[1]);
    let mut report = VerdictReport::new("thm-4.3");

    let action = action_from_algebra(alg, ideal, sl2_2)?;
    let parts = decompose(&action)?;
    let expected = ideal.dim() / 2;
    let condition_c = ideal.dim() % 2 == 0
        && parts.len() == expected
        && parts.iter().all(|(_, s)| s.dim() == 2);
    if condition_c {
        report.record(
            "dichotomy",
            true,
            format!("condition (c) holds: {expected} summands of dimension 2"),
        );
        return Ok(report);
    }
    let i2 = alg.bracket_subspaces(ideal, sl2_2)?;
    report.record(
        "dichotomy",
        i2.is_zero(),
        if i2.is_zero() {
            "second copy annihilates I: the algebra splits off sl2^2".to_string()
        } else {
            format!(
                "neither branch holds: {} summands, [I,sl2^2] has dimension {}",
                parts.len(),
                i2.dim()
            )
        },
    );
    Ok(report)
}

/// Uniformity of the second-copy action across the weight index: every
/// `[x_i^j, g]` for `g` in the second copy must stay inside `span(x_i^1,
/// x_i^2)` with coefficients independent of `i`.
pub fn verify_prop41<F: Field>(alg: &AlgebraStructure<F>) -> Result<VerdictReport, VerifyError> {
    let dim = alg.dim();
    if dim < 8 || (dim - 6) % 2 != 0 {
        return Err(VerifyError::BadShape(format!(
            "expected dimension 6 + 2(m+1), got {dim}"
        )));
    }
    let m = (dim - 6) / 2 - 1;
    for l in ["e2", "h2", "f2", "x0^1", "x0^2", &format!("x{m}^2")] {
        alg.label_index(l)
            .map_err(|_| VerifyError::BadShape(format!("missing basis label {l:?}")))?;
    }
    let mut report = VerdictReport::new("prop-4.1");
    let idx = |l: String| alg.label_index(&l).expect("twin block labels checked");
    let x = |j: usize, i: usize| idx(format!("x{i}^{j}"));

    for (g_label, g) in [("e2", 3usize), ("h2", 4), ("f2", 5)] {
        let mut uniform = true;
        let mut confined = true;
        let mut reference: Option<[F; 4]> = None;
        for i in 0..=m {
            let rows = [x(1, i), x(2, i)];
            for &r in &rows {
                for (k, _) in alg.product_entries(r, g) {
                    if *k != rows[0] && *k != rows[1] {
                        confined = false;
                    }
                }
            }
            let block = [
                alg.constant(rows[0], g, rows[0]),
                alg.constant(rows[0], g, rows[1]),
                alg.constant(rows[1], g, rows[0]),
                alg.constant(rows[1], g, rows[1]),
            ];
            match &reference {
                None => reference = Some(block),
                Some(b) => {
                    if *b != block {
                        uniform = false;
                    }
                }
            }
        }
        report.record(
            &format!("confined-{g_label}"),
            confined,
            "action keeps each weight line inside its own x-pair",
        );
        report.record(
            &format!("uniform-{g_label}"),
            uniform,
            "2x2 coefficient block is independent of the weight index",
        );
    }
    Ok(report)
}
