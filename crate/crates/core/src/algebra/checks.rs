//! Identity checks and structural invariants of a structure tensor.


use super::structure::AlgebraStructure;
use crate::field::Field;
use crate::linalg::{kernel, Matrix, Subspace};

/// One failing basis triple of the Leibniz identity, with its defect
/// `[x,[y,z]] - [[x,y],z] + [[x,z],y]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizViolation<F> {
    pub triple: (usize, usize, usize),
    pub defect: Vec<F>,
}

/// Outcome of the exhaustive `dim^3` Leibniz sweep.
#[derive(Clone, Debug, PartialEq)]
pub struct LeibnizReport<F> {
    pub violations: Vec<LeibnizViolation<F>>,
}

impl<F> LeibnizReport<F> {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Squares ideal together with how the closure behaved.
#[derive(Clone, Debug, PartialEq)]
pub struct SquaresIdeal<F> {
    pub subspace: Subspace<F>,
    /// Number of closure passes executed; 1 means the initial span of
    /// squares was already closed under bracketing.
    pub closure_passes: usize,
}

/// Derived and lower central series, with the solvability verdicts and the
/// right annihilator `{x : [y,x] = 0 for all y}`.
#[derive(Clone, Debug)]
pub struct SolvabilityInvariants<F> {
    pub derived_series: Vec<Subspace<F>>,
    pub lower_central: Vec<Subspace<F>>,
    pub is_solvable: bool,
    pub is_nilpotent: bool,
    pub right_annihilator: Subspace<F>,
}

impl<F: Field> AlgebraStructure<F> {
    /// Accumulates the Leibniz defect of the basis triple `(i, j, k)` into
    /// `acc`, tracking touched indices in `dirty`.
    fn leibniz_defect_into(&self, i: usize, j: usize, k: usize, acc: &mut [F], dirty: &mut Vec<usize>) {
        let add = |idx: usize, v: F, acc: &mut [F], dirty: &mut Vec<usize>| {
            if acc[idx].is_zero() {
                dirty.push(idx);
            }
            acc[idx] = acc[idx].clone() + v;
        };
        // [b_i, [b_j, b_k]]
        for (m, c) in self.product_entries(j, k) {
            for (l, d) in self.product_entries(i, *m) {
                add(*l, c.clone() * d.clone(), acc, dirty);
            }
        }
        // -[[b_i, b_j], b_k]
        for (m, c) in self.product_entries(i, j) {
            for (l, d) in self.product_entries(*m, k) {
                add(*l, -(c.clone() * d.clone()), acc, dirty);
            }
        }
        // +[[b_i, b_k], b_j]
        for (m, c) in self.product_entries(i, k) {
            for (l, d) in self.product_entries(*m, j) {
                add(*l, c.clone() * d.clone(), acc, dirty);
            }
        }
    }

    /// Verifies `[x,[y,z]] = [[x,y],z] - [[x,z],y]` on every basis triple and
    /// reports all violations.
    pub fn check_leibniz(&self) -> LeibnizReport<F> {
        let dim = self.dim();
        let mut violations = Vec::new();
        let mut acc = vec![F::zero(); dim];
        let mut dirty: Vec<usize> = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    self.leibniz_defect_into(i, j, k, &mut acc, &mut dirty);
                    if dirty.iter().any(|&l| !acc[l].is_zero()) {
                        let mut defect = vec![F::zero(); dim];
                        for &l in &dirty {
                            defect[l] = acc[l].clone();
                        }
                        violations.push(LeibnizViolation {
                            triple: (i, j, k),
                            defect,
                        });
                    }
                    for l in dirty.drain(..) {
                        acc[l] = F::zero();
                    }
                }
            }
        }
        LeibnizReport { violations }
    }

    /// Like [`Self::check_leibniz`] but stops at the first violation.
    pub fn is_leibniz(&self) -> bool {
        let dim = self.dim();
        let mut acc = vec![F::zero(); dim];
        let mut dirty: Vec<usize> = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    self.leibniz_defect_into(i, j, k, &mut acc, &mut dirty);
                    let bad = dirty.iter().any(|&l| !acc[l].is_zero());
                    for l in dirty.drain(..) {
                        acc[l] = F::zero();
                    }
                    if bad {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// True iff the bracket is antisymmetric on all basis pairs and the
    /// Leibniz identity holds, i.e. the algebra is Lie.
    pub fn check_lie(&self) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..=i {
                let ij = self.product_of_basis(i, j);
                let ji = self.product_of_basis(j, i);
                let sym: Vec<F> = ij
                    .iter()
                    .zip(&ji)
                    .map(|(a, b)| a.clone() + b.clone())
                    .collect();
                if sym.iter().any(|c| !c.is_zero()) {
                    return false;
                }
            }
        }
        self.is_leibniz()
    }

    pub fn is_abelian(&self) -> bool {
        self.nonzero_pairs().next().is_none()
    }

    /// The ideal generated by squares: the span of `[x,x]` closed under left
    /// and right bracketing with the whole algebra.
    ///
    /// For a genuine Leibniz algebra the initial span is already an ideal and
    /// the closure adds nothing, but the closure still runs so malformed
    /// tensors get a well-defined answer.
    pub fn squares_ideal_detailed(&self) -> SquaresIdeal<F> {
        let dim = self.dim();
        let mut gens: Vec<Vec<F>> = Vec::new();
        for i in 0..dim {
            let sq = self.product_of_basis(i, i);
            if sq.iter().any(|c| !c.is_zero()) {
                gens.push(sq);
            }
            for j in 0..i {
                let ij = self.product_of_basis(i, j);
                let ji = self.product_of_basis(j, i);
                let sym: Vec<F> = ij
                    .iter()
                    .zip(&ji)
                    .map(|(a, b)| a.clone() + b.clone())
                    .collect();
                if sym.iter().any(|c| !c.is_zero()) {
                    gens.push(sym);
                }
            }
        }
        let mut span = Subspace::span(dim, &gens);
        let full = self.full_space();
        let mut passes = 0;
        loop {
            passes += 1;
            let left = self
                .bracket_subspaces(&full, &span)
                .expect("ambient dimensions agree");
            let right = self
                .bracket_subspaces(&span, &full)
                .expect("ambient dimensions agree");
            let grown = span
                .sum(&left)
                .and_then(|s| s.sum(&right))
                .expect("ambient dimensions agree");
            if grown == span {
                return SquaresIdeal {
                    subspace: span,
                    closure_passes: passes,
                };
            }
            span = grown;
        }
    }

    pub fn squares_ideal(&self) -> Subspace<F> {
        self.squares_ideal_detailed().subspace
    }

    /// Derived series, lower central series, and the right annihilator.
    pub fn solvability_invariants(&self) -> SolvabilityInvariants<F> {
        let full = self.full_space();

        let mut derived_series = vec![full.clone()];
        loop {
            let last = derived_series.last().unwrap();
            let next = self
                .bracket_subspaces(last, last)
                .expect("ambient dimensions agree");
            if &next == last {
                break;
            }
            derived_series.push(next);
        }

        let mut lower_central = vec![full.clone()];
        loop {
            let last = lower_central.last().unwrap();
            let next = self
                .bracket_subspaces(last, &full)
                .expect("ambient dimensions agree");
            if &next == last {
                break;
            }
            lower_central.push(next);
        }

        let is_solvable = derived_series.last().unwrap().is_zero();
        let is_nilpotent = lower_central.last().unwrap().is_zero();

        // [b_i, x] = 0 for all i: rows indexed by (i, k), columns by j.
        let dim = self.dim();
        let mut m = Matrix::zeros(dim * dim, dim);
        for i in 0..dim {
            for j in 0..dim {
                for (k, c) in self.product_entries(i, j) {
                    m.set(i * dim + k, j, c.clone());
                }
            }
        }
        let right_annihilator = kernel(&m);

        SolvabilityInvariants {
            derived_series,
            lower_central,
            is_solvable,
            is_nilpotent,
            right_annihilator,
        }
    }
}
