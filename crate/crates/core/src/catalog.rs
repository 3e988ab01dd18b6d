//! Constructors for the classified algebra families.
//!
//! Family names are stable strings used by the command line tool. Parameters:
//! `s` counts sl2 copies, `m` fixes the module dimension per block (`m+1`),
//! `alpha`/`a` are the scalar parameters of the solvable actions, `n` is the
//! sl_n rank. Basis order is always sl2 blocks first (`e_j,h_j,f_j` grouped),
//! then the `y`'s, then the `x`-blocks, so quotients by the x-span land on
//! the expected coordinates.


use thiserror::Error;

use crate::algebra::{AlgebraStructure, CrossAction};
use crate::field::Field;
use crate::reps::{irreducible_module, sl2_canonical, sln};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("bad catalog spec: {0}")]
    BadSpec(String),
}

/// The seven families the catalog can build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// One sl2 copy, 2-dimensional solvable part, irreducible x-block.
    Thm25,
    /// `s` sl2 copies, 2-dimensional solvable part, x-block over the first copy.
    Cor35,
    /// `s` sl2 copies, 3-dimensional solvable part, diagonal y-action.
    L1,
    /// `s` sl2 copies, 3-dimensional solvable part, Jordan-block y-action.
    L2,
    /// Two sl2 copies acting on twin x-blocks in the canonical normal form.
    Thm42,
    /// One sl2 copy acting irreducibly; no solvable part.
    SimpleSl2,
    /// sl_n plus a trivially acted 1- or 2-dimensional ideal.
    SlnTrivial,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Thm25,
        Family::Cor35,
        Family::L1,
        Family::L2,
        Family::Thm42,
        Family::SimpleSl2,
        Family::SlnTrivial,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Thm25 => "THM25",
            Family::Cor35 => "COR35",
            Family::L1 => "L1",
            Family::L2 => "L2",
            Family::Thm42 => "THM42",
            Family::SimpleSl2 => "SIMPLE_SL2",
            Family::SlnTrivial => "SLN_TRIVIAL",
        }
    }

    pub fn from_str(s: &str) -> Option<Family> {
        Family::ALL.iter().copied().find(|f| f.as_str() == s)
    }
}

/// Static description of a family: which parameters it takes and where its
/// table comes from.
#[derive(Debug, Clone, Copy)]
pub struct FamilyInfo {
    pub family: Family,
    pub name: &'static str,
    pub params: &'static [&'static str],
    pub citation: &'static str,
}

/// Descriptors for every family, for `catalog list` and parameter validation.
pub fn list_families() -> &'static [FamilyInfo] {
    &[
        FamilyInfo {
            family: Family::Thm25,
            name: "THM25",
            params: &["m", "a"],
            citation: "Theorem 2.5",
        },
        FamilyInfo {
            family: Family::Cor35,
            name: "COR35",
            params: &["s", "m", "a"],
            citation: "Corollary 3.5",
        },
        FamilyInfo {
            family: Family::L1,
            name: "L1",
            params: &["s", "m", "alpha", "a"],
            citation: "Theorem 2.6 / Corollary 3.6",
        },
        FamilyInfo {
            family: Family::L2,
            name: "L2",
            params: &["s", "m", "a"],
            citation: "Theorem 2.6 / Corollary 3.6",
        },
        FamilyInfo {
            family: Family::Thm42,
            name: "THM42",
            params: &["m"],
            citation: "Theorem 4.2",
        },
        FamilyInfo {
            family: Family::SimpleSl2,
            name: "SIMPLE_SL2",
            params: &["m"],
            citation: "Section 2 simple algebra",
        },
        FamilyInfo {
            family: Family::SlnTrivial,
            name: "SLN_TRIVIAL",
            params: &["n", "m"],
            citation: "Proposition 5.1 / Theorem 5.2",
        },
    ]
}

/// A fully parameterized build request.
#[derive(Debug, Clone)]
pub struct CatalogSpec<F> {
    pub family: Family,
    pub s: Option<usize>,
    pub m: Option<usize>,
    pub alpha: Option<F>,
    pub a: Option<F>,
    pub n: Option<usize>,
}

impl<F: Field> CatalogSpec<F> {
    pub fn new(family: Family) -> Self {
        CatalogSpec {
            family,
            s: None,
            m: None,
            alpha: None,
            a: None,
            n: None,
        }
    }

    pub fn with_s(mut self, s: usize) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_alpha(mut self, alpha: F) -> Self {
        self.alpha = Some(alpha);
        self
    }

    pub fn with_a(mut self, a: F) -> Self {
        self.a = Some(a);
        self
    }

    pub fn with_n(mut self, n: usize) -> Self {
        self.n = Some(n);
        self
    }

    fn info(&self) -> &'static FamilyInfo {
        list_families()
            .iter()
            .find(|i| i.family == self.family)
            .expect("every family is listed")
    }

    /// Checks that exactly the required parameters are present.
    pub fn validate(&self) -> Result<(), CatalogError> {
        let info = self.info();
        let given: &[(&str, bool)] = &[
            ("s", self.s.is_some()),
            ("m", self.m.is_some()),
            ("alpha", self.alpha.is_some()),
            ("a", self.a.is_some()),
            ("n", self.n.is_some()),
        ];
        for (name, present) in given {
            let required = info.params.contains(name);
            if *present && !required {
                return Err(CatalogError::BadSpec(format!(
                    "{} does not take parameter {name}",
                    info.name
                )));
            }
            if !*present && required {
                return Err(CatalogError::BadSpec(format!(
                    "{} requires parameter {name}",
                    info.name
                )));
            }
        }
        if let Some(s) = self.s {
            if s == 0 {
                return Err(CatalogError::BadSpec("s must be at least 1".into()));
            }
        }
        if self.family == Family::SlnTrivial {
            let m = self.m.unwrap_or(0);
            if m > 1 {
                return Err(CatalogError::BadSpec(
                    "SLN_TRIVIAL supports ideal dimension 1 or 2 (m = 0 or 1)".into(),
                ));
            }
        }
        Ok(())
    }

    /// Caveats a consumer should carry along with the built table.
    pub fn warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if matches!(
            self.family,
            Family::Thm25 | Family::Cor35 | Family::L1 | Family::L2
        ) && self.m == Some(2)
        {
            out.push(
                "m=2 gives dim I = 3, which the classification excludes; \
                 the table is still a Leibniz algebra"
                    .to_string(),
            );
        }
        out
    }
}

struct Layout {
    s: usize,
    n_y: usize,
    blocks: usize,
    m: usize,
}

impl Layout {
    fn labels(&self, sl2_subscripts: bool) -> Vec<String> {
        let mut labels = Vec::new();
        for j in 1..=self.s {
            if sl2_subscripts {
                labels.extend([format!("e{j}"), format!("h{j}"), format!("f{j}")]);
            } else {
                labels.extend(["e".to_string(), "h".to_string(), "f".to_string()]);
            }
        }
        for t in 1..=self.n_y {
            labels.push(format!("y{t}"));
        }
        for b in 1..=self.blocks {
            for k in 0..=self.m {
                if self.blocks == 1 {
                    labels.push(format!("x{k}"));
                } else {
                    labels.push(format!("x{k}^{b}"));
                }
            }
        }
        labels
    }

    fn y(&self, t: usize) -> usize {
        3 * self.s + (t - 1)
    }

    fn x(&self, block: usize, k: usize) -> usize {
        3 * self.s + self.n_y + (block - 1) * (self.m + 1) + k
    }
}

/// Installs a canonical sl2 table on indices `(off, off+1, off+2)`.
fn put_sl2_block<F: Field>(alg: &mut AlgebraStructure<F>, off: usize) {
    let two = F::int(2);
    alg.set_antisymmetric(off, off + 1, vec![(off, two.clone())]);
    alg.set_antisymmetric(off + 1, off + 2, vec![(off + 2, two)]);
    alg.set_antisymmetric(off, off + 2, vec![(off + 1, F::one())]);
}

/// Installs the irreducible right action of the sl2 block at `sl2_off` on the
/// x-block `block`: `[x_k,h] = (m-2k)x_k`, `[x_k,f] = x_{k+1}`,
/// `[x_k,e] = -k(m+1-k)x_{k-1}`.
fn put_x_over_sl2<F: Field>(alg: &mut AlgebraStructure<F>, layout: &Layout, block: usize, sl2_off: usize) {
    let m = layout.m as i64;
    for k in 0..=layout.m {
        let ki = k as i64;
        let xk = layout.x(block, k);
        let h_coeff = F::int(m - 2 * ki);
        if !h_coeff.is_zero() {
            alg.set_product(xk, sl2_off + 1, vec![(xk, h_coeff)]);
        }
        if k < layout.m {
            alg.set_product(xk, sl2_off + 2, vec![(layout.x(block, k + 1), F::one())]);
        }
        if k >= 1 {
            alg.set_product(
                xk,
                sl2_off,
                vec![(layout.x(block, k - 1), F::int(-ki * (m + 1 - ki)))],
            );
        }
    }
}

/// Builds the algebra described by `spec`.
pub fn build<F: Field>(spec: &CatalogSpec<F>) -> Result<AlgebraStructure<F>, CatalogError> {
    spec.validate()?;
    let bad = |e: crate::algebra::AlgebraError| CatalogError::BadSpec(e.to_string());
    match spec.family {
        Family::Thm25 | Family::Cor35 => {
            let s = if spec.family == Family::Thm25 {
                1
            } else {
                spec.s.unwrap()
            };
            let layout = Layout {
                s,
                n_y: 2,
                blocks: 1,
                m: spec.m.unwrap(),
            };
            let mut alg = AlgebraStructure::new(layout.labels(spec.family == Family::Cor35))
                .map_err(bad)?;
            for j in 0..s {
                put_sl2_block(&mut alg, 3 * j);
            }
            // [y1, y2] = -[y2, y1] = y1
            alg.set_antisymmetric(layout.y(1), layout.y(2), vec![(layout.y(1), F::one())]);
            put_x_over_sl2(&mut alg, &layout, 1, 0);
            let a = spec.a.clone().unwrap();
            if !a.is_zero() {
                for k in 0..=layout.m {
                    let xk = layout.x(1, k);
                    alg.set_product(xk, layout.y(2), vec![(xk, a.clone())]);
                }
            }
            Ok(alg)
        }
        Family::L1 | Family::L2 => {
            let layout = Layout {
                s: spec.s.unwrap(),
                n_y: 3,
                blocks: 1,
                m: spec.m.unwrap(),
            };
            let mut alg = AlgebraStructure::new(layout.labels(true)).map_err(bad)?;
            for j in 0..layout.s {
                put_sl2_block(&mut alg, 3 * j);
            }
            let (y1, y2, y3) = (layout.y(1), layout.y(2), layout.y(3));
            if spec.family == Family::L1 {
                // [y1,y2] = y1, [y3,y2] = alpha*y3
                alg.set_antisymmetric(y1, y2, vec![(y1, F::one())]);
                let alpha = spec.alpha.clone().unwrap();
                if !alpha.is_zero() {
                    alg.set_antisymmetric(y3, y2, vec![(y3, alpha)]);
                }
            } else {
                // [y1,y2] = y1 + y3, [y3,y2] = y3
                alg.set_antisymmetric(y1, y2, vec![(y1, F::one()), (y3, F::one())]);
                alg.set_antisymmetric(y3, y2, vec![(y3, F::one())]);
            }
            put_x_over_sl2(&mut alg, &layout, 1, 0);
            let a = spec.a.clone().unwrap();
            if !a.is_zero() {
                for k in 0..=layout.m {
                    let xk = layout.x(1, k);
                    alg.set_product(xk, y2, vec![(xk, a.clone())]);
                }
            }
            Ok(alg)
        }
        Family::Thm42 => Ok(generic_action_table(
            spec.m.unwrap(),
            [
                F::zero(),
                F::one(),
                F::zero(),
                F::zero(),
                F::zero(),
                -F::one(),
            ],
        )),
        Family::SimpleSl2 => {
            let m = spec.m.unwrap();
            let module = irreducible_module::<F>(m);
            let sl2 = sl2_canonical::<F>();
            let x_labels = (0..=m).map(|k| format!("x{k}")).collect();
            let x_part = AlgebraStructure::abelian(x_labels).map_err(bad)?;
            AlgebraStructure::assemble(
                &[sl2, x_part],
                &[CrossAction {
                    module_part: 1,
                    actor_part: 0,
                    matrices: module.matrices().to_vec(),
                }],
            )
            .map_err(bad)
        }
        Family::SlnTrivial => {
            let n = spec.n.unwrap();
            let m = spec.m.unwrap();
            let g = sln::<F>(n).map_err(|e| CatalogError::BadSpec(e.to_string()))?;
            let x_labels = (0..=m).map(|k| format!("x{k}")).collect();
            let x_part = AlgebraStructure::abelian(x_labels).map_err(bad)?;
            AlgebraStructure::assemble(&[g, x_part], &[]).map_err(bad)
        }
    }
}

/// The quotient table a family build should produce once the x-span is
/// factored out: the sl2 blocks plus the solvable part.
pub fn expected_quotient<F: Field>(
    spec: &CatalogSpec<F>,
) -> Result<AlgebraStructure<F>, CatalogError> {
    spec.validate()?;
    let bad = |e: crate::algebra::AlgebraError| CatalogError::BadSpec(e.to_string());
    let build_heads = |s: usize, n_y: usize, subscripts: bool| -> Result<AlgebraStructure<F>, CatalogError> {
        let layout = Layout {
            s,
            n_y,
            blocks: 0,
            m: 0,
        };
        let mut alg = AlgebraStructure::new(layout.labels(subscripts)).map_err(bad)?;
        for j in 0..s {
            put_sl2_block(&mut alg, 3 * j);
        }
        Ok(alg)
    };
    match spec.family {
        Family::Thm25 | Family::Cor35 => {
            let s = if spec.family == Family::Thm25 {
                1
            } else {
                spec.s.unwrap()
            };
            let mut alg = build_heads(s, 2, spec.family == Family::Cor35)?;
            let y1 = 3 * s;
            alg.set_antisymmetric(y1, y1 + 1, vec![(y1, F::one())]);
            Ok(alg)
        }
        Family::L1 | Family::L2 => {
            let s = spec.s.unwrap();
            let mut alg = build_heads(s, 3, true)?;
            let (y1, y2, y3) = (3 * s, 3 * s + 1, 3 * s + 2);
            if spec.family == Family::L1 {
                alg.set_antisymmetric(y1, y2, vec![(y1, F::one())]);
                let alpha = spec.alpha.clone().unwrap();
                if !alpha.is_zero() {
                    alg.set_antisymmetric(y3, y2, vec![(y3, alpha)]);
                }
            } else {
                alg.set_antisymmetric(y1, y2, vec![(y1, F::one()), (y3, F::one())]);
                alg.set_antisymmetric(y3, y2, vec![(y3, F::one())]);
            }
            Ok(alg)
        }
        Family::Thm42 => build_heads(2, 0, true),
        Family::SimpleSl2 => Ok(sl2_canonical()),
        Family::SlnTrivial => {
            sln::<F>(spec.n.unwrap()).map_err(|e| CatalogError::BadSpec(e.to_string()))
        }
    }
}

/// The two-block table with the parameterized second-copy action:
/// `[x_i^1,e_2] = a1 x_i^1 + a2 x_i^2`, `[x_i^2,e_2] = a3 x_i^1 - a1 x_i^2`,
/// the same shape with `b`'s for `f_2`, and the `h_2` action derived as
/// `c1 = a2 b3 - a3 b2`, `c2 = 2(a1 b2 - a2 b1)`, `c3 = 2(a3 b1 - a1 b3)`,
/// `c4 = -c1`.
///
/// Nothing is validated here; feed the result to `check_leibniz` or the
/// coefficient-system check to find out whether the parameters are legal.
pub fn build_generic_action<F: Field>(m: usize, coeffs: [F; 6]) -> AlgebraStructure<F> {
    generic_action_table(m, coeffs)
}

fn generic_action_table<F: Field>(m: usize, coeffs: [F; 6]) -> AlgebraStructure<F> {
    let [a1, a2, a3, b1, b2, b3] = coeffs;
    let layout = Layout {
        s: 2,
        n_y: 0,
        blocks: 2,
        m,
    };
    let mut alg =
        AlgebraStructure::new(layout.labels(true)).expect("layout labels are distinct");
    put_sl2_block(&mut alg, 0);
    put_sl2_block(&mut alg, 3);
    put_x_over_sl2(&mut alg, &layout, 1, 0);
    put_x_over_sl2(&mut alg, &layout, 2, 0);

    let two = F::int(2);
    let c1 = a2.clone() * b3.clone() - a3.clone() * b2.clone();
    let c2 = two.clone() * (a1.clone() * b2.clone() - a2.clone() * b1.clone());
    let c3 = two * (a3.clone() * b1.clone() - a1.clone() * b3.clone());
    let (e2, h2, f2) = (3, 4, 5);
    for k in 0..=m {
        let x1 = layout.x(1, k);
        let x2 = layout.x(2, k);
        alg.set_product(x1, e2, vec![(x1, a1.clone()), (x2, a2.clone())]);
        alg.set_product(x2, e2, vec![(x1, a3.clone()), (x2, -a1.clone())]);
        alg.set_product(x1, f2, vec![(x1, b1.clone()), (x2, b2.clone())]);
        alg.set_product(x2, f2, vec![(x1, b3.clone()), (x2, -b1.clone())]);
        alg.set_product(x1, h2, vec![(x1, c1.clone()), (x2, c2.clone())]);
        alg.set_product(x2, h2, vec![(x1, c3.clone()), (x2, -c1.clone())]);
    }
    alg
}
