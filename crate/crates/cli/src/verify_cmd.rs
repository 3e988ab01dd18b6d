//! Dispatch from a theorem id plus `--param`s to the verifier suite.

use leibniz_core::algebra::AlgebraStructure;
use leibniz_core::catalog::{build, build_generic_action};
use leibniz_core::reps::{sl2_canonical, sln};
use leibniz_core::verify::{
    check_eq777, normalize_action, quadratic_obstruction, verify_prop41, verify_prop51,
    verify_splitting, verify_thm28, verify_thm43, verify_thm52, CoeffAssignment, SplittingBlocks,
    VerdictReport, VerifyError, THEOREM_IDS,
};
use leibniz_core::{Algebra, Scalar};

use crate::params::Params;
use crate::CliError;

pub fn run(theorem_id: &str, params: &Params) -> Result<VerdictReport, CliError> {
    match theorem_id {
        "lemma-3.1" => {
            let full = splitting_report(params)?;
            let mut report = VerdictReport::new("lemma-3.1");
            report.checks = full
                .checks
                .into_iter()
                .filter(|c| {
                    c.name.starts_with("lemma-3.1") || c.name == "I irreducible over sl2^1"
                })
                .collect();
            Ok(report)
        }
        "thm-3.4" => splitting_report(params),
        "prop-4.1" => {
            let alg = generic_action(params)?;
            let mut report = verify_prop41(&alg).map_err(verify_err)?;
            let coeffs = CoeffAssignment::extract(&alg).map_err(verify_err)?;
            report.checks.extend(check_eq777(&coeffs).checks);
            Ok(report)
        }
        "thm-4.2" => {
            let m = params.require_usize("m")?;
            let coeffs = params.action_coefficients()?;
            let mut report = VerdictReport::new("thm-4.2");
            let alg = build_generic_action(m, coeffs.clone());
            report.record(
                "leibniz",
                alg.check_leibniz().passed(),
                "generic action satisfies the Leibniz identity",
            );
            let assignment = CoeffAssignment::extract(&alg).map_err(verify_err)?;
            report.record(
                "coefficient-system",
                check_eq777(&assignment).passed(),
                "all twelve relations hold",
            );
            let qa = quadratic_obstruction(&coeffs[0], &coeffs[1], &coeffs[2]);
            let qb = quadratic_obstruction(&coeffs[3], &coeffs[4], &coeffs[5]);
            report.record("a1^2+a2a3 = 0", qa == Scalar::from_int(0), format!("value {qa}"));
            report.record("b1^2+b2b3 = 0", qb == Scalar::from_int(0), format!("value {qb}"));
            match normalize_action(m, coeffs) {
                Ok((change, _)) => report.record(
                    "normal-form",
                    true,
                    format!(
                        "basis change brings the tensor to the canonical table exactly \
                         (identity change: {})",
                        change.matrix() == &leibniz_core::Matrix::identity(alg.dim())
                    ),
                ),
                Err(e) => report.record("normal-form", false, e.to_string()),
            }
            Ok(report)
        }
        "thm-4.3" => {
            let alg = generic_action(params)?;
            verify_thm43(&alg).map_err(verify_err)
        }
        "thm-2.7" => {
            let m = params.require_usize("m")?;
            let alg = build(
                &leibniz_core::catalog::CatalogSpec::<Scalar>::new(
                    leibniz_core::catalog::Family::Thm42,
                )
                .with_m(m),
            )
            .map_err(|e| CliError::input(e.to_string()))?;
            verify_thm28(&alg).map_err(verify_err)
        }
        "prop-5.1" => {
            let g = params
                .get("g")
                .ok_or_else(|| CliError::input("missing parameter g (sl2, sl3, sl4, sl2+abelian)"))?;
            let algebra: Algebra = match g {
                "sl2" => sl2_canonical(),
                "sl3" => sln(3).map_err(|e| CliError::input(e.to_string()))?,
                "sl4" => sln(4).map_err(|e| CliError::input(e.to_string()))?,
                "sl2+abelian" => {
                    let ab = AlgebraStructure::abelian(vec!["z".into()])
                        .expect("single label");
                    AlgebraStructure::assemble(&[sl2_canonical(), ab], &[])
                        .expect("disjoint labels")
                }
                other => {
                    return Err(CliError::input(format!(
                        "unknown algebra {other:?} (use sl2, sl3, sl4, sl2+abelian)"
                    )))
                }
            };
            match verify_prop51(&algebra) {
                Ok(report) => Ok(report),
                Err(VerifyError::NotPerfect { kernel_dim }) => {
                    let mut report = VerdictReport::new("prop-5.1");
                    report.record(
                        "G is perfect",
                        false,
                        format!(
                            "[G,G] != G, the conclusion is not claimed; \
                             trivial-action solution space has dimension {kernel_dim}"
                        ),
                    );
                    Ok(report)
                }
                Err(e) => Err(verify_err(e)),
            }
        }
        "thm-5.2" => {
            let n = params.require_usize("n")?;
            verify_thm52::<Scalar>(n).map_err(verify_err)
        }
        other => Err(CliError::input(format!(
            "unknown theorem id {other:?}; known ids: {}",
            THEOREM_IDS.join(", ")
        ))),
    }
}

fn verify_err(e: VerifyError) -> CliError {
    CliError::input(e.to_string())
}

fn splitting_report(params: &Params) -> Result<VerdictReport, CliError> {
    let spec = params.catalog_spec()?;
    let alg = build(&spec).map_err(|e| CliError::input(e.to_string()))?;
    let blocks = SplittingBlocks::from_labels(&alg).map_err(verify_err)?;
    verify_splitting(&alg, &blocks).map_err(verify_err)
}

fn generic_action(params: &Params) -> Result<Algebra, CliError> {
    let m = params.require_usize("m")?;
    let coeffs = params.action_coefficients()?;
    Ok(build_generic_action(m, coeffs))
}
