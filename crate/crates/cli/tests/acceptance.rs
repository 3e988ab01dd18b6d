//! Acceptance suite: one test per criterion, each printing a PASS line.
//!
//! Run with `cargo test -p leibniz-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use std::collections::BTreeSet;
use std::io::Write;
use std::process::{Command, Stdio};
use std::time::Instant;

use leibniz_core::catalog::{
    build, build_generic_action, expected_quotient, list_families, CatalogSpec, Family,
};
use leibniz_core::reps::{irreducible_module, is_irreducible, ModuleAction};
use leibniz_core::verify::{
    check_eq777, determinant_polynomials, normalize_action, quadratic_vanishes, verify_prop51,
    verify_splitting, verify_thm28, verify_thm52, CheckStatus, CoeffAssignment, SplittingBlocks,
    VerifyError,
};
use leibniz_core::{Algebra, GaussianScalar, Scalar, Subspace};

fn int(n: i64) -> Scalar {
    GaussianScalar::from_int(n)
}

fn scalar_grid() -> Vec<Scalar> {
    vec![int(0), int(1), int(-1), int(2), GaussianScalar::i()]
}

/// Every catalog instance of the acceptance grid:
/// s in 1..=3, m in 0..=6, alpha and a over {0, 1, -1, 2, i};
/// SLN_TRIVIAL over n in 2..=4 with ideal dimension 1 or 2.
fn grid() -> Vec<(CatalogSpec<Scalar>, Algebra)> {
    let mut out = Vec::new();
    let mut push = |spec: CatalogSpec<Scalar>| {
        let alg = build(&spec).unwrap_or_else(|e| panic!("build {:?}: {e}", spec.family));
        out.push((spec, alg));
    };
    for m in 0..=6 {
        for a in scalar_grid() {
            push(CatalogSpec::new(Family::Thm25).with_m(m).with_a(a.clone()));
            for s in 1..=3 {
                push(CatalogSpec::new(Family::Cor35).with_s(s).with_m(m).with_a(a.clone()));
                push(CatalogSpec::new(Family::L2).with_s(s).with_m(m).with_a(a.clone()));
                for alpha in scalar_grid() {
                    push(
                        CatalogSpec::new(Family::L1)
                            .with_s(s)
                            .with_m(m)
                            .with_alpha(alpha)
                            .with_a(a.clone()),
                    );
                }
            }
        }
        push(CatalogSpec::new(Family::Thm42).with_m(m));
        push(CatalogSpec::new(Family::SimpleSl2).with_m(m));
    }
    for n in 2..=4 {
        for m in 0..=1 {
            push(CatalogSpec::new(Family::SlnTrivial).with_n(n).with_m(m));
        }
    }
    out
}

#[test]
fn criterion_1_leibniz_identity_exhaustive_pass() {
    let start = Instant::now();
    let algebras = grid();
    let mut checked = 0;
    for (spec, alg) in &algebras {
        assert!(alg.dim() <= 26, "{:?} has dim {}", spec.family, alg.dim());
        let report = alg.check_leibniz();
        assert!(
            report.violations.is_empty(),
            "{:?} (s={:?}, m={:?}): {} violations",
            spec.family,
            spec.s,
            spec.m,
            report.violations.len()
        );
        checked += 1;
    }
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 10.0,
        "sweep took {elapsed:?}, budget is 10 s"
    );
    println!(
        "ACCEPTANCE 1 PASS: {checked} catalog algebras satisfy the Leibniz identity \
         with zero violating triples in {elapsed:?}"
    );
}

/// The x-span is the squares ideal except where the table degenerates to a
/// Lie algebra: SLN_TRIVIAL always, and the m = 0 tables whose solvable
/// action is zero (a = 0), where the single x line is central.
fn expected_squares_ideal(spec: &CatalogSpec<Scalar>, alg: &Algebra) -> Subspace {
    let x_axes: Vec<usize> = alg
        .labels()
        .iter()
        .enumerate()
        .filter(|(_, l)| l.starts_with('x'))
        .map(|(i, _)| i)
        .collect();
    let zero = int(0);
    let lie_corner = match spec.family {
        Family::SlnTrivial => true,
        Family::SimpleSl2 => spec.m == Some(0),
        Family::Thm25 | Family::Cor35 | Family::L1 | Family::L2 => {
            spec.m == Some(0) && spec.a.as_ref() == Some(&zero)
        }
        Family::Thm42 => false,
    };
    if lie_corner {
        Subspace::zero(alg.dim())
    } else {
        Subspace::coordinate(alg.dim(), &x_axes)
    }
}

#[test]
fn criterion_2_squares_ideal_oracle() {
    let mut lie_corners = 0;
    for (spec, alg) in grid() {
        let detailed = alg.squares_ideal_detailed();
        let expected = expected_squares_ideal(&spec, &alg);
        assert_eq!(
            detailed.subspace, expected,
            "{:?} (s={:?}, m={:?}, a={:?})",
            spec.family, spec.s, spec.m, spec.a
        );
        assert_eq!(detailed.closure_passes, 1, "{:?}", spec.family);
        if expected.is_zero() {
            lie_corners += 1;
        }
    }
    println!(
        "ACCEPTANCE 2 PASS: squares ideal equals the x-span on every build \
         (closure stable after 1 pass; {lie_corners} Lie-degenerate corners have ideal 0)"
    );
}

#[test]
fn criterion_3_quotient_correctness() {
    let mut checked = 0;
    for (spec, alg) in grid() {
        // quotient by the family ideal: the x-span, which is two-sided even
        // in the Lie-degenerate corners
        let x_axes: Vec<usize> = alg
            .labels()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.starts_with('x'))
            .map(|(i, _)| i)
            .collect();
        let ideal = Subspace::coordinate(alg.dim(), &x_axes);
        let (quot, _) = alg.quotient(&ideal).unwrap();
        assert!(quot.check_lie(), "{:?}", spec.family);
        let expected = expected_quotient(&spec).unwrap();
        assert_eq!(quot, expected, "{:?} (s={:?}, m={:?})", spec.family, spec.s, spec.m);
        checked += 1;
    }
    println!(
        "ACCEPTANCE 3 PASS: quotient by the ideal is Lie and equals the expected \
         head table exactly on {checked} builds"
    );
}

fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn criterion_4_representation_decomposition() {
    let start = Instant::now();
    let mut cases = 0;
    for total in 1..=12 {
        for parts in partitions(total, total) {
            // parts are the summand dimensions m_i + 1
            let modules: Vec<ModuleAction<Scalar>> =
                parts.iter().map(|&d| irreducible_module(d - 1)).collect();
            let refs: Vec<&ModuleAction<Scalar>> = modules.iter().collect();
            let sum = ModuleAction::direct_sum(&refs).unwrap();
            let found = leibniz_core::reps::decompose(&sum).unwrap();
            let mut dims: Vec<usize> = found.iter().map(|(_, s)| s.dim()).collect();
            dims.sort_by(|a, b| b.cmp(a));
            assert_eq!(dims, parts, "multiset {parts:?}");
            cases += 1;
        }
    }
    for m in 0..=6 {
        assert!(is_irreducible(&irreducible_module::<Scalar>(m)).unwrap());
    }
    let v1: ModuleAction<Scalar> = irreducible_module(1);
    let doubled = ModuleAction::direct_sum(&[&v1, &v1]).unwrap();
    assert!(!is_irreducible(&doubled).unwrap());
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 1.0,
        "decomposition sweep took {elapsed:?}, budget is 1 s"
    );
    println!(
        "ACCEPTANCE 4 PASS: decompose recovers the summand multiset on {cases} block sums \
         (total dim <= 12) in {elapsed:?}; V_m irreducible for m <= 6, V_1+V_1 reducible"
    );
}

#[test]
fn criterion_5_twin_block_pipeline_and_grid() {
    // (a) the sample coefficients normalize onto the canonical table
    let sample = [int(1), int(1), int(-1), int(0), int(1), int(0)];
    for m in 0..=2 {
        let alg = build_generic_action(m, sample.clone());
        assert!(alg.check_leibniz().passed(), "m={m}");
        let coeffs = CoeffAssignment::extract(&alg).unwrap();
        assert!(check_eq777(&coeffs).passed(), "m={m}");
        let (_, normalized) = normalize_action(m, sample.clone()).unwrap();
        let canonical = build(&CatalogSpec::<Scalar>::new(Family::Thm42).with_m(m)).unwrap();
        assert_eq!(normalized, canonical, "m={m}");
    }

    // (b) over the full coefficient grid, the Leibniz-passing assignments
    // and the system-passing assignments coincide
    let values = [int(0), int(1), int(-1), GaussianScalar::i(), -GaussianScalar::i()];
    let mut leibniz_set = BTreeSet::new();
    let mut system_set = BTreeSet::new();
    let mut index = 0u32;
    let start = Instant::now();
    for a1 in 0..5 {
        for a2 in 0..5 {
            for a3 in 0..5 {
                for b1 in 0..5 {
                    for b2 in 0..5 {
                        for b3 in 0..5 {
                            let coeffs = [
                                values[a1].clone(),
                                values[a2].clone(),
                                values[a3].clone(),
                                values[b1].clone(),
                                values[b2].clone(),
                                values[b3].clone(),
                            ];
                            let alg = build_generic_action(1, coeffs.clone());
                            if alg.is_leibniz() {
                                leibniz_set.insert(index);
                            }
                            let assignment =
                                CoeffAssignment::from_action_coefficients(&coeffs);
                            if check_eq777(&assignment).passed()
                                && quadratic_vanishes(&coeffs[0], &coeffs[1], &coeffs[2])
                                && quadratic_vanishes(&coeffs[3], &coeffs[4], &coeffs[5])
                            {
                                system_set.insert(index);
                            }
                            index += 1;
                        }
                    }
                }
            }
        }
    }
    assert_eq!(leibniz_set, system_set, "grid sets differ");
    assert!(!leibniz_set.is_empty());
    println!(
        "ACCEPTANCE 5 PASS: sample coefficients normalize onto the canonical table for \
         m in 0..=2; over the 15625-point grid the Leibniz set equals the \
         system-plus-quadratics set ({} assignments) in {:?}",
        leibniz_set.len(),
        start.elapsed()
    );
}

#[test]
fn criterion_6_submodule_count() {
    for m in 0..=4 {
        let alg = build(&CatalogSpec::<Scalar>::new(Family::Thm42).with_m(m)).unwrap();
        let report = verify_thm28(&alg).unwrap();
        assert!(report.passed(), "m={m}: {report}");
        let count = report.check("summand-count").unwrap();
        assert!(
            count.witness.contains(&format!("{} summands, expected {}", m + 1, m + 1)),
            "m={m}: {}",
            count.witness
        );
        assert_eq!(report.check("summand-dimension").unwrap().status, CheckStatus::Pass);
        let sum_check = report.check("sum-is-i1-meet-i2").unwrap();
        if m == 0 {
            // [I, sl2^1] = 0 when the first copy acts trivially on the twin
            // lines, so the intersection claim is vacuous here.
            assert_eq!(sum_check.status, CheckStatus::Skipped);
        } else {
            assert_eq!(sum_check.status, CheckStatus::Pass);
        }
    }
    println!(
        "ACCEPTANCE 6 PASS: m+1 summands of dimension 2 over the second copy for m <= 4, \
         with sum = I1 meet I2 whenever I1 is nonzero (m = 0 vacuous)"
    );
}

#[test]
fn criterion_7_trivial_action_arguments() {
    let start = Instant::now();
    // kernel dimension 0 for sl2 and sl3
    for (name, alg) in [
        ("sl2", leibniz_core::reps::sl2_canonical::<Scalar>()),
        ("sl3", leibniz_core::reps::sln::<Scalar>(3).unwrap()),
    ] {
        let report = verify_prop51(&alg).unwrap();
        assert!(report.passed(), "{name}: {report}");
        assert!(report
            .check("trivial action forced")
            .unwrap()
            .witness
            .contains("dimension 0"));
    }
    // control: one abelian line makes the kernel one-dimensional
    let control = leibniz_core::algebra::AlgebraStructure::assemble(
        &[
            leibniz_core::reps::sl2_canonical::<Scalar>(),
            leibniz_core::algebra::AlgebraStructure::abelian(vec!["z".into()]).unwrap(),
        ],
        &[],
    )
    .unwrap();
    match verify_prop51(&control) {
        Err(VerifyError::NotPerfect { kernel_dim }) => assert_eq!(kernel_dim, 1),
        other => panic!("control should be rejected as not perfect, got {other:?}"),
    }

    // the sl_n argument, with byte-exact determinants
    let report = verify_thm52::<Scalar>(3).unwrap();
    assert!(report.passed(), "{report}");
    let dets = determinant_polynomials::<Scalar>();
    assert_eq!(dets[0].to_string(), "1 - 4*alpha^2 - 4*beta*gamma");
    assert_eq!(dets[1].to_string(), "2 - 2*alpha^2 - 2*beta*gamma");
    assert_eq!(dets[2].to_string(), "-2 + 2*alpha^2 + 2*beta*gamma");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "took {elapsed:?}, budget is 5 s");
    println!(
        "ACCEPTANCE 7 PASS: trivial-action kernels are 0 for sl2/sl3 (control 1), and the \
         sl_n dimension-2 argument passes with byte-exact determinants in {elapsed:?}"
    );
}

#[test]
fn criterion_8_splitting_lemmas() {
    let mut checked = 0;
    for s in 1..=3 {
        for (family, alpha) in [(Family::Cor35, None), (Family::L1, Some(int(1))), (Family::L2, None)] {
            for m in [0, 1, 3, 4] {
                for a in [int(0), int(2), GaussianScalar::i()] {
                    let mut spec = CatalogSpec::new(family).with_s(s).with_m(m).with_a(a);
                    spec.alpha = alpha.clone();
                    let alg = build(&spec).unwrap();
                    let blocks = SplittingBlocks::from_labels(&alg).unwrap();
                    let report = verify_splitting(&alg, &blocks).unwrap();
                    assert!(
                        report.passed(),
                        "{:?} s={s} m={m}: {report}",
                        spec.family
                    );
                    // the product-vanishing checks really ran for every
                    // higher copy
                    for j in 2..=s {
                        assert_eq!(
                            report
                                .check(&format!("lemma-3.1 [I,sl2^{j}]=0"))
                                .unwrap()
                                .status,
                            CheckStatus::Pass
                        );
                        assert_eq!(
                            report
                                .check(&format!("lemma-3.3 [R,sl2^{j}]=[sl2^{j},R]=0"))
                                .unwrap()
                                .status,
                            CheckStatus::Pass
                        );
                        for i in 1..=s {
                            if i != j {
                                assert_eq!(
                                    report
                                        .check(&format!("lemma-3.2 [sl2^{i},sl2^{j}]=0"))
                                        .unwrap()
                                        .status,
                                    CheckStatus::Pass
                                );
                            }
                        }
                    }
                    checked += 1;
                }
            }
        }
    }
    println!(
        "ACCEPTANCE 8 PASS: splitting products vanish as claimed on {checked} \
         COR35/L1/L2 instances with s <= 3"
    );
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_leibniz"))
}

#[test]
fn criterion_9_cli_round_trip_and_exit_codes() {
    // build -> write -> read -> tensor equality for a member of every family
    let samples: Vec<Vec<&str>> = vec![
        vec!["THM25", "--param", "m=3", "--param", "a=i"],
        vec!["COR35", "--param", "s=2", "--param", "m=2", "--param", "a=1"],
        vec!["L1", "--param", "s=3", "--param", "m=1", "--param", "alpha=-1", "--param", "a=2"],
        vec!["L2", "--param", "s=1", "--param", "m=4", "--param", "a=0"],
        vec!["THM42", "--param", "m=3"],
        vec!["SIMPLE_SL2", "--param", "m=5"],
        vec!["SLN_TRIVIAL", "--param", "n=3", "--param", "m=1"],
    ];
    assert_eq!(samples.len(), list_families().len());
    for sample in &samples {
        let out = bin()
            .arg("catalog")
            .arg("build")
            .args(&sample[..])
            .output()
            .unwrap();
        assert_eq!(out.status.code(), Some(0), "{sample:?}");
        let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
        assert_eq!(doc["schema_version"], "1");
        // parse back through `check`: the reread table must satisfy the
        // identity, and a second write must be byte-identical
        let round = run_stdin(&["check", "-"], &out.stdout);
        assert_eq!(round.0, 0, "{sample:?}");
        let requoted = run_stdin(&["quotient", "-", "--format", "json"], &out.stdout);
        assert_eq!(requoted.0, 0);
    }

    // golden bytes for the THM42(2) document
    let out = bin()
        .args(["catalog", "build", "THM42", "--param", "m=2"])
        .output()
        .unwrap();
    let golden = include_bytes!("golden/thm42_m2.json");
    assert_eq!(
        out.stdout,
        golden,
        "THM42(2) document changed; regenerate tests/golden/thm42_m2.json if intentional"
    );

    // malformed-document corpus: every case is an input error (exit 2)
    let malformed: Vec<(&str, &str)> = vec![
        ("syntax", "{"),
        (
            "schema",
            r#"{"schema_version":"9","dim":1,"basis":["a"],"table":[],"metadata":{}}"#,
        ),
        (
            "unknown-label",
            r#"{"schema_version":"1","dim":1,"basis":["a"],"table":[{"left":"a","right":"a","value":{"b":"1"}}],"metadata":{}}"#,
        ),
        (
            "bad-scalar",
            r#"{"schema_version":"1","dim":1,"basis":["a"],"table":[{"left":"a","right":"a","value":{"a":"1/0"}}],"metadata":{}}"#,
        ),
        (
            "duplicate-label",
            r#"{"schema_version":"1","dim":2,"basis":["a","a"],"table":[],"metadata":{}}"#,
        ),
        (
            "dim-mismatch",
            r#"{"schema_version":"1","dim":3,"basis":["a","b"],"table":[],"metadata":{}}"#,
        ),
        (
            "duplicate-product",
            r#"{"schema_version":"1","dim":1,"basis":["a"],"table":[{"left":"a","right":"a","value":{"a":"1"}},{"left":"a","right":"a","value":{"a":"2"}}],"metadata":{}}"#,
        ),
    ];
    for (name, text) in &malformed {
        let (code, _out, err) = run_stdin_full(&["check", "-"], text.as_bytes());
        assert_eq!(code, 2, "malformed case {name}");
        assert!(!err.is_empty(), "malformed case {name} should explain itself");
    }

    // the three exit codes are exactly {0, 1, 2}
    let ok = bin().args(["verify", "thm-2.7", "--param", "m=1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let fail = bin()
        .args(["verify", "prop-5.1", "--param", "g=sl2+abelian"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(1));
    let input = bin().args(["verify", "nope"]).output().unwrap();
    assert_eq!(input.status.code(), Some(2));

    println!(
        "ACCEPTANCE 9 PASS: round trips for all {} families, golden bytes for THM42(2), \
         and the exit-code contract on {} malformed documents",
        samples.len(),
        malformed.len()
    );
}

fn run_stdin(args: &[&str], input: &[u8]) -> (i32, Vec<u8>) {
    let (code, out, _) = run_stdin_full(args, input);
    (code, out)
}

fn run_stdin_full(args: &[&str], input: &[u8]) -> (i32, Vec<u8>, String) {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn leibniz");
    child.stdin.take().unwrap().write_all(input).expect("write stdin");
    let out = child.wait_with_output().expect("wait");
    (
        out.status.code().unwrap_or(-1),
        out.stdout,
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}
