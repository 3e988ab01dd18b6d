//! Text and JSON rendering for reports, checks, and algebra summaries.

use serde_json::{json, Value};

use leibniz_core::algebra::{LeibnizReport, SolvabilityInvariants};
use leibniz_core::verify::{CheckStatus, VerdictReport};
use leibniz_core::{Algebra, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub fn labelled_vector(alg: &Algebra, v: &[Scalar]) -> String {
    let parts: Vec<String> = v
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| format!("{}*{}", c, alg.labels()[k]))
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

pub fn check_report_json(alg: &Algebra, report: &LeibnizReport<Scalar>) -> Value {
    json!({
        "leibniz": {
            "pass": report.passed(),
            "violations": report.violations.iter().map(|v| {
                let (i, j, k) = v.triple;
                json!({
                    "triple": [alg.labels()[i], alg.labels()[j], alg.labels()[k]],
                    "defect": labelled_vector(alg, &v.defect),
                })
            }).collect::<Vec<_>>(),
        },
        "lie": alg.check_lie(),
        "abelian": alg.is_abelian(),
    })
}

pub fn check_report_text(alg: &Algebra, report: &LeibnizReport<Scalar>) -> String {
    let mut out = String::new();
    if report.passed() {
        out.push_str("leibniz: pass\n");
    } else {
        out.push_str(&format!(
            "leibniz: fail ({} violating triples)\n",
            report.violations.len()
        ));
        for v in &report.violations {
            let (i, j, k) = v.triple;
            out.push_str(&format!(
                "  ({}, {}, {}): defect {}\n",
                alg.labels()[i],
                alg.labels()[j],
                alg.labels()[k],
                labelled_vector(alg, &v.defect)
            ));
        }
    }
    out.push_str(&format!("lie: {}\n", alg.check_lie()));
    out.push_str(&format!("abelian: {}\n", alg.is_abelian()));
    out
}

pub fn verdict_json(report: &VerdictReport) -> Value {
    json!({
        "theorem_id": report.theorem_id,
        "pass": report.passed(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "status": c.status.to_string(),
            "witness": c.witness,
        })).collect::<Vec<_>>(),
    })
}

pub fn verdict_text(report: &VerdictReport) -> String {
    let mut out = format!(
        "[{}] {}\n",
        report.theorem_id,
        if report.passed() { "PASS" } else { "FAIL" }
    );
    for c in &report.checks {
        let tag = match c.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skip",
        };
        out.push_str(&format!("  {tag:<4} {}: {}\n", c.name, c.witness));
    }
    out
}

fn dims(spaces: &[leibniz_core::Subspace]) -> Vec<usize> {
    spaces.iter().map(|s| s.dim()).collect()
}

pub fn invariants_json(alg: &Algebra, inv: &SolvabilityInvariants<Scalar>) -> Value {
    let squares = alg.squares_ideal_detailed();
    json!({
        "dim": alg.dim(),
        "derived_series_dims": dims(&inv.derived_series),
        "lower_central_dims": dims(&inv.lower_central),
        "solvable": inv.is_solvable,
        "nilpotent": inv.is_nilpotent,
        "right_annihilator_dim": inv.right_annihilator.dim(),
        "squares_ideal_dim": squares.subspace.dim(),
        "squares_closure_passes": squares.closure_passes,
    })
}

pub fn invariants_text(alg: &Algebra, inv: &SolvabilityInvariants<Scalar>) -> String {
    let squares = alg.squares_ideal_detailed();
    let fmt_dims = |d: Vec<usize>| {
        d.iter()
            .map(usize::to_string)
            .collect::<Vec<_>>()
            .join(" -> ")
    };
    format!(
        "dim: {}\nderived series dims: {}\nlower central dims: {}\nsolvable: {}\nnilpotent: {}\nright annihilator dim: {}\nsquares ideal dim: {} (closure passes: {})\n",
        alg.dim(),
        fmt_dims(dims(&inv.derived_series)),
        fmt_dims(dims(&inv.lower_central)),
        inv.is_solvable,
        inv.is_nilpotent,
        inv.right_annihilator.dim(),
        squares.subspace.dim(),
        squares.closure_passes,
    )
}

/// Human-readable multiplication table, one line per nonzero product.
pub fn table_text(alg: &Algebra) -> String {
    let mut out = format!("dim {}: {}\n", alg.dim(), alg.labels().join(", "));
    for (i, j) in alg.nonzero_pairs() {
        let v = alg.product_of_basis(i, j);
        out.push_str(&format!(
            "[{}, {}] = {}\n",
            alg.labels()[i],
            alg.labels()[j],
            labelled_vector(alg, &v)
        ));
    }
    out
}
