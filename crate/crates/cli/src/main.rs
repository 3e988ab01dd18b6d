//! Command line front end for the exact Leibniz-algebra toolkit.
//!
//! Exit codes: 0 for pass/success, 1 for a verification failure, 2 for an
//! input error (malformed document, unknown id, bad parameter).

mod document;
mod params;
mod render;
mod verify_cmd;

use std::collections::BTreeMap;
use std::io::{Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use leibniz_core::catalog::{build, list_families};
use leibniz_core::reps::{action_from_algebra, decompose};
use leibniz_core::Algebra;

use document::AlgebraDocument;
use params::Params;
use render::Format;

#[derive(Debug)]
pub struct CliError {
    message: String,
}

impl CliError {
    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            message: message.into(),
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

#[derive(Parser)]
#[command(
    name = "leibniz",
    about = "Exact structure-constant algebra: identity checks, catalog builds, verification suite",
    version
)]
struct Cli {
    /// Output format for reports and summaries
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Leibniz identity of a document (plus Lie/abelian flags)
    Check {
        /// Algebra document, or `-` for stdin
        file: String,
    },
    /// Derived series, solvability, right annihilator, squares ideal
    Invariants {
        file: String,
    },
    /// Quotient by the squares ideal, emitted as a document
    Quotient {
        file: String,
        /// Write the document here instead of stdout
        #[arg(short, long)]
        output: Option<String>,
    },
    /// Restrict right multiplication to a module over an actor subalgebra
    Module {
        file: String,
        /// Comma-separated actor labels (must span a subalgebra)
        #[arg(long, value_delimiter = ',', required = true)]
        actor: Vec<String>,
        /// Comma-separated module labels (must span an invariant subspace)
        #[arg(long = "module", value_delimiter = ',', required = true)]
        module_labels: Vec<String>,
        /// Also decompose into irreducible summands (actor must be an sl2 copy)
        #[arg(long)]
        decompose: bool,
    },
    /// Family catalog
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
    /// Run a named verification (see `catalog list` and the README for ids)
    Verify {
        theorem_id: String,
        /// Parameters as key=value (repeatable)
        #[arg(long = "param")]
        params: Vec<String>,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List the families with their parameters
    List,
    /// Build a family member and emit its document
    Build {
        family: String,
        /// Parameters as key=value (repeatable)
        #[arg(long = "param")]
        params: Vec<String>,
        /// Write the document here instead of stdout
        #[arg(short, long)]
        output: Option<String>,
    },
}

fn read_input(file: &str) -> Result<Vec<u8>, CliError> {
    if file == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read(file).map_err(|e| CliError::input(format!("reading {file}: {e}")))
    }
}

fn read_algebra(file: &str) -> Result<(Algebra, BTreeMap<String, String>), CliError> {
    let bytes = read_input(file)?;
    let doc = AlgebraDocument::from_bytes(&bytes).map_err(|e| CliError::input(e.to_string()))?;
    let alg = doc.to_algebra().map_err(|e| CliError::input(e.to_string()))?;
    Ok((alg, doc.metadata))
}

fn write_output(target: &Option<String>, bytes: &[u8]) -> Result<(), CliError> {
    match target {
        Some(path) => std::fs::write(path, bytes)
            .map_err(|e| CliError::input(format!("writing {path}: {e}"))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::input(format!("writing stdout: {e}"))),
    }
}

/// Runs a command; `Ok(code)` is the exit code for well-formed input.
fn run(cli: Cli) -> Result<u8, CliError> {
    match cli.command {
        Command::Check { file } => {
            let (alg, _) = read_algebra(&file)?;
            let report = alg.check_leibniz();
            match cli.format {
                Format::Text => print!("{}", render::check_report_text(&alg, &report)),
                Format::Json => println!("{}", render::check_report_json(&alg, &report)),
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Invariants { file } => {
            let (alg, _) = read_algebra(&file)?;
            let inv = alg.solvability_invariants();
            match cli.format {
                Format::Text => print!("{}", render::invariants_text(&alg, &inv)),
                Format::Json => println!("{}", render::invariants_json(&alg, &inv)),
            }
            Ok(0)
        }
        Command::Quotient { file, output } => {
            let (alg, mut metadata) = read_algebra(&file)?;
            let ideal = alg.squares_ideal();
            let (quot, _) = alg
                .quotient(&ideal)
                .map_err(|e| CliError::input(e.to_string()))?;
            metadata.insert("quotient".into(), "by squares ideal".into());
            match cli.format {
                Format::Text => print!("{}", render::table_text(&quot)),
                Format::Json => {
                    let doc = AlgebraDocument::from_algebra(&quot, metadata);
                    write_output(&output, &doc.to_bytes())?;
                }
            }
            Ok(0)
        }
        Command::Module {
            file,
            actor,
            module_labels,
            decompose: run_decompose,
        } => {
            let (alg, _) = read_algebra(&file)?;
            let actor_refs: Vec<&str> = actor.iter().map(String::as_str).collect();
            let module_refs: Vec<&str> = module_labels.iter().map(String::as_str).collect();
            let actor_span = alg
                .span_of_labels(&actor_refs)
                .map_err(|e| CliError::input(e.to_string()))?;
            let module_span = alg
                .span_of_labels(&module_refs)
                .map_err(|e| CliError::input(e.to_string()))?;
            let action = action_from_algebra(&alg, &module_span, &actor_span)
                .map_err(|e| CliError::input(e.to_string()))?;

            let summands = if run_decompose {
                match decompose(&action) {
                    Ok(parts) => Some(parts),
                    Err(e) => {
                        eprintln!("decompose: {e}");
                        return Ok(1);
                    }
                }
            } else {
                None
            };

            match cli.format {
                Format::Text => {
                    for (j, label) in actor.iter().enumerate() {
                        println!("action of {label}:");
                        print!("{}", action.matrix(j));
                    }
                    if let Some(parts) = &summands {
                        println!("decomposition: {} summand(s)", parts.len());
                        for (w, s) in parts {
                            println!("  highest weight {w}, dimension {}", s.dim());
                        }
                    }
                }
                Format::Json => {
                    let matrices: Vec<serde_json::Value> = actor
                        .iter()
                        .enumerate()
                        .map(|(j, label)| {
                            serde_json::json!({
                                "actor": label,
                                "matrix": (0..action.module_dim()).map(|r| {
                                    (0..action.module_dim())
                                        .map(|c| action.matrix(j).get(r, c).to_string())
                                        .collect::<Vec<_>>()
                                }).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    let mut obj = serde_json::json!({
                        "module_dim": action.module_dim(),
                        "actions": matrices,
                    });
                    if let Some(parts) = &summands {
                        obj["decomposition"] = parts
                            .iter()
                            .map(|(w, s)| {
                                serde_json::json!({"highest_weight": w, "dim": s.dim()})
                            })
                            .collect();
                    }
                    println!("{obj}");
                }
            }
            Ok(0)
        }
        Command::Catalog { action } => match action {
            CatalogCommand::List => {
                match cli.format {
                    Format::Text => {
                        for info in list_families() {
                            println!(
                                "{:<12} params: {:<18} ({})",
                                info.name,
                                info.params.join(", "),
                                info.citation
                            );
                        }
                    }
                    Format::Json => {
                        let v: Vec<serde_json::Value> = list_families()
                            .iter()
                            .map(|i| {
                                serde_json::json!({
                                    "name": i.name,
                                    "params": i.params,
                                    "citation": i.citation,
                                })
                            })
                            .collect();
                        println!("{}", serde_json::Value::Array(v));
                    }
                }
                Ok(0)
            }
            CatalogCommand::Build {
                family,
                params,
                output,
            } => {
                let params = Params::parse(&params)?;
                let spec = params.catalog_spec_for(&family)?;
                let alg = build(&spec).map_err(|e| CliError::input(e.to_string()))?;
                let mut metadata: BTreeMap<String, String> = BTreeMap::new();
                metadata.insert("family".into(), family.clone());
                for (k, v) in params.raw() {
                    metadata.insert(format!("param.{k}"), v.clone());
                }
                let warnings = spec.warnings();
                if !warnings.is_empty() {
                    metadata.insert("warnings".into(), warnings.join("; "));
                }
                let doc = AlgebraDocument::from_algebra(&alg, metadata);
                write_output(&output, &doc.to_bytes())?;
                Ok(0)
            }
        },
        Command::Verify { theorem_id, params } => {
            let params = Params::parse(&params)?;
            let report = verify_cmd::run(&theorem_id, &params)?;
            match cli.format {
                Format::Text => print!("{}", render::verdict_text(&report)),
                Format::Json => println!("{}", render::verdict_json(&report)),
            }
            Ok(if report.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
