//! JSON interchange for structure-constant algebras.
//!
//! Schema version "1": `dim`, `basis` (coordinate order), `table` (one entry
//! per nonzero product, omitted pairs are zero), and a free-form string
//! `metadata` map. Scalars are the exact text format (`a/b`, `a/b+c/d*i`).
//! Writing normalizes: table sorted by `(left, right)` label, value and
//! metadata keys sorted, two-space indentation, trailing newline — so equal
//! algebras serialize to identical bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use leibniz_core::{Algebra, Scalar};

pub const SCHEMA_VERSION: &str = "1";

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub value: BTreeMap<String, String>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct AlgebraDocument {
    pub schema_version: String,
    pub dim: usize,
    pub basis: Vec<String>,
    pub table: Vec<ProductEntry>,
    #[serde(default)]
    pub metadata: BTreeMap<String, String>,
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported schema_version {0:?} (expected \"1\")")]
    Schema(String),
    #[error("{0}")]
    Parse(String),
}

impl AlgebraDocument {
    /// Extracts the document from an algebra, sorted into canonical order.
    pub fn from_algebra(alg: &Algebra, metadata: BTreeMap<String, String>) -> Self {
        let labels = alg.labels();
        let mut table = Vec::new();
        for (i, j) in alg.nonzero_pairs() {
            let value: BTreeMap<String, String> = alg
                .product_entries(i, j)
                .iter()
                .map(|(k, c)| (labels[*k].clone(), c.to_string()))
                .collect();
            table.push(ProductEntry {
                left: labels[i].clone(),
                right: labels[j].clone(),
                value,
            });
        }
        table.sort_by(|a, b| (&a.left, &a.right).cmp(&(&b.left, &b.right)));
        AlgebraDocument {
            schema_version: SCHEMA_VERSION.to_string(),
            dim: alg.dim(),
            basis: labels.to_vec(),
            table,
            metadata,
        }
    }

    /// Validates the document and builds the algebra.
    pub fn to_algebra(&self) -> Result<Algebra, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::Schema(self.schema_version.clone()));
        }
        if self.basis.len() != self.dim {
            return Err(DocumentError::Parse(format!(
                "basis has {} labels but dim is {}",
                self.basis.len(),
                self.dim
            )));
        }
        let mut alg = Algebra::new(self.basis.clone())
            .map_err(|e| DocumentError::Parse(e.to_string()))?;
        let basis = self.basis.clone();
        let index = move |label: &str, place: String| {
            basis
                .iter()
                .position(|l| l == label)
                .ok_or_else(|| DocumentError::Parse(format!("{place}: unknown label {label:?}")))
        };
        let mut seen = std::collections::HashSet::new();
        for (n, entry) in self.table.iter().enumerate() {
            let place = format!("table[{n}]");
            let i = index(&entry.left, format!("{place}.left"))?;
            let j = index(&entry.right, format!("{place}.right"))?;
            if !seen.insert((i, j)) {
                return Err(DocumentError::Parse(format!(
                    "{place}: duplicate product ({}, {})",
                    entry.left, entry.right
                )));
            }
            let mut components = Vec::new();
            for (label, text) in &entry.value {
                let k = index(label, format!("{place}.value"))?;
                let c: Scalar = text.parse().map_err(|_| {
                    DocumentError::Parse(format!(
                        "{place}.value[{label:?}]: cannot parse scalar {text:?}"
                    ))
                })?;
                components.push((k, c));
            }
            alg.set_product(i, j, components);
        }
        Ok(alg)
    }

    /// Canonical bytes: pretty JSON with sorted keys and a trailing newline.
    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = serde_json::to_vec_pretty(self).expect("document serializes");
        out.push(b'\n');
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, DocumentError> {
        Ok(serde_json::from_slice(bytes)?)
    }
}
