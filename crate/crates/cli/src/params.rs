//! `--param key=value` handling shared by `catalog build` and `verify`.

use std::collections::BTreeMap;

use leibniz_core::catalog::{CatalogSpec, Family};
use leibniz_core::Scalar;

use crate::CliError;

#[derive(Debug, Clone, Default)]
pub struct Params {
    values: BTreeMap<String, String>,
}

impl Params {
    pub fn parse(raw: &[String]) -> Result<Self, CliError> {
        let mut values = BTreeMap::new();
        for item in raw {
            let (k, v) = item
                .split_once('=')
                .ok_or_else(|| CliError::input(format!("--param {item:?} is not key=value")))?;
            if values.insert(k.trim().to_string(), v.trim().to_string()).is_some() {
                return Err(CliError::input(format!("--param {k:?} given twice")));
            }
        }
        Ok(Params { values })
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.values.keys().map(String::as_str)
    }

    pub fn raw(&self) -> &BTreeMap<String, String> {
        &self.values
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn usize(&self, key: &str) -> Result<Option<usize>, CliError> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| CliError::input(format!("parameter {key}={v:?} is not a count")))
            })
            .transpose()
    }

    pub fn require_usize(&self, key: &str) -> Result<usize, CliError> {
        self.usize(key)?
            .ok_or_else(|| CliError::input(format!("missing parameter {key}")))
    }

    pub fn scalar(&self, key: &str) -> Result<Option<Scalar>, CliError> {
        self.get(key)
            .map(|v| {
                v.parse().map_err(|_| {
                    CliError::input(format!("parameter {key}={v:?} is not a scalar"))
                })
            })
            .transpose()
    }

    pub fn require_scalar(&self, key: &str) -> Result<Scalar, CliError> {
        self.scalar(key)?
            .ok_or_else(|| CliError::input(format!("missing parameter {key}")))
    }

    /// The six action coefficients `a1,a2,a3,b1,b2,b3`.
    pub fn action_coefficients(&self) -> Result<[Scalar; 6], CliError> {
        let mut out = Vec::with_capacity(6);
        for key in ["a1", "a2", "a3", "b1", "b2", "b3"] {
            out.push(self.require_scalar(key)?);
        }
        Ok(out.try_into().expect("six coefficients"))
    }

    /// A full catalog spec from `family=...` plus its parameters.
    pub fn catalog_spec(&self) -> Result<CatalogSpec<Scalar>, CliError> {
        let name = self
            .get("family")
            .ok_or_else(|| CliError::input("missing parameter family"))?;
        self.catalog_spec_for(name)
    }

    /// A catalog spec for a known family name, taking `s,m,n,alpha,a` from
    /// the parameters.
    pub fn catalog_spec_for(&self, name: &str) -> Result<CatalogSpec<Scalar>, CliError> {
        let family = Family::from_str(name)
            .ok_or_else(|| CliError::input(format!("unknown family {name:?}")))?;
        let mut spec = CatalogSpec::new(family);
        spec.s = self.usize("s")?;
        spec.m = self.usize("m")?;
        spec.n = self.usize("n")?;
        spec.alpha = self.scalar("alpha")?;
        spec.a = self.scalar("a")?;
        for key in self.keys() {
            if !["family", "s", "m", "n", "alpha", "a"].contains(&key) {
                return Err(CliError::input(format!("unknown parameter {key}")));
            }
        }
        Ok(spec)
    }
}
