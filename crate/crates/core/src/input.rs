//! The JSON input document: two matrices and an optional specification.
//!
//! ```json
//! {"A": [[2]], "B": [[3]], "kappa": "exchange"}
//! ```
//!
//! `kappa` is `"lex"` (the default), `"exchange"`, or a list of
//! `[["A:..", "B:.."], ["B:..", "A:.."]]` entries.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::textile::{KappaStrategy, TextileSystem};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum KappaSpec {
    Named(String),
    Table(Vec<[[String; 2]; 2]>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDoc {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<KappaSpec>,
}

impl InputDoc {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("malformed input document: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn matrices(&self) -> Result<(IntMatrix, IntMatrix)> {
        Ok((IntMatrix::new(&self.a)?, IntMatrix::new(&self.b)?))
    }

    pub fn strategy(&self) -> Result<KappaStrategy> {
        match &self.kappa {
            None => Ok(KappaStrategy::Lex),
            Some(KappaSpec::Named(name)) => named_strategy(name),
            Some(KappaSpec::Table(entries)) => Ok(KappaStrategy::Explicit(entries.clone())),
        }
    }

    pub fn system(&self) -> Result<TextileSystem> {
        self.system_with(&self.strategy()?)
    }

    pub fn system_with(&self, strategy: &KappaStrategy) -> Result<TextileSystem> {
        let (a, b) = self.matrices()?;
        TextileSystem::from_matrices(a, b, strategy)
    }
}

pub fn named_strategy(name: &str) -> Result<KappaStrategy> {
    match name {
        "lex" => Ok(KappaStrategy::Lex),
        "exchange" => Ok(KappaStrategy::Exchange),
        other => Err(Error::Input(format!(
            "unknown kappa strategy {other:?}; expected \"lex\", \"exchange\" or an explicit table"
        ))),
    }
}
