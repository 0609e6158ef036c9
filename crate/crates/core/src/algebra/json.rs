//! JSON schema for algebras:
//!
//! ```json
//! {"dim": 3, "basis": ["e1", "e2", "e3"],
//!  "brackets": [{"i": 1, "j": 2, "result": {"3": "1"}}],
//!  "decomposition": {"direct_sum": true,
//!                    "components": [{"kind": "simple", "start": 1, "len": 3}]}}
//! ```
//!
//! Indices are 1-based, only `i < j` entries are accepted, and omitted
//! brackets are zero. Loading runs the Jacobi check.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Component, ComponentKind, Decomposition, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::Rational;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    #[serde(default)]
    pub brackets: Vec<BracketDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decomposition: Option<DecompositionDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BracketDoc {
    pub i: usize,
    pub j: usize,
    pub result: BTreeMap<usize, Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DecompositionDoc {
    #[serde(default)]
    pub direct_sum: bool,
    pub components: Vec<ComponentDoc>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentDoc {
    pub kind: ComponentKind,
    pub start: usize,
    pub len: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl AlgebraDoc {
    pub fn into_algebra(self) -> Result<LieAlgebra> {
        let n = self.dim;
        let mut seen = std::collections::BTreeSet::new();
        let mut b = LieAlgebra::builder(n);
        for br in &self.brackets {
            if br.i < 1 || br.j > n || br.i >= br.j {
                return Err(Error::Schema(format!(
                    "bracket ({}, {}) must satisfy 1 <= i < j <= {n}",
                    br.i, br.j
                )));
            }
            if !seen.insert((br.i, br.j)) {
                return Err(Error::Schema(format!("bracket ({}, {}) given twice", br.i, br.j)));
            }
            let mut entries = Vec::new();
            for (&k, c) in &br.result {
                if k < 1 || k > n {
                    return Err(Error::Schema(format!(
                        "bracket ({}, {}) has result index {k} outside 1..={n}",
                        br.i, br.j
                    )));
                }
                entries.push((k - 1, c.clone()));
            }
            b = b.bracket(br.i - 1, br.j - 1, &entries);
        }
        if let Some(names) = self.basis {
            b = b.names(names);
        }
        if let Some(d) = self.decomposition {
            let components = d
                .components
                .into_iter()
                .map(|c| {
                    if c.start < 1 {
                        return Err(Error::Schema("component start is 1-based".into()));
                    }
                    Ok(Component {
                        kind: c.kind,
                        start: c.start - 1,
                        len: c.len,
                        label: c.label,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            b = b.decomposition(Decomposition {
                direct_sum: d.direct_sum,
                components,
            });
        }
        b.build()
    }
}

impl From<&LieAlgebra> for AlgebraDoc {
    fn from(alg: &LieAlgebra) -> Self {
        let n = alg.dim();
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let result: BTreeMap<usize, Rational> = alg
                    .bracket_basis(i, j)
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (k + 1, c))
                    .collect();
                if !result.is_empty() {
                    brackets.push(BracketDoc {
                        i: i + 1,
                        j: j + 1,
                        result,
                    });
                }
            }
        }
        let decomposition = alg.decomposition().map(|d| DecompositionDoc {
            direct_sum: d.direct_sum,
            components: d
                .components
                .iter()
                .map(|c| ComponentDoc {
                    kind: c.kind,
                    start: c.start + 1,
                    len: c.len,
                    label: c.label.clone(),
                })
                .collect(),
        });
        AlgebraDoc {
            dim: n,
            basis: Some(alg.names().to_vec()),
            brackets,
            decomposition,
        }
    }
}

impl LieAlgebra {
    pub fn from_json(s: &str) -> Result<LieAlgebra> {
        let doc: AlgebraDoc = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        doc.into_algebra()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&AlgebraDoc::from(self)).expect("algebra docs serialize")
    }
}
