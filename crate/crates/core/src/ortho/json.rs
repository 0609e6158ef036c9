use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::Operator;
use crate::algebra::LieAlgebra;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// `{"matrix": [["p/q", ...], ...]}`, row-major; column `j` is `J e_j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorDoc {
    pub matrix: Matrix,
}

impl Operator {
    pub fn from_json(algebra: impl Into<Arc<LieAlgebra>>, s: &str) -> Result<Operator> {
        let doc: OperatorDoc = serde_json::from_str(s).map_err(|e| Error::Schema(e.to_string()))?;
        Operator::new(algebra, doc.matrix)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&OperatorDoc {
            matrix: self.matrix().clone(),
        })
        .expect("operator docs serialize")
    }
}
