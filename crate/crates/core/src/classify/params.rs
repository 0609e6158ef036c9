//! JSON parameters for building one operator of a classified family.
//! Omitted blocks default to zero, omitted scalars and per-copy blocks to
//! the identity.

use std::sync::Arc;

use serde::Deserialize;

use super::{
    almost_abelian_layout, almost_abelian_op, heisenberg_op, minimal_nilradical_op, reductive_op, AlmostAbelianParams,
    FamilySpec,
};
use crate::algebra::LieAlgebra;
use crate::catalog;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::ortho::Operator;

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReductiveParams {
    #[serde(default)]
    pub center_dim: usize,
    /// Simple component names: `sl2` (cross-product basis) or `slN`.
    pub simple: Vec<String>,
    #[serde(default)]
    pub signs: Option<Vec<i8>>,
    #[serde(default)]
    pub center_rows: Option<Matrix>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HeisenbergParams {
    pub n: usize,
    #[serde(default)]
    pub jhat: Option<Matrix>,
    #[serde(default)]
    pub r: Option<Rational>,
    #[serde(default, rename = "R")]
    pub row: Option<Matrix>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlmostAbelianJson {
    pub a: Matrix,
    #[serde(default)]
    pub mu: Option<Rational>,
    #[serde(default)]
    pub c: Option<Matrix>,
    #[serde(default)]
    pub b0: Option<Matrix>,
    #[serde(default)]
    pub b1: Option<Matrix>,
    #[serde(default)]
    pub b2: Option<Matrix>,
    #[serde(default)]
    pub b3: Option<Matrix>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MinimalNilradicalParams {
    pub n: usize,
    #[serde(default)]
    pub copies: Option<Vec<Matrix>>,
    #[serde(default)]
    pub center_row: Option<Matrix>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignParams {
    #[serde(default = "plus")]
    pub sign: i8,
}

fn plus() -> i8 {
    1
}

/// Parsed parameters for one family.
#[derive(Clone, Debug)]
pub enum ClassifyParams {
    Semisimple(ReductiveParams),
    Reductive(ReductiveParams),
    Heisenberg(HeisenbergParams),
    AlmostAbelian(AlmostAbelianJson),
    MinimalNilradical(MinimalNilradicalParams),
    Sl2Semidirect(SignParams),
}

fn parse<T: for<'de> Deserialize<'de>>(json: &str) -> Result<T> {
    serde_json::from_str(json).map_err(|e| Error::Schema(e.to_string()))
}

impl ClassifyParams {
    pub fn parse(family: &str, json: &str) -> Result<Self> {
        Ok(match family {
            "semisimple" => ClassifyParams::Semisimple(parse(json)?),
            "reductive" => ClassifyParams::Reductive(parse(json)?),
            "heisenberg" => ClassifyParams::Heisenberg(parse(json)?),
            "almost-abelian" | "almost_abelian" => ClassifyParams::AlmostAbelian(parse(json)?),
            "minimal-nilradical" | "minimal_nilradical" => ClassifyParams::MinimalNilradical(parse(json)?),
            "sl2-semidirect" | "sl2_semidirect" => ClassifyParams::Sl2Semidirect(parse(json)?),
            other => {
                return Err(Error::InvalidParameter(format!(
                    "unknown family '{other}'; expected semisimple, reductive, heisenberg, \
                     almost-abelian, minimal-nilradical or sl2-semidirect"
                )))
            }
        })
    }
}

fn simple_algebra(name: &str) -> Result<LieAlgebra> {
    match name {
        "sl2" | "sl2-cross" => Ok(catalog::sl2_cross()),
        _ => {
            let n = name
                .strip_prefix("sl")
                .and_then(|s| s.parse::<usize>().ok())
                .ok_or_else(|| Error::InvalidParameter(format!("unknown simple algebra '{name}'")))?;
            catalog::sln(n)
        }
    }
}

fn reductive_from(p: &ReductiveParams, semisimple: bool) -> Result<(Operator, FamilySpec)> {
    if semisimple && p.center_dim > 0 {
        return Err(Error::InvalidParameter("semisimple algebras have no center".into()));
    }
    if p.simple.is_empty() {
        return Err(Error::InvalidParameter(
            "at least one simple component is required".into(),
        ));
    }
    let parts = p.simple.iter().map(|s| simple_algebra(s)).collect::<Result<Vec<_>>>()?;
    let refs: Vec<&LieAlgebra> = parts.iter().collect();
    let l = Arc::new(catalog::reductive(p.center_dim, &refs));
    let signs = p.signs.clone().unwrap_or_else(|| vec![1; parts.len()]);
    let op = reductive_op(Arc::clone(&l), &signs, p.center_rows.as_ref())?;
    let spec = if semisimple {
        FamilySpec::semisimple((*l).clone())?
    } else {
        FamilySpec::reductive((*l).clone())?
    };
    Ok((op, spec))
}

fn or_zero(m: &Option<Matrix>, rows: usize, cols: usize) -> Matrix {
    m.clone().unwrap_or_else(|| Matrix::zeros(rows, cols))
}

/// Builds the operator described by `params` and the family it belongs to.
pub fn classify_from_params(params: &ClassifyParams) -> Result<(Operator, FamilySpec)> {
    match params {
        ClassifyParams::Semisimple(p) => reductive_from(p, true),
        ClassifyParams::Reductive(p) => reductive_from(p, false),
        ClassifyParams::Heisenberg(p) => {
            let jhat = p.jhat.clone().unwrap_or_else(|| Matrix::identity(2 * p.n));
            let r = p.r.clone().unwrap_or_else(Rational::one);
            let row = or_zero(&p.row, 1, 2 * p.n);
            Ok((heisenberg_op(p.n, &jhat, &r, &row)?, FamilySpec::heisenberg(p.n)?))
        }
        ClassifyParams::AlmostAbelian(p) => {
            let m = almost_abelian_layout(&p.a)?;
            let n = p.a.rows() + 1;
            let params = if m + 2 < n {
                if p.c.is_some() {
                    return Err(Error::InvalidParameter("rank A >= 2 takes mu, not C".into()));
                }
                let k = n - m - 1;
                AlmostAbelianParams::Generic {
                    b0: or_zero(&p.b0, m, m),
                    b1: or_zero(&p.b1, m, k),
                    b2: or_zero(&p.b2, m, 1),
                    b3: or_zero(&p.b3, k, 1),
                    mu: p.mu.clone().unwrap_or_else(Rational::one),
                }
            } else {
                if p.mu.is_some() || p.b2.is_some() || p.b3.is_some() {
                    return Err(Error::InvalidParameter("rank A = 1 takes C, B0 and B1 only".into()));
                }
                AlmostAbelianParams::RankOne {
                    b0: or_zero(&p.b0, m, m),
                    b1: or_zero(&p.b1, m, 2),
                    c: p.c.clone().unwrap_or_else(|| Matrix::identity(2)),
                }
            };
            Ok((almost_abelian_op(&p.a, &params)?, FamilySpec::almost_abelian(&p.a)?))
        }
        ClassifyParams::MinimalNilradical(p) => {
            let copies = p.copies.clone().unwrap_or_else(|| vec![Matrix::identity(2); p.n / 2]);
            Ok((
                minimal_nilradical_op(p.n, &copies, p.center_row.as_ref())?,
                FamilySpec::minimal_nilradical(p.n)?,
            ))
        }
        ClassifyParams::Sl2Semidirect(p) => {
            let spec = FamilySpec::sl2_semidirect();
            let s = match p.sign {
                1 => Rational::one(),
                -1 => Rational::from_int(-1),
                other => return Err(Error::InvalidParameter(format!("sign must be +1 or -1, got {other}"))),
            };
            let op = Operator::new(Arc::clone(spec.algebra()), Matrix::scalar(5, &s))?;
            Ok((op, spec))
        }
    }
}
