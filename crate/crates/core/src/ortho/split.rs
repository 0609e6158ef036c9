use std::sync::Arc;

use super::{canonicalize, is_lie_orthogonal, Operator};
use crate::algebra::{Component, LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

fn direct_components(l: &LieAlgebra) -> Result<&[Component]> {
    match l.decomposition() {
        Some(d) if d.direct_sum => Ok(&d.components),
        _ => Err(Error::NoDecomposition),
    }
}

fn same_structure(a: &LieAlgebra, b: &LieAlgebra) -> bool {
    a.dim() == b.dim() && (0..a.dim()).all(|i| (i + 1..a.dim()).all(|j| a.bracket_basis(i, j) == b.bracket_basis(i, j)))
}

/// Block-diagonal `J_1 ⊕ … ⊕ J_k`, one operator per declared component of
/// `l`, in order.
pub fn direct_sum_operator(parts: &[Operator], l: Arc<LieAlgebra>) -> Result<Operator> {
    let comps = direct_components(&l)?;
    if comps.len() != parts.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} operators for {} components",
            parts.len(),
            comps.len()
        )));
    }
    for (c, p) in comps.iter().zip(parts) {
        let sub = l.subalgebra(&c.subspace(l.dim()))?;
        if !same_structure(&sub, p.algebra()) {
            return Err(Error::DimensionMismatch(format!(
                "operator for component at {}..{} acts on a different algebra",
                c.start + 1,
                c.start + c.len
            )));
        }
    }
    let blocks: Vec<&Matrix> = parts.iter().map(Operator::matrix).collect();
    Operator::new(l, Matrix::block_diag(&blocks))
}

/// Splits a Lie-orthogonal operator on a declared direct sum into one block
/// per component. The canonical representative is taken first; each
/// off-diagonal block `P_i J P_j` is checked to be center-valued and then
/// dropped, which changes `J` only within its equivalence class.
pub fn split_operator(j: &Operator) -> Result<Vec<Operator>> {
    let l = j.algebra();
    let comps = direct_components(l)?;
    if !is_lie_orthogonal(j) {
        return Err(Error::NotLieOrthogonal);
    }
    let c = canonicalize(j);
    let z = l.center();
    let n = l.dim();
    for (a, ca) in comps.iter().enumerate() {
        for (b, cb) in comps.iter().enumerate() {
            if a == b {
                continue;
            }
            for col in cb.range() {
                let mut v = vec![crate::linalg::Rational::zero(); n];
                for row in ca.range() {
                    v[row] = c.matrix().get(row, col).clone();
                }
                if !z.contains(&v) {
                    return Err(Error::NotCentral { from: b + 1, to: a + 1 });
                }
            }
        }
    }
    comps
        .iter()
        .map(|comp| {
            let idx: Vec<usize> = comp.range().collect();
            let sub = l.subalgebra(&Subspace::coordinate(n, comp.range()))?;
            Operator::new(sub, c.matrix().submatrix(&idx, &idx))
        })
        .collect()
}
