//! Lie-orthogonal operators: linear maps `J` with `[Jx, Jy] = [x, y]`.
//!
//! In a basis this is `Jᵀ C^k J = C^k` for every structure matrix `C^k`.
//! Two such operators are equivalent when their difference takes values in
//! the center; [`canonicalize`] picks one matrix per equivalence class.

mod json;
mod report;
mod spectral;
mod split;

pub use json::OperatorDoc;
pub use report::{
    invariance_report, levi_unipotence_check, AutomorphismReport, EigenPairCheck, InvarianceReport, Verdict, Witness,
};
pub use spectral::{
    factor_operator, fitting, generalized_eigenspace, ideal_i_lambda, rational_spectrum, IdealLambda, Spectrum,
};
pub use split::{direct_sum_operator, split_operator};

use std::fmt;
use std::sync::Arc;

use crate::algebra::{LieAlgebra, Subspace};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

/// A linear operator on a Lie algebra. Column `j` of the matrix holds the
/// coordinates of `J e_j`.
#[derive(Clone, PartialEq, Eq)]
pub struct Operator {
    algebra: Arc<LieAlgebra>,
    matrix: Matrix,
}

impl Operator {
    pub fn new(algebra: impl Into<Arc<LieAlgebra>>, matrix: Matrix) -> Result<Self> {
        let algebra = algebra.into();
        let n = algebra.dim();
        if matrix.rows() != n || matrix.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} operator on a {n}-dimensional algebra",
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Operator { algebra, matrix })
    }

    pub fn identity(algebra: impl Into<Arc<LieAlgebra>>) -> Self {
        let algebra = algebra.into();
        let matrix = Matrix::identity(algebra.dim());
        Operator { algebra, matrix }
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn algebra_arc(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    fn with_matrix(&self, matrix: Matrix) -> Operator {
        Operator {
            algebra: Arc::clone(&self.algebra),
            matrix,
        }
    }

    fn check_same_algebra(&self, other: &Operator) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::DimensionMismatch("operators act on different algebras".into()))
        }
    }
}

impl fmt::Debug for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Operator({:?})", self.matrix)
    }
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.matrix)
    }
}

pub fn is_lie_orthogonal(j: &Operator) -> bool {
    residuals(j).iter().all(Matrix::is_zero)
}

/// `Jᵀ C^k J - C^k` for `k = 1..n`.
pub fn residuals(j: &Operator) -> Vec<Matrix> {
    let jt = j.matrix.transpose();
    j.algebra
        .structure_matrices()
        .into_iter()
        .map(|c| &(&(&jt * &c) * &j.matrix) - &c)
        .collect()
}

pub fn negate(j: &Operator) -> Operator {
    j.with_matrix(-&j.matrix)
}

/// `J1 ∘ J2`
pub fn compose(j1: &Operator, j2: &Operator) -> Result<Operator> {
    j1.check_same_algebra(j2)?;
    Ok(j1.with_matrix(&j1.matrix * &j2.matrix))
}

pub fn invert(j: &Operator) -> Result<Operator> {
    Ok(j.with_matrix(j.matrix.inverse()?))
}

/// Restriction to a `J`-invariant subalgebra, in the coordinates of the
/// subspace's canonical basis (see [`LieAlgebra::subalgebra`]).
pub fn restrict(j: &Operator, s: &Subspace) -> Result<Operator> {
    let sub = j.algebra.subalgebra(s)?;
    let cols = s
        .basis_vectors()
        .iter()
        .map(|x| {
            let y = j.matrix.mul_vec(x)?;
            s.coordinates(&y).ok_or(Error::NotInvariant)
        })
        .collect::<Result<Vec<_>>>()?;
    Operator::new(sub, Matrix::from_columns(s.dim(), &cols)?)
}

/// `S⁻¹ J S` for an automorphism `S`.
pub fn conjugate(j: &Operator, s: &Matrix) -> Result<Operator> {
    if !j.algebra.is_automorphism(s) {
        return Err(Error::NotAutomorphism);
    }
    let inv = s.inverse()?;
    Ok(j.with_matrix(&(&inv * &j.matrix) * s))
}

/// Every column of `J1 - J2` lies in the center.
pub fn are_equivalent(j1: &Operator, j2: &Operator) -> bool {
    if j1.check_same_algebra(j2).is_err() {
        return false;
    }
    let z = j1.algebra.center();
    let diff = &j1.matrix - &j2.matrix;
    diff.columns().iter().all(|c| z.contains(c))
}

/// Adapted basis `T = [Z | unit vectors on the non-pivot coordinates]` and
/// its inverse, whose rows are `x ↦ x[pivots]` followed by the quotient
/// projection.
fn adapted_basis(z: &Subspace) -> (Matrix, Matrix) {
    let t = Matrix::hstack(&[z.basis(), &z.quotient_section()]).expect("same height");
    let n = z.ambient();
    let mut pick = Matrix::zeros(z.dim(), n);
    for (r, &p) in z.pivots().iter().enumerate() {
        pick.set(r, p, Rational::one());
    }
    let t_inv = Matrix::vstack(&[&pick, &z.quotient_projection()]).expect("same width");
    (t, t_inv)
}

/// Matrix of `J` in the adapted basis: `[[B0, B1], [X, Ĵ]]`, with `X = 0`
/// whenever `J` preserves the center.
pub fn adapted_matrix(j: &Operator) -> Matrix {
    let (t, t_inv) = adapted_basis(&j.algebra.center());
    &(&t_inv * &j.matrix) * &t
}

/// The essential block `Ĵ`, the matrix of `J/Z` on `L/Z`.
pub fn essential_block(j: &Operator) -> Matrix {
    let z = j.algebra.center();
    let q = z.quotient_projection();
    &(&q * &j.matrix) * &z.quotient_section()
}

/// Representative of the equivalence class of `J`: in the adapted basis the
/// center rows are replaced by `B0 = E`, `B1 = 0` and the remaining rows are
/// kept. The result differs from `J` by a center-valued map.
pub fn canonicalize(j: &Operator) -> Operator {
    let z = j.algebra.center();
    if z.is_zero() {
        return j.clone();
    }
    let (t, t_inv) = adapted_basis(&z);
    let mut m = &(&t_inv * &j.matrix) * &t;
    let k = z.dim();
    for r in 0..k {
        for c in 0..m.cols() {
            let v = if r == c { Rational::one() } else { Rational::zero() };
            m.set(r, c, v);
        }
    }
    j.with_matrix(&(&t * &m) * &t_inv)
}

/// An equivalence class of Lie-orthogonal operators, held by its canonical
/// representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorClass {
    representative: Operator,
}

impl OperatorClass {
    pub fn of(j: &Operator) -> Self {
        OperatorClass {
            representative: canonicalize(j),
        }
    }

    pub fn identity(algebra: impl Into<Arc<LieAlgebra>>) -> Self {
        OperatorClass::of(&Operator::identity(algebra))
    }

    pub fn representative(&self) -> &Operator {
        &self.representative
    }
}

pub fn class_compose(a: &OperatorClass, b: &OperatorClass) -> Result<OperatorClass> {
    Ok(OperatorClass::of(&compose(&a.representative, &b.representative)?))
}

/// Inverse class. A canonical representative of a Lie-orthogonal operator is
/// invertible, so [`Error::Singular`] here means the input was not
/// Lie-orthogonal.
pub fn class_invert(a: &OperatorClass) -> Result<OperatorClass> {
    Ok(OperatorClass::of(&invert(&a.representative)?))
}
