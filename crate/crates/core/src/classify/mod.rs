//! Generators and membership tests for the operator families whose
//! Lie-orthogonal sets are known in closed form, and a randomized check that
//! the closed forms are exactly the Lie-orthogonal sets.

mod family;
mod params;
pub mod random;
mod semidirect;

pub use family::{verify_family, FamilySpec, FamilyTag, VerificationReport};
pub use params::{classify_from_params, ClassifyParams};
pub use semidirect::{semidirect_candidate, semidirect_constraint_matrix, SEMIDIRECT_COEFFICIENTS};

use std::sync::Arc;

use rand::Rng;

use crate::algebra::{ComponentKind, LieAlgebra};
use crate::catalog;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::ortho::Operator;

/// `S = [[0, -E], [E, 0]]` of size `2n`.
pub fn canonical_symplectic(n: usize) -> Matrix {
    let mut s = Matrix::zeros(2 * n, 2 * n);
    for i in 0..n {
        s.set(i, n + i, Rational::from_int(-1));
        s.set(n + i, i, Rational::one());
    }
    s
}

/// `Mᵀ S M = S`.
pub fn is_symplectic(m: &Matrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.rows().is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "symplectic matrices have even size, got {}",
            m.rows()
        )));
    }
    let s = canonical_symplectic(m.rows() / 2);
    Ok(&(&m.transpose() * &s) * m == s)
}

/// Product of `steps` random elementary symplectic factors, seeded.
pub fn random_symplectic(n: usize, seed: u64, steps: usize) -> Result<Matrix> {
    if n == 0 || steps == 0 {
        return Err(Error::InvalidParameter(
            "random_symplectic needs n >= 1 and steps >= 1".into(),
        ));
    }
    let mut rng = random::rng(seed);
    Ok(random::symplectic(&mut rng, n, steps))
}

fn declared_shape(l: &LieAlgebra) -> Result<(Vec<usize>, Vec<std::ops::Range<usize>>)> {
    let d = l
        .decomposition()
        .filter(|d| d.is_reductive())
        .ok_or(Error::NoDecomposition)?;
    let center: Vec<usize> = d.of_kind(ComponentKind::Center).flat_map(|c| c.range()).collect();
    let simple = d.of_kind(ComponentKind::Simple).map(|c| c.range()).collect();
    Ok((center, simple))
}

/// `±Id` on each declared simple component.
pub fn semisimple_op(l: Arc<LieAlgebra>, signs: &[i8]) -> Result<Operator> {
    match l.decomposition() {
        Some(d) if d.is_semisimple() => {}
        _ => return Err(Error::NoDecomposition),
    }
    reductive_op(l, signs, None)
}

/// `±Id` on each declared simple component, zero on the declared center,
/// plus a map `J_Z` into the center given by its center rows
/// (`dim Z × n`, rows in the order of the center coordinates).
pub fn reductive_op(l: Arc<LieAlgebra>, signs: &[i8], center_rows: Option<&Matrix>) -> Result<Operator> {
    let (center, simple) = declared_shape(&l)?;
    if signs.len() != simple.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} signs for {} simple components",
            signs.len(),
            simple.len()
        )));
    }
    let n = l.dim();
    let mut m = Matrix::zeros(n, n);
    for (range, &s) in simple.iter().zip(signs) {
        let v = match s {
            1 => Rational::one(),
            -1 => Rational::from_int(-1),
            _ => return Err(Error::InvalidParameter(format!("sign must be +1 or -1, got {s}"))),
        };
        for i in range.clone() {
            m.set(i, i, v.clone());
        }
    }
    if let Some(rows) = center_rows {
        if rows.rows() != center.len() || rows.cols() != n {
            return Err(Error::DimensionMismatch(format!(
                "center rows must be {}x{n}, got {}x{}",
                center.len(),
                rows.rows(),
                rows.cols()
            )));
        }
        for (r, &i) in center.iter().enumerate() {
            for j in 0..n {
                m.set(i, j, rows.get(r, j).clone());
            }
        }
    }
    Operator::new(l, m)
}

/// `[[r, R], [0, Ĵ]]` on `h_n` with `Ĵ` symplectic.
pub fn heisenberg_op(n: usize, jhat: &Matrix, r: &Rational, row: &Matrix) -> Result<Operator> {
    if jhat.rows() != 2 * n || !is_symplectic(jhat)? {
        return Err(Error::InvalidParameter(
            "essential block must be a symplectic 2n x 2n matrix".into(),
        ));
    }
    if row.rows() != 1 || row.cols() != 2 * n {
        return Err(Error::DimensionMismatch(format!(
            "R must be 1x{}, got {}x{}",
            2 * n,
            row.rows(),
            row.cols()
        )));
    }
    let top = Matrix::hstack(&[&Matrix::scalar(1, r), row])?;
    let bottom = Matrix::hstack(&[&Matrix::zeros(2 * n, 1), jhat])?;
    Operator::new(catalog::heisenberg(n)?, Matrix::vstack(&[&top, &bottom])?)
}

/// Parameters of the two Lie-orthogonal forms on an almost abelian algebra
/// whose matrix `A` is in normal layout (center coordinates first).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlmostAbelianParams {
    /// `rank A >= 2`: `[[B0, B1, B2], [0, μE, B3], [0, 0, 1/μ]]`.
    Generic {
        b0: Matrix,
        b1: Matrix,
        b2: Matrix,
        b3: Matrix,
        mu: Rational,
    },
    /// `rank A = 1`: `[[B0, B1], [0, C]]` with `det C = 1`.
    RankOne { b0: Matrix, b1: Matrix, c: Matrix },
}

/// Center dimension `m` of the almost abelian algebra of `A`, after checking
/// that `A` is in normal layout: the first `m` columns are zero and the
/// kernel of `A` is exactly their span.
pub fn almost_abelian_layout(a: &Matrix) -> Result<usize> {
    if !a.is_square() || a.is_zero() {
        return Err(Error::InvalidParameter("A must be square and nonzero".into()));
    }
    let k = a.rows();
    let m = k - a.rank();
    let lead_zero = (0..m).all(|j| a.column(j).iter().all(Rational::is_zero));
    if !lead_zero {
        return Err(Error::InvalidParameter(format!(
            "A is not in normal layout: its first {m} columns must span the kernel"
        )));
    }
    Ok(m)
}

/// Reorders the ideal basis so that `A` is in normal layout, when the
/// kernel of `A` is spanned by coordinate vectors. Returns the reordered
/// matrix `P⁻¹ A P` and the new order of the old indices.
pub fn normal_layout(a: &Matrix) -> Result<(Matrix, Vec<usize>)> {
    if !a.is_square() || a.is_zero() {
        return Err(Error::InvalidParameter("A must be square and nonzero".into()));
    }
    let k = a.rows();
    let kernel = crate::algebra::Subspace::span(&a.nullspace());
    let zero_cols: Vec<usize> = (0..k).filter(|&j| a.column(j).iter().all(Rational::is_zero)).collect();
    if crate::algebra::Subspace::coordinate(k, zero_cols.iter().copied()) != kernel {
        return Err(Error::InvalidParameter(
            "kernel of A is not spanned by basis vectors; no coordinate normal layout".into(),
        ));
    }
    let mut order = zero_cols.clone();
    order.extend((0..k).filter(|j| !zero_cols.contains(j)));
    let reordered = Matrix::from_fn(k, k, |i, j| a.get(order[i], order[j]).clone());
    Ok((reordered, order))
}

fn expect_shape(m: &Matrix, rows: usize, cols: usize, name: &str) -> Result<()> {
    if m.rows() != rows || m.cols() != cols {
        return Err(Error::DimensionMismatch(format!(
            "{name} must be {rows}x{cols}, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    Ok(())
}

/// Assembles the Lie-orthogonal operator of the given form on
/// `almost_abelian(A)`.
pub fn almost_abelian_op(a: &Matrix, params: &AlmostAbelianParams) -> Result<Operator> {
    let m = almost_abelian_layout(a)?;
    let n = a.rows() + 1;
    let matrix = match params {
        AlmostAbelianParams::Generic { b0, b1, b2, b3, mu } => {
            if m + 2 >= n {
                return Err(Error::InvalidParameter("rank A = 1: use the rank-one form".into()));
            }
            let inv = mu
                .recip()
                .ok_or_else(|| Error::InvalidParameter("mu must be nonzero".into()))?;
            let k = n - m - 1;
            expect_shape(b0, m, m, "B0")?;
            expect_shape(b1, m, k, "B1")?;
            expect_shape(b2, m, 1, "B2")?;
            expect_shape(b3, k, 1, "B3")?;
            Matrix::block_compose(&[
                vec![b0.clone(), b1.clone(), b2.clone()],
                vec![Matrix::zeros(k, m), Matrix::scalar(k, mu), b3.clone()],
                vec![Matrix::zeros(1, m), Matrix::zeros(1, k), Matrix::scalar(1, &inv)],
            ])?
        }
        AlmostAbelianParams::RankOne { b0, b1, c } => {
            if m + 2 != n {
                return Err(Error::InvalidParameter("rank A >= 2: use the generic form".into()));
            }
            expect_shape(b0, m, m, "B0")?;
            expect_shape(b1, m, 2, "B1")?;
            expect_shape(c, 2, 2, "C")?;
            if !c.det()?.is_one() {
                return Err(Error::InvalidParameter("det C must be 1".into()));
            }
            Matrix::block_compose(&[vec![b0.clone(), b1.clone()], vec![Matrix::zeros(2, m), c.clone()]])?
        }
    };
    Operator::new(catalog::almost_abelian(a)?, matrix)
}

/// Lie-orthogonal operator on the minimal-nilradical algebra of dimension
/// `n`: one `SL_2` block per copy of `g_2`, and for odd `n` an arbitrary
/// first row (the map into the center `g_1`).
pub fn minimal_nilradical_op(n: usize, copies: &[Matrix], center_row: Option<&Matrix>) -> Result<Operator> {
    let l = catalog::minimal_nilradical(n)?;
    if copies.len() != n / 2 {
        return Err(Error::DimensionMismatch(format!(
            "{} blocks for {} copies of g2",
            copies.len(),
            n / 2
        )));
    }
    for c in copies {
        expect_shape(c, 2, 2, "copy block")?;
        if !c.det()?.is_one() {
            return Err(Error::InvalidParameter("every copy block needs det 1".into()));
        }
    }
    let odd = n % 2 == 1;
    let mut blocks: Vec<&Matrix> = Vec::new();
    let zero1 = Matrix::zeros(1, 1);
    if odd {
        blocks.push(&zero1);
    }
    blocks.extend(copies.iter());
    let mut m = Matrix::block_diag(&blocks);
    match (odd, center_row) {
        (true, Some(row)) => {
            expect_shape(row, 1, n, "center row")?;
            m.set_block(0, 0, row);
        }
        (false, Some(_)) => return Err(Error::InvalidParameter("even dimension has no center row".into())),
        _ => {}
    }
    Operator::new(l, m)
}

/// Every Lie-orthogonal operator on `sl_2 ⋉ 2g_1`: `Id` and `-Id`.
pub fn sl2_semidirect_ops() -> Vec<Operator> {
    let l = Arc::new(catalog::sl2_semidirect_2g1());
    let id = Operator::identity(Arc::clone(&l));
    let neg = crate::ortho::negate(&id);
    vec![id, neg]
}

/// `P J|_{sl_n}` on `gl_n`: `J` restricted to the traceless matrices and
/// projected along the center, in the basis of [`catalog::sln`].
pub fn gln_traceless_block(j: &Operator, n: usize) -> Result<Matrix> {
    if j.dim() != n * n {
        return Err(Error::DimensionMismatch(format!(
            "operator of size {} on gl_{n}",
            j.dim()
        )));
    }
    let t = catalog::gln_traceless_basis(n);
    let full = Matrix::hstack(&[&t, &Matrix::column_vector(&catalog::gln_identity(n))])?;
    let coords = &full.inverse()? * &(j.matrix() * &t);
    let rows: Vec<usize> = (0..n * n - 1).collect();
    let cols: Vec<usize> = (0..n * n - 1).collect();
    Ok(coords.submatrix(&rows, &cols))
}

/// The sign `s` with `P J|_{sl_n} = s·Id`, if any.
pub fn gln_form_sign(j: &Operator, n: usize) -> Result<Option<i8>> {
    let b = gln_traceless_block(j, n)?;
    let d = n * n - 1;
    Ok(if b == Matrix::identity(d) {
        Some(1)
    } else if b == -&Matrix::identity(d) {
        Some(-1)
    } else {
        None
    })
}

/// One family per classified shape, at small sizes.
pub fn catalog_families() -> Vec<FamilySpec> {
    let sl2 = catalog::sl2_cross();
    let sl3 = catalog::sln(3).expect("n >= 2");
    let int = |r, c, v: &[i64]| Matrix::from_ints(r, c, v);
    let mut out = vec![
        FamilySpec::semisimple(catalog::reductive(0, &[&sl2])),
        FamilySpec::semisimple(catalog::reductive(0, &[&sl2, &sl2])),
        FamilySpec::semisimple(catalog::reductive(0, &[&sl3])),
        FamilySpec::reductive(catalog::reductive(1, &[&sl2])),
        FamilySpec::reductive(catalog::reductive(2, &[&sl2, &sl2])),
        FamilySpec::heisenberg(1),
        FamilySpec::heisenberg(2),
        FamilySpec::heisenberg(3),
        FamilySpec::almost_abelian(&int(1, 1, &[1])),
        FamilySpec::almost_abelian(&int(2, 2, &[0, 1, 0, 1])),
        FamilySpec::almost_abelian(&int(3, 3, &[0, 1, 0, 0, 2, 1, 0, 0, 3])),
        FamilySpec::almost_abelian(&int(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, 1])),
        FamilySpec::almost_abelian(&int(4, 4, &[0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 2])),
        FamilySpec::minimal_nilradical(2),
        FamilySpec::minimal_nilradical(3),
        FamilySpec::minimal_nilradical(4),
        FamilySpec::minimal_nilradical(5),
    ]
    .into_iter()
    .map(|f| f.expect("catalog families are well formed"))
    .collect::<Vec<_>>();
    out.push(FamilySpec::sl2_semidirect());
    out
}

pub(crate) fn random_sign<R: Rng>(rng: &mut R) -> i8 {
    if rng.gen_bool(0.5) {
        1
    } else {
        -1
    }
}
