//! Candidates `Id + N` with `N` valued in the radical of `sl_2 ⋉ 2g_1`.

use crate::catalog;
use crate::linalg::{Matrix, Rational};
use crate::ortho::{residuals, Operator};

/// Coefficient names in the order used by [`semidirect_candidate`].
pub const SEMIDIRECT_COEFFICIENTS: [&str; 10] = ["a1", "a2", "a3", "a4", "a5", "b1", "b2", "b3", "b4", "b5"];

/// The operator with `J e_i = e_i + a_i e_4 + b_i e_5` for `i = 1, 2, 3` and
/// `J e_i = a_i e_4 + b_i e_5` for `i = 4, 5`, from `[a1..a5, b1..b5]`.
/// The identity is `a4 = b5 = 1` with all other coefficients zero.
pub fn semidirect_candidate(coeffs: &[Rational; 10]) -> Operator {
    let mut m = Matrix::zeros(5, 5);
    for i in 0..3 {
        m.set(i, i, Rational::one());
    }
    for i in 0..5 {
        m.set(3, i, coeffs[i].clone());
        m.set(4, i, coeffs[5 + i].clone());
    }
    Operator::new(catalog::sl2_semidirect_2g1(), m).expect("5x5 matrix")
}

fn flat_residual(coeffs: &[Rational; 10]) -> Vec<Rational> {
    residuals(&semidirect_candidate(coeffs))
        .into_iter()
        .flat_map(|r| r.entries().to_vec())
        .collect()
}

/// Residual of a candidate as an affine map of its coefficients: returns
/// `(M, r0)` with `residual(c) = r0 + M c`. The radical is abelian, so the
/// quadratic terms vanish and the map is affine.
pub fn semidirect_constraint_matrix() -> (Matrix, Vec<Rational>) {
    let zero: [Rational; 10] = std::array::from_fn(|_| Rational::zero());
    let r0 = flat_residual(&zero);
    let columns: Vec<Vec<Rational>> = (0..10)
        .map(|k| {
            let mut c = zero.clone();
            c[k] = Rational::one();
            flat_residual(&c).iter().zip(&r0).map(|(x, y)| x - y).collect()
        })
        .collect();
    let m = Matrix::from_columns(r0.len(), &columns).expect("equal-length columns");
    (m, r0)
}
