//! Concrete algebra families with fixed, documented bases.

use crate::algebra::{Component, ComponentKind, Decomposition, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

/// `n`-dimensional abelian algebra, declared as pure center.
pub fn abelian(n: usize) -> LieAlgebra {
    let components = if n == 0 {
        Vec::new()
    } else {
        vec![Component::new(ComponentKind::Center, 0, n)]
    };
    LieAlgebra::builder(n)
        .decomposition(Decomposition::direct(components))
        .build()
        .expect("abelian algebra is valid")
}

/// The two-dimensional non-abelian algebra: `[e1, e2] = e2`.
pub fn g2() -> LieAlgebra {
    LieAlgebra::builder(2)
        .bracket_int(0, 1, &[(1, 1)])
        .build()
        .expect("g2 is valid")
}

/// `sl_2` as three-vectors under the cross product:
/// `[e1, e2] = e3`, `[e2, e3] = e1`, `[e3, e1] = e2`.
pub fn sl2_cross() -> LieAlgebra {
    LieAlgebra::builder(3)
        .bracket_int(0, 1, &[(2, 1)])
        .bracket_int(1, 2, &[(0, 1)])
        .bracket_int(2, 0, &[(1, 1)])
        .decomposition(Decomposition::direct(vec![
            Component::new(ComponentKind::Simple, 0, 3).labeled("sl2")
        ]))
        .build()
        .expect("sl2 is valid")
}

/// `gl_n` in the matrix-unit basis `E^{ij}`, ordered row-major (`E^{11}`,
/// `E^{12}`, …), with `[E^{ij}, E^{kl}] = δ_{jk} E^{il} - δ_{li} E^{kj}`.
pub fn gln(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("gl_n needs n >= 2, got {n}")));
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut b = LieAlgebra::builder(n * n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let (a, c) = (idx(i, j), idx(k, l));
                    if a >= c {
                        continue;
                    }
                    let mut terms = Vec::new();
                    if j == k {
                        terms.push((idx(i, l), 1));
                    }
                    if l == i {
                        terms.push((idx(k, j), -1));
                    }
                    if !terms.is_empty() {
                        b = b.bracket_int(a, c, &terms);
                    }
                }
            }
        }
    }
    let names = (0..n * n).map(|a| format!("E{}{}", a / n + 1, a % n + 1)).collect();
    b.names(names).build()
}

/// Coordinate vector of the identity matrix `E_n` in the basis of [`gln`].
pub fn gln_identity(n: usize) -> Vec<Rational> {
    (0..n * n)
        .map(|a| {
            if a / n == a % n {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// Basis of the traceless matrices inside [`gln`]: off-diagonal units
/// followed by `E^{ii} - E^{i+1,i+1}`, in the order used by [`sln`].
pub fn gln_traceless_basis(n: usize) -> Matrix {
    let mut cols = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut v = vec![Rational::zero(); n * n];
                v[i * n + j] = Rational::one();
                cols.push(v);
            }
        }
    }
    for i in 0..n - 1 {
        let mut v = vec![Rational::zero(); n * n];
        v[i * n + i] = Rational::one();
        v[(i + 1) * n + i + 1] = Rational::from_int(-1);
        cols.push(v);
    }
    Matrix::from_columns(n * n, &cols).expect("columns have length n^2")
}

/// `sl_n` in the basis of off-diagonal matrix units (row-major) followed by
/// the consecutive diagonal differences `H_i = E^{ii} - E^{i+1,i+1}`.
pub fn sln(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("sl_n needs n >= 2, got {n}")));
    }
    let off: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let dim = n * n - 1;
    // basis element as an n×n matrix
    let as_matrix = |a: usize| -> Matrix {
        let mut m = Matrix::zeros(n, n);
        if a < off.len() {
            let (i, j) = off[a];
            m.set(i, j, Rational::one());
        } else {
            let i = a - off.len();
            m.set(i, i, Rational::one());
            m.set(i + 1, i + 1, Rational::from_int(-1));
        }
        m
    };
    // coordinates of a traceless matrix
    let coords = |m: &Matrix| -> Vec<(usize, Rational)> {
        let mut out = Vec::new();
        for (a, &(i, j)) in off.iter().enumerate() {
            if !m.get(i, j).is_zero() {
                out.push((a, m.get(i, j).clone()));
            }
        }
        let mut running = Rational::zero();
        for i in 0..n - 1 {
            running += m.get(i, i);
            if !running.is_zero() {
                out.push((off.len() + i, running.clone()));
            }
        }
        out
    };
    let mut b = LieAlgebra::builder(dim);
    for a in 0..dim {
        for c in a + 1..dim {
            let (x, y) = (as_matrix(a), as_matrix(c));
            let comm = &(&x * &y) - &(&y * &x);
            let entries = coords(&comm);
            if !entries.is_empty() {
                b = b.bracket(a, c, &entries);
            }
        }
    }
    let mut names: Vec<String> = off.iter().map(|(i, j)| format!("E{}{}", i + 1, j + 1)).collect();
    names.extend((1..n).map(|i| format!("H{i}")));
    b.names(names)
        .decomposition(Decomposition::direct(vec![Component::new(
            ComponentKind::Simple,
            0,
            dim,
        )
        .labeled(format!("sl{n}"))]))
        .build()
}

/// Heisenberg algebra `h_n` on `e, p_1..p_n, q_1..q_n` with `[p_j, q_j] = e`.
pub fn heisenberg(n: usize) -> Result<LieAlgebra> {
    if n < 1 {
        return Err(Error::InvalidParameter("heisenberg(n) needs n >= 1".into()));
    }
    let mut b = LieAlgebra::builder(2 * n + 1);
    for j in 1..=n {
        b = b.bracket_int(j, n + j, &[(0, 1)]);
    }
    let mut names = vec!["e".to_string()];
    names.extend((1..=n).map(|j| format!("p{j}")));
    names.extend((1..=n).map(|j| format!("q{j}")));
    b.names(names)
        .decomposition(Decomposition::partial(vec![Component::new(
            ComponentKind::Center,
            0,
            1,
        )]))
        .build()
}

/// Almost abelian algebra of dimension `A.rows() + 1`: `e_1..e_{n-1}` span an
/// abelian ideal and `[e_n, e_j] = Σ_i a_{ij} e_i`.
pub fn almost_abelian(a: &Matrix) -> Result<LieAlgebra> {
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if a.is_zero() {
        return Err(Error::InvalidParameter(
            "almost_abelian needs a nonzero matrix; use abelian(n) instead".into(),
        ));
    }
    let m = a.rows();
    let n = m + 1;
    let mut b = LieAlgebra::builder(n);
    for j in 0..m {
        let entries: Vec<(usize, Rational)> = (0..m)
            .filter(|&i| !a.get(i, j).is_zero())
            .map(|i| (i, a.get(i, j).clone()))
            .collect();
        if !entries.is_empty() {
            b = b.bracket(m, j, &entries);
        }
    }
    b.decomposition(Decomposition::partial(vec![
        Component::new(ComponentKind::Ideal, 0, m).labeled("abelian ideal")
    ]))
    .build()
}

/// `sl_2 ⋉ 2g_1`: `e1, e2, e3` span a Levi factor `sl_2` acting on the
/// abelian radical `<e4, e5>` by its two-dimensional representation.
pub fn sl2_semidirect_2g1() -> LieAlgebra {
    LieAlgebra::builder(5)
        .bracket_int(0, 1, &[(1, 2)])
        .bracket_int(0, 2, &[(2, -2)])
        .bracket_int(1, 2, &[(0, 1)])
        .bracket_int(0, 3, &[(3, 1)])
        .bracket_int(1, 4, &[(3, 1)])
        .bracket_int(2, 3, &[(4, 1)])
        .bracket_int(0, 4, &[(4, -1)])
        .decomposition(Decomposition::partial(vec![
            Component::new(ComponentKind::Levi, 0, 3).labeled("sl2"),
            Component::new(ComponentKind::Radical, 3, 2),
        ]))
        .build()
        .expect("sl2 semidirect 2g1 is valid")
}

/// Solvable algebra with nilradical of minimal dimension: `(n/2) g_2` for
/// even `n`, `g_1 ⊕ ⌊n/2⌋ g_2` (center first) for odd `n`.
pub fn minimal_nilradical(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "minimal_nilradical needs n >= 2, got {n}"
        )));
    }
    let g = g2();
    let center = abelian(1);
    let mut parts: Vec<&LieAlgebra> = Vec::new();
    if n % 2 == 1 {
        parts.push(&center);
    }
    parts.extend(std::iter::repeat_n(&g, n / 2));
    Ok(LieAlgebra::direct_sum(&parts))
}

/// Reductive algebra `k g_1 ⊕ L_1 ⊕ … ⊕ L_m` (center first).
pub fn reductive(center_dim: usize, simple: &[&LieAlgebra]) -> LieAlgebra {
    let center = abelian(center_dim);
    let mut parts: Vec<&LieAlgebra> = Vec::new();
    if center_dim > 0 {
        parts.push(&center);
    }
    parts.extend_from_slice(simple);
    LieAlgebra::direct_sum(&parts)
}

/// Builds a catalog algebra from a family name and integer parameter, as
/// used by the command line.
pub fn by_name(family: &str, n: Option<usize>) -> Result<LieAlgebra> {
    let need = |what: &str| n.ok_or_else(|| Error::InvalidParameter(format!("family {what} needs a size parameter")));
    match family {
        "abelian" => Ok(abelian(need(family)?)),
        "g2" => Ok(g2()),
        "sl2" | "sl2-cross" => Ok(sl2_cross()),
        "gl" | "gln" => gln(need(family)?),
        "sl" | "sln" => sln(need(family)?),
        "heisenberg" => heisenberg(need(family)?),
        "sl2-semidirect" | "sl2-semidirect-2g1" => Ok(sl2_semidirect_2g1()),
        "minimal-nilradical" => minimal_nilradical(need(family)?),
        other => Err(Error::InvalidParameter(format!("unknown catalog family {other:?}"))),
    }
}
