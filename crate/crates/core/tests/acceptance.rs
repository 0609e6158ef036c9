//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails. All checks are exact.

use std::process::ExitCode;
use std::sync::Arc;

use lieortho::catalog;
use lieortho::classify::{
    self, catalog_families, gln_form_sign, heisenberg_op, random, semidirect_candidate, semidirect_constraint_matrix,
    sl2_semidirect_ops, AlmostAbelianParams, FamilySpec, FamilyTag,
};
use lieortho::ortho::{
    are_equivalent, canonicalize, class_compose, class_invert, compose, direct_sum_operator, essential_block, fitting,
    ideal_i_lambda, is_lie_orthogonal, negate, rational_spectrum, split_operator, Operator, OperatorClass,
};
use lieortho::{LieAlgebra, Matrix, Rational, Subspace};
use rand::Rng;

struct Tally {
    passed: usize,
    total: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            passed: 0,
            total: 0,
            first_failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    fn ok(&self) -> bool {
        self.total > 0 && self.passed == self.total
    }
}

fn int(n: i64) -> Rational {
    Rational::from_int(n)
}

fn q(p: i64, d: i64) -> Rational {
    Rational::new(p, d).unwrap()
}

fn ints(rows: usize, cols: usize, v: &[i64]) -> Matrix {
    Matrix::from_ints(rows, cols, v)
}

// Oracles built directly from structure constants.

/// `[Je_i, Je_j] = [e_i, e_j]` for every basis pair.
fn preserves_brackets(l: &LieAlgebra, m: &Matrix) -> bool {
    let n = l.dim();
    (0..n).all(|i| (i + 1..n).all(|j| l.bracket(&m.column(i), &m.column(j)).unwrap() == l.bracket_basis(i, j)))
}

/// Matrix of `x ↦ [x, e_j]`.
fn right_bracket(l: &LieAlgebra, j: usize) -> Matrix {
    Matrix::from_fn(l.dim(), l.dim(), |k, i| l.structure_constant(i, j, k))
}

/// Rows spanning the annihilator of `s`.
fn annihilator(s: &Subspace) -> Matrix {
    let n = s.ambient();
    if s.is_zero() {
        return Matrix::identity(n);
    }
    s.basis().transpose().nullspace().transpose()
}

/// `{x : [x, e_j] ∈ s for all j}`
fn preimage_of_center(l: &LieAlgebra, s: &Subspace) -> Subspace {
    let w = annihilator(s);
    let blocks: Vec<Matrix> = (0..l.dim()).map(|j| &w * &right_bracket(l, j)).collect();
    if blocks.iter().all(|b| b.rows() == 0) {
        return Subspace::full(l.dim());
    }
    let stacked = Matrix::vstack(&blocks.iter().filter(|b| b.rows() > 0).collect::<Vec<_>>()).unwrap();
    Subspace::span(&stacked.nullspace())
}

fn center_oracle(l: &LieAlgebra) -> Subspace {
    preimage_of_center(l, &Subspace::zero(l.dim()))
}

fn ascending_oracle(l: &LieAlgebra) -> Vec<Subspace> {
    let mut terms = vec![center_oracle(l)];
    loop {
        let next = preimage_of_center(l, terms.last().unwrap());
        if &next == terms.last().unwrap() {
            return terms;
        }
        terms.push(next);
    }
}

fn span_of(n: usize, vectors: Vec<Vec<Rational>>) -> Subspace {
    Subspace::from_vectors(n, &vectors).unwrap()
}

fn bracket_span_oracle(l: &LieAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut out = Vec::new();
    for x in a.basis_vectors() {
        for y in b.basis_vectors() {
            out.push(l.bracket(&x, &y).unwrap());
        }
    }
    span_of(l.dim(), out)
}

fn radical_oracle(l: &LieAlgebra) -> Subspace {
    let n = l.dim();
    let derived = span_of(
        n,
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (i, j)))
            .map(|(i, j)| l.bracket_basis(i, j))
            .collect(),
    );
    if derived.is_zero() {
        return Subspace::full(n);
    }
    // ad e_a has (k, j) entry c_{aj}^k
    let ads: Vec<Matrix> = (0..n)
        .map(|a| Matrix::from_fn(n, n, |k, j| l.structure_constant(a, j, k)))
        .collect();
    let killing = Matrix::from_fn(n, n, |a, b| (&ads[a] * &ads[b]).trace());
    Subspace::span(&(&derived.basis().transpose() * &killing).nullspace())
}

fn is_invariant_oracle(s: &Subspace, m: &Matrix) -> bool {
    s.basis_vectors().iter().all(|v| s.contains(&m.mul_vec(v).unwrap()))
}

fn power(m: &Matrix, k: usize) -> Matrix {
    let mut p = Matrix::identity(m.rows());
    for _ in 0..k {
        p = &p * m;
    }
    p
}

fn generalized_eigenspace_oracle(m: &Matrix, lambda: &Rational) -> Subspace {
    let n = m.rows();
    Subspace::span(&power(&(m - &Matrix::scalar(n, lambda)), n).nullspace())
}

/// Second derived algebra of `s` vanishes.
fn solvable_degree_le_2(l: &LieAlgebra, s: &Subspace) -> bool {
    let d1 = bracket_span_oracle(l, s, s);
    bracket_span_oracle(l, &d1, &d1).is_zero()
}

/// Skew form of `h_n` on `L/Z`, read from the structure constants.
fn heisenberg_form(l: &LieAlgebra) -> Matrix {
    let d = l.dim() - 1;
    Matrix::from_fn(d, d, |a, b| l.structure_constant(a + 1, b + 1, 0))
}

// Criteria

fn heisenberg_classification() -> Tally {
    let mut t = Tally::new();
    let mut rng = random::rng(101);
    for n in 1..=3 {
        let l = catalog::heisenberg(n).unwrap();
        let s = heisenberg_form(&l);
        let d = 2 * n;
        for _ in 0..100 {
            let steps = rng.gen_range(1..=6);
            let jhat = random::symplectic(&mut rng, n, steps);
            let r = random::nonzero_rational(&mut rng);
            let row = random::rational_matrix(&mut rng, 1, d);
            let j = heisenberg_op(n, &jhat, &r, &row).unwrap();
            let symplectic = &(&jhat.transpose() * &s) * &jhat == s;
            let ok = symplectic && is_lie_orthogonal(&j) && preserves_brackets(&l, j.matrix());
            t.check(ok, || format!("h_{n}: sampled operator fails\n{}", j.matrix()));
        }
        for k in 0..100 {
            let steps = rng.gen_range(1..=6);
            let mut jhat = random::symplectic(&mut rng, n, steps);
            let mut m = Matrix::zeros(d + 1, d + 1);
            m.set(0, 0, random::nonzero_rational(&mut rng));
            if k % 2 == 0 {
                // break the symplectic condition
                loop {
                    let (a, b) = (rng.gen_range(0..d), rng.gen_range(0..d));
                    let v = jhat.get(a, b) + &random::nonzero_rational(&mut rng);
                    jhat.set(a, b, v);
                    if &(&jhat.transpose() * &s) * &jhat != s {
                        break;
                    }
                }
            } else {
                let i = rng.gen_range(1..=d);
                m.set(i, 0, random::nonzero_rational(&mut rng));
            }
            m.set_block(1, 1, &jhat);
            m.set_block(0, 1, &random::rational_matrix(&mut rng, 1, d));
            let j = Operator::new(l.clone(), m).unwrap();
            let ok = !is_lie_orthogonal(&j) && !preserves_brackets(&l, j.matrix());
            t.check(ok, || format!("h_{n}: out-of-form operator passes\n{}", j.matrix()));
        }
    }
    t
}

fn trivial_only_on_simple() -> Tally {
    let mut t = Tally::new();
    let mut rng = random::rng(202);
    let mut passing: Vec<Operator> = Vec::new();
    for l in [catalog::sl2_cross(), catalog::sln(3).unwrap()] {
        let l = Arc::new(l);
        let n = l.dim();
        let id = Operator::identity(Arc::clone(&l));
        for j in [id.clone(), negate(&id)] {
            let ok = is_lie_orthogonal(&j) && preserves_brackets(&l, j.matrix());
            t.check(ok, || format!("±Id fails on a {n}-dimensional simple algebra"));
            passing.push(j);
        }
        let mut drawn = 0;
        while drawn < 200 {
            let m = random::int_matrix(&mut rng, n, n);
            if m.is_identity() || (-&m).is_identity() {
                continue;
            }
            drawn += 1;
            let j = Operator::new(Arc::clone(&l), m).unwrap();
            let lo = is_lie_orthogonal(&j);
            t.check(!lo && !preserves_brackets(&l, j.matrix()), || {
                format!("non-trivial operator passes\n{}", j.matrix())
            });
            if lo {
                passing.push(j);
            }
        }
    }
    // sign choices on semisimple sums
    for f in catalog_families().iter().filter(|f| f.tag == FamilyTag::Semisimple) {
        let mut rng = random::rng(203);
        for _ in 0..10 {
            passing.push(f.sample(&mut rng));
        }
    }
    for j in &passing {
        let ok = is_lie_orthogonal(j) && (j.matrix() * j.matrix()).is_identity();
        t.check(ok, || format!("passing operator with J^2 != Id\n{}", j.matrix()));
    }
    t
}

fn gln_reduction() -> Tally {
    let mut t = Tally::new();
    let mut rng = random::rng(303);
    for n in [2usize, 3] {
        let l = Arc::new(catalog::gln(n).unwrap());
        let dim = n * n;
        let d = dim - 1;
        let center = center_oracle(&l);
        let frame = Matrix::hstack(&[
            &catalog::gln_traceless_basis(n),
            &Matrix::column_vector(&catalog::gln_identity(n)),
        ])
        .unwrap();
        let frame_inv = frame.inverse().unwrap();
        let in_frame = |k: &Matrix| Operator::new(Arc::clone(&l), &(&frame * k) * &frame_inv).unwrap();
        for s in [1i64, -1] {
            let base = Matrix::block_diag(&[&Matrix::scalar(d, &int(s)), &Matrix::identity(1)]);
            let canonical = in_frame(&base);
            let ok = is_lie_orthogonal(&canonical)
                && preserves_brackets(&l, canonical.matrix())
                && gln_form_sign(&canonicalize(&canonical), n).unwrap() == Some(s as i8);
            t.check(ok, || format!("gl_{n}: canonical sign {s} fails"));
            for _ in 0..25 {
                let mut k = base.clone();
                k.set_block(d, 0, &random::rational_matrix(&mut rng, 1, d));
                k.set(d, d, random::small_rational(&mut rng));
                let j = in_frame(&k);
                let diff = j.matrix() - canonical.matrix();
                let central = diff.columns().iter().all(|c| center.contains(c));
                let ok = central
                    && is_lie_orthogonal(&j)
                    && preserves_brackets(&l, j.matrix())
                    && are_equivalent(&j, &canonical)
                    && canonicalize(&j) == canonicalize(&canonical)
                    && gln_form_sign(&canonicalize(&j), n).unwrap() == Some(s as i8);
                t.check(ok, || format!("gl_{n}: center perturbation fails\n{}", j.matrix()));
            }
        }
        for k in 0..50 {
            let m = if k % 2 == 0 {
                let s = if k % 4 == 0 { 1 } else { -1 };
                let mut kk = Matrix::block_diag(&[&Matrix::scalar(d, &int(s)), &Matrix::identity(1)]);
                let (a, b) = (rng.gen_range(0..d), rng.gen_range(0..d));
                kk.set(a, b, kk.get(a, b) + &random::nonzero_rational(&mut rng));
                &(&frame * &kk) * &frame_inv
            } else {
                loop {
                    let m = random::int_matrix(&mut rng, dim, dim);
                    if !m.is_identity() && !(-&m).is_identity() {
                        break m;
                    }
                }
            };
            let j = Operator::new(Arc::clone(&l), m).unwrap();
            let ok = !is_lie_orthogonal(&j)
                && !preserves_brackets(&l, j.matrix())
                && gln_form_sign(&canonicalize(&j), n).unwrap().is_none();
            t.check(ok, || format!("gl_{n}: non-form operator passes\n{}", j.matrix()));
        }
    }
    t
}

fn invariance_suite() -> Tally {
    let mut t = Tally::new();
    for (i, f) in catalog_families().iter().enumerate() {
        let l = f.algebra();
        let z = center_oracle(l);
        let r = radical_oracle(l);
        let series = ascending_oracle(l);
        t.check(l.center() == z, || {
            format!("center of family {i} disagrees with oracle")
        });
        t.check(l.radical() == r, || {
            format!("radical of family {i} disagrees with oracle")
        });
        t.check(l.ascending_central_series() == series, || {
            format!("ascending series of family {i} disagrees")
        });
        let mut rng = random::rng(404 + i as u64);
        for _ in 0..30 {
            let j = f.sample(&mut rng);
            let m = j.matrix();
            let l0 = Subspace::span(&power(m, l.dim()).nullspace());
            let ok = preserves_brackets(l, m)
                && is_lie_orthogonal(&j)
                && fitting(&j).0 == l0
                && z.contains_subspace(&l0)
                && is_invariant_oracle(&z, m)
                && is_invariant_oracle(&r, m)
                && series.iter().all(|s| is_invariant_oracle(s, m));
            t.check(ok, || format!("{} sample violates invariance\n{}", f.tag, m));
        }
    }
    t
}

fn generic_params<R: Rng>(rng: &mut R, a: &Matrix, b0: Matrix, mu: Rational) -> AlmostAbelianParams {
    let m = classify::almost_abelian_layout(a).unwrap();
    let k = a.rows() - m;
    AlmostAbelianParams::Generic {
        b0,
        b1: random::rational_matrix(rng, m, k),
        b2: random::rational_matrix(rng, m, 1),
        b3: random::rational_matrix(rng, k, 1),
        mu,
    }
}

fn triangular<R: Rng>(rng: &mut R, m: usize, diag: &[Rational]) -> Matrix {
    Matrix::from_fn(m, m, |i, j| {
        if i == j {
            diag[rng.gen_range(0..diag.len())].clone()
        } else if i < j {
            random::small_rational(rng)
        } else {
            Rational::zero()
        }
    })
}

fn case_one_algebras() -> Vec<Matrix> {
    vec![
        ints(3, 3, &[0, 1, 0, 0, 2, 1, 0, 0, 3]),
        Matrix::identity(3),
        ints(4, 4, &[0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 2]),
    ]
}

fn eigenspace_commutation() -> Tally {
    let mut t = Tally::new();
    let mut rng = random::rng(505);
    let diag = [int(2), int(-2), q(1, 2), int(3), int(1), int(-1), int(0)];
    for a in case_one_algebras() {
        let m = classify::almost_abelian_layout(&a).unwrap();
        for mu in [int(2), int(3), int(-3)] {
            for _ in 0..8 {
                let b0 = triangular(&mut rng, m, &diag);
                let j = classify::almost_abelian_op(&a, &generic_params(&mut rng, &a, b0, mu.clone())).unwrap();
                let l = j.algebra();
                let spectrum = rational_spectrum(&j);
                t.check(
                    spectrum.splits && is_lie_orthogonal(&j) && preserves_brackets(l, j.matrix()),
                    || {
                        format!(
                            "case-1 operator does not split or is not Lie-orthogonal\n{}",
                            j.matrix()
                        )
                    },
                );
                let eigen: Vec<(Rational, Subspace)> = spectrum
                    .eigenvalues
                    .iter()
                    .map(|(lam, _)| (lam.clone(), generalized_eigenspace_oracle(j.matrix(), lam)))
                    .collect();
                for (lam, la) in &eigen {
                    for (nu, ln) in &eigen {
                        if (lam * nu).is_one() {
                            continue;
                        }
                        let zero = la.basis_vectors().iter().all(|x| {
                            ln.basis_vectors()
                                .iter()
                                .all(|y| l.bracket(x, y).unwrap().iter().all(Rational::is_zero))
                        });
                        t.check(zero, || format!("[L_{lam}, L_{nu}] != 0 for\n{}", j.matrix()));
                    }
                }
                let z = center_oracle(l);
                for (lam, la) in eigen.iter().filter(|(lam, _)| !lam.is_zero()) {
                    let inv = lam.recip().unwrap();
                    let mut expected = la.sum(&z).unwrap();
                    if let Some((_, li)) = eigen.iter().find(|(x, _)| *x == inv) {
                        expected = expected.sum(li).unwrap();
                    }
                    let ideal = ideal_i_lambda(&j, lam).unwrap().ideal;
                    let is_ideal = (0..l.dim()).all(|e| {
                        let mut unit = vec![Rational::zero(); l.dim()];
                        unit[e] = Rational::one();
                        ideal
                            .basis_vectors()
                            .iter()
                            .all(|x| ideal.contains(&l.bracket(x, &unit).unwrap()))
                    });
                    let trivial = lam.is_one() || (-lam).is_one();
                    let ok = ideal == expected
                        && is_ideal
                        && l.is_ideal(&ideal)
                        && (trivial || solvable_degree_le_2(l, &ideal));
                    t.check(ok, || format!("I_{lam} fails for\n{}", j.matrix()));
                }
            }
        }
    }
    t
}

fn avoids_unit_spectrum(j: &Operator) -> Option<bool> {
    let s = rational_spectrum(j);
    s.splits.then(|| !s.contains(&int(1)) && !s.contains(&int(-1)))
}

fn solvability_witness() -> Tally {
    let mut t = Tally::new();
    let mut rng = random::rng(606);
    let a = ints(4, 4, &[0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 2]);
    for _ in 0..40 {
        let j =
            classify::almost_abelian_op(&a, &generic_params(&mut rng, &a, Matrix::scalar(2, &int(2)), int(3))).unwrap();
        let l = j.algebra();
        let s = rational_spectrum(&j);
        let ok = is_lie_orthogonal(&j)
            && preserves_brackets(l, j.matrix())
            && s.eigenvalues == vec![(q(1, 3), 1), (int(2), 2), (int(3), 2)]
            && s.splits
            && avoids_unit_spectrum(&j) == Some(true)
            && solvable_degree_le_2(l, &Subspace::full(l.dim()))
            && l.solvability_degree().is_some_and(|d| d <= 2);
        t.check(ok, || format!("witness fails\n{}", j.matrix()));
    }
    // every instance with full rational spectrum avoiding ±1
    let diag = [int(2), int(-2), q(1, 2), int(3), int(0)];
    for a in case_one_algebras() {
        let m = classify::almost_abelian_layout(&a).unwrap();
        for mu in [int(2), int(-3), q(1, 2), q(-2, 3)] {
            for _ in 0..5 {
                let b0 = triangular(&mut rng, m, &diag);
                let j = classify::almost_abelian_op(&a, &generic_params(&mut rng, &a, b0, mu.clone())).unwrap();
                let l = j.algebra();
                let ok = avoids_unit_spectrum(&j) == Some(true) && solvable_degree_le_2(l, &Subspace::full(l.dim()));
                t.check(ok, || format!("instance fails\n{}", j.matrix()));
            }
        }
    }
    for (i, f) in catalog_families().iter().enumerate() {
        let mut rng = random::rng(607 + i as u64);
        for _ in 0..10 {
            let j = f.sample(&mut rng);
            if avoids_unit_spectrum(&j) == Some(true) {
                let l = j.algebra();
                t.check(solvable_degree_le_2(l, &Subspace::full(l.dim())), || {
                    format!("{} sample avoids ±1 but has solvability degree > 2", f.tag)
                });
            }
        }
    }
    t
}

fn class_group() -> Tally {
    let mut t = Tally::new();
    let mut rng = random::rng(707);
    for n in 1..=3 {
        let f = FamilySpec::heisenberg(n).unwrap();
        let l = Arc::clone(f.algebra());
        let d = 2 * n;
        let tail: Vec<usize> = (1..=d).collect();
        let id = OperatorClass::identity(Arc::clone(&l));
        for _ in 0..20 {
            let [a, b, c] = [0, 1, 2].map(|_| OperatorClass::of(&f.sample(&mut rng)));
            let ab = class_compose(&a, &b).unwrap();
            let assoc = class_compose(&ab, &c).unwrap() == class_compose(&a, &class_compose(&b, &c).unwrap()).unwrap();
            let neutral = class_compose(&id, &a).unwrap() == a && class_compose(&a, &id).unwrap() == a;
            let inv = class_invert(&a).unwrap();
            let inverse = class_compose(&a, &inv).unwrap() == id && class_compose(&inv, &a).unwrap() == id;
            let block = |x: &OperatorClass| x.representative().matrix().submatrix(&tail, &tail);
            let blocks = block(&ab) == &block(&a) * &block(&b)
                && essential_block(ab.representative()) == block(&ab)
                && ab.representative() == &canonicalize(&compose(a.representative(), b.representative()).unwrap());
            t.check(assoc && neutral && inverse && blocks, || {
                format!("class laws fail on h_{n} at\n{}", a.representative().matrix())
            });
        }
    }
    t
}

fn direct_sum_splitting() -> Tally {
    let mut t = Tally::new();
    let mut rng = random::rng(808);
    let sl2 = Arc::new(catalog::sl2_cross());
    let g2 = Arc::new(catalog::g2());
    let cases: [(Arc<LieAlgebra>, bool); 2] = [
        (Arc::new(LieAlgebra::direct_sum(&[&sl2, &g2])), true),
        (Arc::new(LieAlgebra::direct_sum(&[&g2, &g2])), false),
    ];
    for (l, with_sl2) in cases {
        let n = l.dim();
        let z = center_oracle(&l);
        let comps = l.decomposition().unwrap().components.clone();
        for k in 0..25 {
            let first = if with_sl2 {
                let s = if k % 2 == 0 { 1 } else { -1 };
                Operator::new(Arc::clone(&sl2), Matrix::scalar(3, &int(s))).unwrap()
            } else {
                Operator::new(Arc::clone(&g2), random::sl2(&mut rng)).unwrap()
            };
            let second = Operator::new(Arc::clone(&g2), random::sl2(&mut rng)).unwrap();
            let j = direct_sum_operator(&[first.clone(), second.clone()], Arc::clone(&l)).unwrap();
            let parts = split_operator(&j).unwrap();
            let c = canonicalize(&j);
            let off_diagonal_central = comps.iter().enumerate().all(|(a, ca)| {
                comps.iter().enumerate().filter(|(b, _)| *b != a).all(|(_, cb)| {
                    cb.range().all(|col| {
                        let mut v = vec![Rational::zero(); n];
                        for row in ca.range() {
                            v[row] = c.matrix().get(row, col).clone();
                        }
                        z.contains(&v)
                    })
                })
            });
            let parts_ok = parts.len() == 2
                && parts
                    .iter()
                    .all(|p| is_lie_orthogonal(p) && preserves_brackets(p.algebra(), p.matrix()))
                && are_equivalent(&direct_sum_operator(&parts, Arc::clone(&l)).unwrap(), &j);
            let exact = if with_sl2 {
                let m0 = parts[0].matrix();
                (m0.is_identity() || (-m0).is_identity()) && parts[1].matrix().det().unwrap().is_one()
            } else {
                parts.iter().all(|p| p.matrix().det().unwrap().is_one())
            };
            let ok = preserves_brackets(&l, j.matrix()) && off_diagonal_central && parts_ok && exact;
            t.check(ok, || format!("split fails\n{}", j.matrix()));

            // a mixing entry between summands is never Lie-orthogonal
            let (a, b) = if k % 2 == 0 {
                (0, comps[1].start)
            } else {
                (comps[1].start, 0)
            };
            let mut m = j.matrix().clone();
            m.set(a, b, m.get(a, b) + &random::nonzero_rational(&mut rng));
            let mixed = Operator::new(Arc::clone(&l), m).unwrap();
            let ok = if preserves_brackets(&l, mixed.matrix()) {
                split_operator(&mixed).is_ok()
            } else {
                split_operator(&mixed).is_err()
            };
            t.check(ok, || format!("mixed operator handled wrongly\n{}", mixed.matrix()));
        }
    }
    t
}

fn semidirect() -> Tally {
    let mut t = Tally::new();
    let ops = sl2_semidirect_ops();
    let l = catalog::sl2_semidirect_2g1();
    t.check(ops.len() == 2, || format!("{} operators", ops.len()));
    for j in &ops {
        let m = j.matrix();
        let ok = is_lie_orthogonal(j) && preserves_brackets(&l, m) && (m.is_identity() || (-m).is_identity());
        t.check(ok, || format!("listed operator fails\n{m}"));
    }
    let (m, r0) = semidirect_constraint_matrix();
    let ident: [Rational; 10] = std::array::from_fn(|k| {
        if k == 3 || k == 9 {
            Rational::one()
        } else {
            Rational::zero()
        }
    });
    let residual: Vec<Rational> = m.mul_vec(&ident).unwrap().iter().zip(&r0).map(|(a, b)| a + b).collect();
    t.check(m.rank() == 10, || format!("constraint rank {}", m.rank()));
    t.check(residual.iter().all(Rational::is_zero), || {
        "identity does not solve the constraints".into()
    });
    let id_candidate = semidirect_candidate(&ident);
    t.check(
        id_candidate.matrix().is_identity() && is_lie_orthogonal(&id_candidate),
        || "identity candidate fails".into(),
    );
    let mut rng = random::rng(909);
    for k in 0..10 {
        for s in 0..20 {
            let mut c = ident.clone();
            let shift = if s == 0 {
                Rational::one()
            } else {
                random::nonzero_rational(&mut rng)
            };
            c[k] = &c[k] + &shift;
            let j = semidirect_candidate(&c);
            let ok = !is_lie_orthogonal(&j) && !preserves_brackets(&l, j.matrix());
            t.check(ok, || format!("perturbed candidate passes\n{}", j.matrix()));
        }
    }
    t
}

fn kernel_self_checks() -> Tally {
    let mut t = Tally::new();
    let mut rng = random::rng(1010);
    for _ in 0..200 {
        let n = rng.gen_range(1..=8);
        let m = random::rational_matrix(&mut rng, n, n);
        let p = m.char_poly().unwrap();
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * &m) + &Matrix::scalar(n, c);
        }
        t.check(acc.is_zero() && p.degree() == Some(n), || {
            format!("Cayley-Hamilton fails\n{m}")
        });

        let (rows, cols) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
        let m = random::rational_matrix(&mut rng, rows, cols);
        let k = m.nullspace();
        let ok = m.rank() + k.cols() == cols
            && (&m * &k).is_zero()
            && k.rank() == k.cols()
            && m.rank() == m.transpose().rank();
        t.check(ok, || format!("rank-nullity fails\n{m}"));

        let (r, pivots) = m.rref();
        let reduced = pivots
            .iter()
            .enumerate()
            .all(|(row, &p)| r.get(row, p).is_one() && (0..r.rows()).all(|o| o == row || r.get(o, p).is_zero()));
        let ok = r.rref() == (r.clone(), pivots.clone()) && reduced && pivots.len() == m.rank();
        t.check(ok, || format!("rref fails\n{m}"));
    }
    t
}

type Criterion = (&'static str, fn() -> Tally);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("Heisenberg classification", heisenberg_classification),
        ("trivial-only operators on simple algebras", trivial_only_on_simple),
        ("gl_n reduction to sl_n signs", gln_reduction),
        (
            "invariance of fitting, center, radical, ascending series",
            invariance_suite,
        ),
        ("eigenspace commutation and I_lambda ideals", eigenspace_commutation),
        ("solvability witness without eigenvalues ±1", solvability_witness),
        ("operator class group on Heisenberg algebras", class_group),
        ("direct-sum splitting", direct_sum_splitting),
        ("sl2 semidirect 2g1 operators and constraints", semidirect),
        ("linear algebra kernel self-checks", kernel_self_checks),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let tally = run();
        let status = if tally.ok() { "PASS" } else { "FAIL" };
        println!(
            "{status} criterion {:>2}: {name} ({}/{})",
            i + 1,
            tally.passed,
            tally.total
        );
        if let Some(f) = &tally.first_failure {
            println!("  first failure: {f}");
        }
        all &= tally.ok();
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
