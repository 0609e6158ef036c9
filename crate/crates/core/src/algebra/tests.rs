use super::*;
use crate::catalog;

fn v(xs: &[i64]) -> Vec<Rational> {
    xs.iter().map(|&x| Rational::from_int(x)).collect()
}

fn e(n: usize, i: usize) -> Vec<Rational> {
    unit_vector(n, i)
}

#[test]
fn heisenberg_bracket() {
    let h = catalog::heisenberg(1).unwrap();
    assert_eq!(h.bracket(&e(3, 1), &e(3, 2)).unwrap(), e(3, 0));
    assert_eq!(h.bracket(&e(3, 2), &e(3, 1)).unwrap(), v(&[-1, 0, 0]));
}

#[test]
fn sl2_bracket_and_self_bracket() {
    let s = catalog::sl2_cross();
    assert_eq!(s.bracket(&e(3, 0), &e(3, 1)).unwrap(), e(3, 2));
    let x = v(&[3, -1, 7]);
    assert!(s.bracket(&x, &x).unwrap().iter().all(Rational::is_zero));
    assert!(s.bracket(&x, &v(&[1])).is_err());
}

#[test]
fn jacobi_violation_is_reported() {
    // [e1,e2] = e3, [e1,e3] = e1: the cyclic sum at (1,2,3) is [[e3,e1],e2] = -e3
    let alg = LieAlgebra::builder(3)
        .bracket_int(0, 1, &[(2, 1)])
        .bracket_int(0, 2, &[(0, 1)])
        .build_unchecked()
        .unwrap();
    let viol = alg.jacobi_violations();
    assert_eq!(
        viol,
        vec![JacobiViolation {
            i: 0,
            j: 1,
            k: 2,
            l: 2,
            residual: Rational::from_int(-1),
        }]
    );
    match alg.jacobi_check() {
        Err(Error::Jacobi { i, j, k, l, residual }) => {
            assert_eq!((i, j, k, l), (1, 2, 3, 3));
            assert_eq!(residual, "-1");
        }
        other => panic!("expected a Jacobi error, got {other:?}"),
    }
    let rebuilt = LieAlgebra::builder(3)
        .bracket_int(0, 1, &[(2, 1)])
        .bracket_int(0, 2, &[(0, 1)])
        .build();
    assert!(rebuilt.is_err());
}

#[test]
fn derivation_tensors_are_lie() {
    // brackets only between e1 and <e2, e3> always satisfy Jacobi
    let alg = LieAlgebra::builder(3)
        .bracket_int(0, 1, &[(2, 1)])
        .bracket_int(0, 2, &[(1, 1)])
        .build();
    assert!(alg.is_ok());
    assert!(catalog::abelian(4).jacobi_check().is_ok());
}

#[test]
fn centers() {
    for n in 1..=3 {
        let h = catalog::heisenberg(n).unwrap();
        assert_eq!(h.center(), Subspace::coordinate(2 * n + 1, [0]));
    }
    assert!(catalog::sl2_cross().center().is_zero());
    assert!(catalog::abelian(3).center().is_full());
    assert!(catalog::g2().center().is_zero());
}

#[test]
fn g2_series() {
    let g = catalog::g2();
    assert_eq!(g.derived_subalgebra(), Subspace::coordinate(2, [1]));
    assert_eq!(g.solvability_degree(), Some(2));
    assert_eq!(g.derived_series().len(), 3);
    assert_eq!(g.nilpotency_degree(), None);
    let lcs = g.lower_central_series();
    assert_eq!(lcs.last().unwrap(), &Subspace::coordinate(2, [1]));
}

#[test]
fn sl2_is_perfect() {
    let s = catalog::sl2_cross();
    assert!(s.derived_subalgebra().is_full());
    assert_eq!(s.solvability_degree(), None);
    assert!(!s.is_solvable());
    assert_eq!(s.nilpotency_degree(), None);
}

#[test]
fn nilpotency_degrees() {
    for n in 1..=3 {
        assert_eq!(catalog::heisenberg(n).unwrap().nilpotency_degree(), Some(2));
    }
    assert_eq!(catalog::abelian(3).nilpotency_degree(), Some(1));
    assert_eq!(catalog::abelian(3).solvability_degree(), Some(1));
}

#[test]
fn almost_abelian_solvability() {
    let a = Matrix::from_ints(2, 2, &[0, 1, 0, 0]);
    let alg = catalog::almost_abelian(&a).unwrap();
    assert_eq!(alg.solvability_degree(), Some(2));
    // center = ker A inside the ideal
    assert_eq!(alg.center(), Subspace::coordinate(3, [0]));
}

#[test]
fn ascending_central_series_examples() {
    let h = catalog::heisenberg(2).unwrap();
    assert_eq!(
        h.ascending_central_series(),
        vec![Subspace::coordinate(5, [0]), Subspace::full(5)]
    );
    assert_eq!(catalog::sl2_cross().ascending_central_series(), vec![Subspace::zero(3)]);
    assert_eq!(catalog::abelian(2).ascending_central_series(), vec![Subspace::full(2)]);
}

#[test]
fn killing_forms() {
    let s = catalog::sl2_cross();
    assert_eq!(s.killing_form(), Matrix::scalar(3, &Rational::from_int(-2)));
    assert!(catalog::abelian(3).killing_form().is_zero());
    assert!(catalog::heisenberg(2).unwrap().killing_form().is_zero());
}

#[test]
fn radicals() {
    assert!(catalog::sl2_cross().radical().is_zero());
    assert_eq!(catalog::sl2_semidirect_2g1().radical(), Subspace::coordinate(5, [3, 4]));
    assert!(catalog::g2().radical().is_full());
    assert!(catalog::heisenberg(1).unwrap().radical().is_full());
    let sum = LieAlgebra::direct_sum(&[&catalog::sl2_cross(), &catalog::g2()]);
    assert_eq!(sum.radical(), Subspace::coordinate(5, [3, 4]));
}

#[test]
fn ideals_and_subalgebras_in_g2() {
    let g = catalog::g2();
    let e1 = Subspace::coordinate(2, [0]);
    let e2 = Subspace::coordinate(2, [1]);
    assert!(g.is_ideal(&e2));
    assert!(g.is_subalgebra(&e1));
    assert!(!g.is_ideal(&e1));
    assert_eq!(g.ideal_witness(&e1), Some((e(2, 1), e(2, 0))));
    assert!(g.is_ideal(&g.center()));
}

#[test]
fn quotients() {
    let h = catalog::heisenberg(1).unwrap();
    let q = h.quotient(&h.center()).unwrap();
    assert!(q.algebra.is_abelian());
    assert_eq!(q.algebra.dim(), 2);
    assert!((&q.projection * &q.section).is_identity());

    let g = catalog::g2();
    let q0 = g.quotient(&Subspace::zero(2)).unwrap();
    assert_eq!(q0.algebra.bracket_basis(0, 1), g.bracket_basis(0, 1));

    let sum = LieAlgebra::direct_sum(&[&catalog::sl2_cross(), &g]);
    let q = sum.quotient(&Subspace::coordinate(5, [0, 1, 2])).unwrap();
    assert_eq!(q.algebra.dim(), 2);
    assert_eq!(q.algebra.bracket_basis(0, 1), v(&[0, 1]));

    assert!(matches!(
        g.quotient(&Subspace::coordinate(2, [0])),
        Err(Error::NotIdeal)
    ));
}

#[test]
fn quotient_respects_brackets() {
    let alg = catalog::sl2_semidirect_2g1();
    let r = alg.radical();
    let q = alg.quotient(&r).unwrap();
    for i in 0..5 {
        for j in 0..5 {
            let lhs = q.projection.mul_vec(&alg.bracket_basis(i, j)).unwrap();
            let rhs = q
                .algebra
                .bracket(&q.projection.column(i), &q.projection.column(j))
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }
    assert!(q.algebra.jacobi_check().is_ok());
}

#[test]
fn direct_sums() {
    let a = catalog::abelian(1);
    let s = LieAlgebra::direct_sum(&[&a, &a]);
    assert!(s.is_abelian());
    assert_eq!(s.dim(), 2);

    let sum = LieAlgebra::direct_sum(&[&catalog::sl2_cross(), &catalog::g2()]);
    assert_eq!(sum.dim(), 5);
    for i in 0..3 {
        for j in 3..5 {
            assert!(sum.bracket_basis(i, j).iter().all(Rational::is_zero));
        }
    }
    let d = sum.decomposition().unwrap();
    assert!(d.direct_sum);
    assert_eq!(d.components.len(), 2);
    assert_eq!(d.components[0].kind, ComponentKind::Simple);
    assert_eq!(d.components[1].range(), 3..5);

    let g = catalog::g2();
    let gg = LieAlgebra::direct_sum(&[&g, &g]);
    assert_eq!(gg, catalog::minimal_nilradical(4).unwrap());
}

#[test]
fn direct_sum_centers_and_radicals_add() {
    let parts = [
        catalog::sl2_cross(),
        catalog::g2(),
        catalog::heisenberg(1).unwrap(),
        catalog::abelian(2),
    ];
    for a in &parts {
        for b in &parts {
            let sum = LieAlgebra::direct_sum(&[a, b]);
            let shift = |s: &Subspace, off: usize| {
                let cols: Vec<Vec<Rational>> = s
                    .basis_vectors()
                    .into_iter()
                    .map(|x| {
                        let mut y = vec![Rational::zero(); sum.dim()];
                        for (k, c) in x.into_iter().enumerate() {
                            y[k + off] = c;
                        }
                        y
                    })
                    .collect();
                Subspace::from_vectors(sum.dim(), &cols).unwrap()
            };
            let z = shift(&a.center(), 0).sum(&shift(&b.center(), a.dim())).unwrap();
            assert_eq!(sum.center(), z);
            let r = shift(&a.radical(), 0).sum(&shift(&b.radical(), a.dim())).unwrap();
            assert_eq!(sum.radical(), r);
        }
    }
}

#[test]
fn automorphisms() {
    let g = catalog::g2();
    assert!(g.is_automorphism(&Matrix::identity(2)));
    for lam in [-3, -1, 2, 5] {
        let s = Matrix::from_ints(2, 2, &[1, 0, 0, lam]);
        assert!(g.is_automorphism(&s));
    }
    assert!(!g.is_automorphism(&Matrix::from_ints(2, 2, &[1, 0, 0, 0])));
    let s = catalog::sl2_cross();
    assert!(!s.is_automorphism(&Matrix::from_ints(3, 3, &[1, 0, 0, 0, 1, 0, 0, 0, -1])));
    assert!(!s.is_automorphism(&Matrix::identity(2)));
}

#[test]
fn series_terms_are_ideals_and_center_is_contained() {
    let algs = [
        catalog::g2(),
        catalog::heisenberg(2).unwrap(),
        catalog::sl2_semidirect_2g1(),
        catalog::almost_abelian(&Matrix::from_ints(3, 3, &[1, 1, 0, 0, 1, 0, 0, 0, 0])).unwrap(),
        catalog::gln(2).unwrap(),
    ];
    for alg in &algs {
        for t in alg.derived_series().iter().chain(&alg.lower_central_series()) {
            assert!(alg.is_ideal(t));
        }
        let acs = alg.ascending_central_series();
        for w in acs.windows(2) {
            assert!(w[1].contains_subspace(&w[0]) && w[1] != w[0]);
        }
        for t in &acs {
            assert!(t.contains_subspace(&alg.center()));
        }
        let r = alg.radical();
        assert!(r.contains_subspace(&alg.center()));
        assert!(alg.is_ideal(&r));
        assert!(alg.subalgebra(&r).unwrap().is_solvable());
    }
}

#[test]
fn json_round_trip() {
    for alg in [
        catalog::sl2_cross(),
        catalog::heisenberg(2).unwrap(),
        catalog::sl2_semidirect_2g1(),
        catalog::minimal_nilradical(5).unwrap(),
    ] {
        let back = LieAlgebra::from_json(&alg.to_json()).unwrap();
        assert_eq!(back, alg);
    }
}

#[test]
fn json_schema_checks() {
    let ok = r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "result": {"2": "1"}}]}"#;
    assert_eq!(LieAlgebra::from_json(ok).unwrap(), catalog::g2());
    let ints = r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "result": {"2": 1}}]}"#;
    assert_eq!(LieAlgebra::from_json(ints).unwrap(), catalog::g2());

    let bad = [
        r#"{"dim": 2, "brackets": [{"i": 2, "j": 1, "result": {"2": "1"}}]}"#,
        r#"{"dim": 2, "brackets": [{"i": 1, "j": 3, "result": {"2": "1"}}]}"#,
        r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "result": {"3": "1"}}]}"#,
        r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "result": {"2": "1/0"}}]}"#,
        r#"{"dim": 2, "extra": 1}"#,
        r#"{"dim": 2, "basis": ["a"]}"#,
        r#"{"dim": 2, "brackets": [{"i": 1, "j": 2, "result": {"2": "1"}},
                                   {"i": 1, "j": 2, "result": {"1": "1"}}]}"#,
        r#"{"dim": 3, "brackets": [{"i": 1, "j": 2, "result": {"3": "1"}},
                                   {"i": 1, "j": 3, "result": {"1": "1"}}]}"#,
        r#"{"dim": 2, "decomposition": {"direct_sum": true,
             "components": [{"kind": "center", "start": 1, "len": 1}]}}"#,
        r#"{"dim": 2, "decomposition": {"components": [{"kind": "center", "start": 0, "len": 1}]}}"#,
    ];
    for s in bad {
        assert!(LieAlgebra::from_json(s).is_err(), "accepted {s}");
    }
}
