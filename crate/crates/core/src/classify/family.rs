use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::Serialize;

use super::random::{self, TestRng};
use super::{
    almost_abelian_layout, almost_abelian_op, declared_shape, heisenberg_op, is_symplectic, minimal_nilradical_op,
    random_sign, reductive_op, AlmostAbelianParams,
};
use crate::algebra::LieAlgebra;
use crate::catalog;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::ortho::{is_lie_orthogonal, Operator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyTag {
    Semisimple,
    Reductive,
    Heisenberg,
    AlmostAbelian,
    MinimalNilradical,
    Sl2Semidirect,
}

impl fmt::Display for FamilyTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FamilyTag::Semisimple => "semisimple",
            FamilyTag::Reductive => "reductive",
            FamilyTag::Heisenberg => "heisenberg",
            FamilyTag::AlmostAbelian => "almost-abelian",
            FamilyTag::MinimalNilradical => "minimal-nilradical",
            FamilyTag::Sl2Semidirect => "sl2-semidirect",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug)]
enum Shape {
    /// Declared center coordinates and simple ranges.
    Reductive {
        center: Vec<usize>,
        simple: Vec<std::ops::Range<usize>>,
    },
    Heisenberg {
        n: usize,
    },
    AlmostAbelian {
        a: Matrix,
        m: usize,
    },
    MinimalNilradical {
        n: usize,
    },
    Sl2Semidirect,
}

/// An algebra whose Lie-orthogonal operators have a known closed form,
/// with a sampler for that form and a membership test.
#[derive(Clone, Debug)]
pub struct FamilySpec {
    pub tag: FamilyTag,
    algebra: Arc<LieAlgebra>,
    shape: Shape,
}

impl FamilySpec {
    /// A direct sum of simple algebras with declared components.
    pub fn semisimple(l: LieAlgebra) -> Result<Self> {
        match l.decomposition() {
            Some(d) if d.is_semisimple() => {}
            _ => return Err(Error::NoDecomposition),
        }
        let (center, simple) = declared_shape(&l)?;
        Ok(FamilySpec {
            tag: FamilyTag::Semisimple,
            algebra: Arc::new(l),
            shape: Shape::Reductive { center, simple },
        })
    }

    /// A declared `center ⊕ simple components` algebra.
    pub fn reductive(l: LieAlgebra) -> Result<Self> {
        let (center, simple) = declared_shape(&l)?;
        Ok(FamilySpec {
            tag: FamilyTag::Reductive,
            algebra: Arc::new(l),
            shape: Shape::Reductive { center, simple },
        })
    }

    pub fn heisenberg(n: usize) -> Result<Self> {
        Ok(FamilySpec {
            tag: FamilyTag::Heisenberg,
            algebra: Arc::new(catalog::heisenberg(n)?),
            shape: Shape::Heisenberg { n },
        })
    }

    /// `A` must be in normal layout.
    pub fn almost_abelian(a: &Matrix) -> Result<Self> {
        let m = almost_abelian_layout(a)?;
        Ok(FamilySpec {
            tag: FamilyTag::AlmostAbelian,
            algebra: Arc::new(catalog::almost_abelian(a)?),
            shape: Shape::AlmostAbelian { a: a.clone(), m },
        })
    }

    pub fn minimal_nilradical(n: usize) -> Result<Self> {
        Ok(FamilySpec {
            tag: FamilyTag::MinimalNilradical,
            algebra: Arc::new(catalog::minimal_nilradical(n)?),
            shape: Shape::MinimalNilradical { n },
        })
    }

    pub fn sl2_semidirect() -> Self {
        FamilySpec {
            tag: FamilyTag::Sl2Semidirect,
            algebra: Arc::new(catalog::sl2_semidirect_2g1()),
            shape: Shape::Sl2Semidirect,
        }
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    fn op(&self, m: Matrix) -> Operator {
        Operator::new(Arc::clone(&self.algebra), m).expect("matrix sized to the algebra")
    }

    /// A random operator of the closed form.
    pub fn sample(&self, rng: &mut TestRng) -> Operator {
        let n = self.algebra.dim();
        match &self.shape {
            Shape::Reductive { center, simple } => {
                let signs: Vec<i8> = simple.iter().map(|_| random_sign(rng)).collect();
                let rows = (!center.is_empty()).then(|| random::rational_matrix(rng, center.len(), n));
                let j =
                    reductive_op(Arc::clone(&self.algebra), &signs, rows.as_ref()).expect("shape matches the algebra");
                self.op(j.matrix().clone())
            }
            Shape::Heisenberg { n: h } => {
                let steps = rng.gen_range(1..=4);
                let jhat = random::symplectic(rng, *h, steps);
                let r = random::small_rational(rng);
                let row = random::rational_matrix(rng, 1, 2 * h);
                let j = heisenberg_op(*h, &jhat, &r, &row).expect("symplectic by construction");
                self.op(j.matrix().clone())
            }
            Shape::AlmostAbelian { a, m } => {
                let m = *m;
                let k = n - m - 1;
                let params = if m + 2 < n {
                    AlmostAbelianParams::Generic {
                        b0: random::rational_matrix(rng, m, m),
                        b1: random::rational_matrix(rng, m, k),
                        b2: random::rational_matrix(rng, m, 1),
                        b3: random::rational_matrix(rng, k, 1),
                        mu: random::nonzero_rational(rng),
                    }
                } else {
                    AlmostAbelianParams::RankOne {
                        b0: random::rational_matrix(rng, m, m),
                        b1: random::rational_matrix(rng, m, 2),
                        c: random::sl2(rng),
                    }
                };
                let j = almost_abelian_op(a, &params).expect("parameters fit the layout");
                self.op(j.matrix().clone())
            }
            Shape::MinimalNilradical { n: d } => {
                let copies: Vec<Matrix> = (0..d / 2).map(|_| random::sl2(rng)).collect();
                let row = (d % 2 == 1).then(|| random::rational_matrix(rng, 1, *d));
                let j = minimal_nilradical_op(*d, &copies, row.as_ref()).expect("det-1 blocks");
                self.op(j.matrix().clone())
            }
            Shape::Sl2Semidirect => {
                let s = Rational::from_int(random_sign(rng) as i64);
                self.op(Matrix::scalar(n, &s))
            }
        }
    }

    /// Membership in the closed form. The forms are closed under adding
    /// center-valued maps, so this is a test on equivalence classes.
    pub fn in_form(&self, j: &Operator) -> bool {
        let m = j.matrix();
        let n = self.algebra.dim();
        if m.rows() != n || m.cols() != n {
            return false;
        }
        let zero = |i: usize, jj: usize| m.get(i, jj).is_zero();
        match &self.shape {
            Shape::Reductive { center, simple } => {
                // non-center rows must be ±δ on their simple block
                simple.iter().all(|range| {
                    let s = m.get(range.start, range.start).clone();
                    if !(s.is_one() || (-&s).is_one()) {
                        return false;
                    }
                    range
                        .clone()
                        .all(|i| (0..n).all(|c| if i == c { m.get(i, c) == &s } else { zero(i, c) }))
                }) && (0..n).all(|i| center.contains(&i) || simple.iter().any(|r| r.contains(&i)))
            }
            Shape::Heisenberg { n: h } => {
                let idx: Vec<usize> = (1..=2 * h).collect();
                (1..n).all(|i| zero(i, 0)) && is_symplectic(&m.submatrix(&idx, &idx)).unwrap_or(false)
            }
            Shape::AlmostAbelian { m: c, .. } => {
                let c = *c;
                if c + 2 < n {
                    let last = n - 1;
                    let corner = m.get(last, last).clone();
                    let Some(mu) = corner.recip() else {
                        return false;
                    };
                    (0..last).all(|jj| zero(last, jj))
                        && (c..last)
                            .all(|i| (0..last).all(|jj| if i == jj { m.get(i, jj) == &mu } else { zero(i, jj) }))
                } else {
                    let rows = [n - 2, n - 1];
                    rows.iter().all(|&i| (0..c).all(|jj| zero(i, jj)))
                        && m.submatrix(&rows, &rows).det().map(|d| d.is_one()).unwrap_or(false)
                }
            }
            Shape::MinimalNilradical { n: d } => {
                let off = d % 2;
                (off..n).all(|i| {
                    let block = (i - off) / 2;
                    (0..n).all(|jj| jj >= off && (jj - off) / 2 == block || zero(i, jj))
                }) && (0..d / 2).all(|b| {
                    let idx = [off + 2 * b, off + 2 * b + 1];
                    m.submatrix(&idx, &idx).det().map(|x| x.is_one()).unwrap_or(false)
                })
            }
            Shape::Sl2Semidirect => m.is_identity() || (-m).is_identity(),
        }
    }

    /// A random single-entry change of an in-form operator that leaves the
    /// form, or `None` if 1000 attempts stay inside it.
    pub fn perturb_out_of_form(&self, j: &Operator, rng: &mut TestRng) -> Option<Operator> {
        let n = self.algebra.dim();
        for _ in 0..1000 {
            let (r, c) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let mut m = j.matrix().clone();
            let v = m.get(r, c) + &random::nonzero_rational(rng);
            m.set(r, c, v);
            let p = self.op(m);
            if !self.in_form(&p) {
                return Some(p);
            }
        }
        None
    }
}

/// Outcome of sampling a family and perturbing the samples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub family: FamilyTag,
    pub dim: usize,
    pub seed: u64,
    pub samples: usize,
    /// Samples that were Lie-orthogonal and in form.
    pub sound: usize,
    pub perturbations: usize,
    /// Perturbations that left the form and are not Lie-orthogonal.
    pub sharp: usize,
    /// Perturbations that could not leave the form.
    pub skipped: usize,
    pub first_counterexample: Option<Matrix>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.sound == self.samples && self.sharp + self.skipped == self.perturbations
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (dim {}, seed {}): sound {}/{}, sharp {}/{}",
            self.family, self.dim, self.seed, self.sound, self.samples, self.sharp, self.perturbations
        )?;
        if self.skipped > 0 {
            write!(f, " ({} perturbations stayed in form)", self.skipped)?;
        }
        if let Some(m) = &self.first_counterexample {
            write!(f, "\n  counterexample: {m}")?;
        }
        Ok(())
    }
}

/// Soundness: `samples` random in-form operators are Lie-orthogonal.
/// Sharpness: `perturbations` single-entry changes that leave the form are
/// not Lie-orthogonal.
pub fn verify_family(family: &FamilySpec, samples: usize, perturbations: usize, seed: u64) -> VerificationReport {
    let mut rng = random::rng(seed);
    let mut report = VerificationReport {
        family: family.tag,
        dim: family.algebra.dim(),
        seed,
        samples,
        sound: 0,
        perturbations,
        sharp: 0,
        skipped: 0,
        first_counterexample: None,
    };
    let mut pool = Vec::with_capacity(samples);
    for _ in 0..samples {
        let j = family.sample(&mut rng);
        if is_lie_orthogonal(&j) && family.in_form(&j) {
            report.sound += 1;
        } else if report.first_counterexample.is_none() {
            report.first_counterexample = Some(j.matrix().clone());
        }
        pool.push(j);
    }
    for k in 0..perturbations {
        let base = if pool.is_empty() {
            family.sample(&mut rng)
        } else {
            pool[k % pool.len()].clone()
        };
        match family.perturb_out_of_form(&base, &mut rng) {
            None => report.skipped += 1,
            Some(p) if !is_lie_orthogonal(&p) => report.sharp += 1,
            Some(p) => {
                if report.first_counterexample.is_none() {
                    report.first_counterexample = Some(p.matrix().clone());
                }
            }
        }
    }
    report
}
