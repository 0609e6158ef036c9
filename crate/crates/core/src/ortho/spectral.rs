use serde::Serialize;

use super::Operator;
use crate::algebra::Subspace;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

/// Rational eigenvalues of an operator with algebraic multiplicities,
/// in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<(Rational, usize)>,
    /// The multiplicities add up to the dimension, so the characteristic
    /// polynomial splits over the rationals.
    pub splits: bool,
}

impl Spectrum {
    pub fn multiplicity(&self, lambda: &Rational) -> usize {
        self.eigenvalues
            .iter()
            .find(|(l, _)| l == lambda)
            .map_or(0, |(_, m)| *m)
    }

    pub fn contains(&self, lambda: &Rational) -> bool {
        self.multiplicity(lambda) > 0
    }
}

/// Fitting decomposition `L = L0 ∔ L̂` with `L0 = ker Jⁿ`, `L̂ = im Jⁿ`.
pub fn fitting(j: &Operator) -> (Subspace, Subspace) {
    let n = j.dim();
    let p = j.matrix().pow(n as u32).expect("square");
    (Subspace::span(&p.nullspace()), Subspace::span(&p))
}

pub fn rational_spectrum(j: &Operator) -> Spectrum {
    let n = j.dim();
    if n == 0 {
        return Spectrum {
            eigenvalues: Vec::new(),
            splits: true,
        };
    }
    let chi = j.matrix().char_poly().expect("square");
    let (eigenvalues, _) = chi.rational_roots().expect("monic polynomial is nonzero");
    let total: usize = eigenvalues.iter().map(|(_, m)| m).sum();
    Spectrum {
        eigenvalues,
        splits: total == n,
    }
}

/// `ker (J - λE)ⁿ`
pub fn generalized_eigenspace(j: &Operator, lambda: &Rational) -> Subspace {
    let n = j.dim();
    let shifted = j.matrix() - &Matrix::scalar(n, lambda);
    let p = shifted.pow(n as u32).expect("square");
    Subspace::span(&p.nullspace())
}

/// `I_λ` together with how far the defining sum is from being direct.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealLambda {
    pub lambda: Rational,
    pub ideal: Subspace,
    /// Sum of the dimensions of the summands `L_λ`, `L_{1/λ}`, `Z`.
    pub summand_dims: usize,
    /// `summand_dims - dim I_λ`; nonzero when the summands overlap.
    pub deficit: usize,
}

/// `I_λ = L_λ + L_{1/λ} + Z`, or `L_λ + Z` for `λ = ±1`, as a subspace sum.
pub fn ideal_i_lambda(j: &Operator, lambda: &Rational) -> Result<IdealLambda> {
    let inv = lambda
        .recip()
        .ok_or_else(|| Error::InvalidParameter("I_0 is the center; use the center directly".into()))?;
    let z = j.algebra().center();
    let l = generalized_eigenspace(j, lambda);
    let mut dims = l.dim() + z.dim();
    let mut ideal = l.sum(&z)?;
    if &inv != lambda {
        let li = generalized_eigenspace(j, &inv);
        dims += li.dim();
        ideal = ideal.sum(&li)?;
    }
    Ok(IdealLambda {
        lambda: lambda.clone(),
        deficit: dims - ideal.dim(),
        summand_dims: dims,
        ideal,
    })
}

/// The operator `J/I` on `L/I`, in the quotient coordinates of
/// [`crate::algebra::LieAlgebra::quotient`].
pub fn factor_operator(j: &Operator, ideal: &Subspace) -> Result<Operator> {
    let q = j.algebra().quotient(ideal)?;
    if !ideal.is_invariant(j.matrix()) {
        return Err(Error::NotInvariant);
    }
    let m = &(&q.projection * j.matrix()) * &q.section;
    Operator::new(q.algebra, m)
}
