//! Lie algebras given by structure constants, and their classical invariants.
//!
//! An algebra of dimension `n` over the rationals is stored as the tensor
//! `c_{ij}^k` with `[e_i, e_j] = Σ_k c_{ij}^k e_k`, kept only for `i < j`.
//! Antisymmetry is synthesized by the accessors, so it cannot be violated.
//! Basis indices are 0-based in the API and 1-based in the JSON schema.

mod decomposition;
mod json;
mod subspace;

pub use decomposition::{Component, ComponentKind, Decomposition};
pub use json::AlgebraDoc;
pub(crate) use subspace::unit_vector;
pub use subspace::Subspace;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    dim: usize,
    /// `[e_i, e_j]` for `i < j`, in pair order (0,1), (0,2), …, (1,2), …
    upper: Vec<Vec<Rational>>,
    names: Vec<String>,
    decomposition: Option<Decomposition>,
}

/// One failure of the Jacobi identity: component `l` of the cyclic sum
/// `[[e_i, e_j], e_k] + [[e_j, e_k], e_i] + [[e_k, e_i], e_j]` is `residual`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub residual: Rational,
}

impl From<JacobiViolation> for Error {
    fn from(v: JacobiViolation) -> Self {
        Error::Jacobi {
            i: v.i + 1,
            j: v.j + 1,
            k: v.k + 1,
            l: v.l + 1,
            residual: v.residual.to_string(),
        }
    }
}

/// `L/I` with the maps relating it to `L`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub algebra: LieAlgebra,
    /// `(n - d) × n`, kernel `I`.
    pub projection: Matrix,
    /// `n × (n - d)`, unit vectors on the complement coordinates of `I`.
    pub section: Matrix,
}

pub struct LieAlgebraBuilder {
    dim: usize,
    upper: Vec<Vec<Rational>>,
    names: Option<Vec<String>>,
    decomposition: Option<Decomposition>,
}

impl LieAlgebraBuilder {
    /// Sets `[e_i, e_j] = Σ coeff · e_k` (0-based). For `i > j` the
    /// antisymmetric counterpart is stored.
    ///
    /// Panics if `i == j` or an index is out of range.
    pub fn bracket(mut self, i: usize, j: usize, result: &[(usize, Rational)]) -> Self {
        assert!(i != j, "[e_i, e_i] is always zero");
        assert!(i < self.dim && j < self.dim, "basis index out of range");
        let mut v = vec![Rational::zero(); self.dim];
        for (k, c) in result {
            assert!(*k < self.dim, "basis index out of range");
            v[*k] += c;
        }
        if i > j {
            v = v.into_iter().map(|x| -x).collect();
        }
        let p = pair_index(self.dim, i.min(j), i.max(j));
        self.upper[p] = v;
        self
    }

    pub fn bracket_int(self, i: usize, j: usize, result: &[(usize, i64)]) -> Self {
        let r: Vec<(usize, Rational)> = result.iter().map(|&(k, c)| (k, Rational::from_int(c))).collect();
        self.bracket(i, j, &r)
    }

    pub fn names(mut self, names: Vec<String>) -> Self {
        self.names = Some(names);
        self
    }

    pub fn decomposition(mut self, d: Decomposition) -> Self {
        self.decomposition = Some(d);
        self
    }

    /// Builds the algebra after checking the Jacobi identity and the shape
    /// of any declared decomposition.
    pub fn build(self) -> Result<LieAlgebra> {
        let alg = self.build_unchecked()?;
        alg.jacobi_check()?;
        Ok(alg)
    }

    /// Builds without the Jacobi check (names and decomposition are still
    /// validated). Useful for inspecting invalid tensors.
    pub fn build_unchecked(self) -> Result<LieAlgebra> {
        let dim = self.dim;
        let names = match self.names {
            Some(n) if n.len() != dim => {
                return Err(Error::Schema(format!("{} basis names for dimension {dim}", n.len())))
            }
            Some(n) => n,
            None => default_names(dim),
        };
        if let Some(d) = &self.decomposition {
            d.validate(dim)?;
        }
        Ok(LieAlgebra {
            dim,
            upper: self.upper,
            names,
            decomposition: self.decomposition,
        })
    }
}

fn default_names(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * n - i * (i + 1) / 2 + (j - i - 1)
}

impl LieAlgebra {
    pub fn builder(dim: usize) -> LieAlgebraBuilder {
        LieAlgebraBuilder {
            dim,
            upper: vec![vec![Rational::zero(); dim]; dim * dim.saturating_sub(1) / 2],
            names: None,
            decomposition: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn decomposition(&self) -> Option<&Decomposition> {
        self.decomposition.as_ref()
    }

    pub fn with_decomposition(mut self, d: Option<Decomposition>) -> Result<Self> {
        if let Some(d) = &d {
            d.validate(self.dim)?;
        }
        self.decomposition = d;
        Ok(self)
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self> {
        if names.len() != self.dim {
            return Err(Error::Schema(format!(
                "{} basis names for dimension {}",
                names.len(),
                self.dim
            )));
        }
        self.names = names;
        Ok(self)
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => vec![Rational::zero(); self.dim],
            Ordering::Less => self.upper[pair_index(self.dim, i, j)].clone(),
            Ordering::Greater => self.upper[pair_index(self.dim, j, i)].iter().map(|x| -x).collect(),
        }
    }

    /// `c_{ij}^k`
    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> Rational {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Rational::zero(),
            Ordering::Less => self.upper[pair_index(self.dim, i, j)][k].clone(),
            Ordering::Greater => -&self.upper[pair_index(self.dim, j, i)][k],
        }
    }

    /// The skew-symmetric matrix `C^k = (c_{ij}^k)`.
    pub fn structure_matrix(&self, k: usize) -> Matrix {
        Matrix::from_fn(self.dim, self.dim, |i, j| self.structure_constant(i, j, k))
    }

    pub fn structure_matrices(&self) -> Vec<Matrix> {
        (0..self.dim).map(|k| self.structure_matrix(k)).collect()
    }

    pub fn is_abelian(&self) -> bool {
        self.upper.iter().all(|v| v.iter().all(Rational::is_zero))
    }

    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        if x.len() != self.dim || y.len() != self.dim {
            return Err(Error::DimensionMismatch(format!(
                "bracket of vectors of length {} and {} in dimension {}",
                x.len(),
                y.len(),
                self.dim
            )));
        }
        let mut out = vec![Rational::zero(); self.dim];
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let c = &x[i] * &y[j] - &x[j] * &y[i];
                if c.is_zero() {
                    continue;
                }
                for (o, s) in out.iter_mut().zip(&self.upper[pair_index(self.dim, i, j)]) {
                    if !s.is_zero() {
                        *o += &c * s;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix of `ad x`: column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[Rational]) -> Result<Matrix> {
        let cols: Vec<Vec<Rational>> = (0..self.dim)
            .map(|j| self.bracket(x, &unit_vector(self.dim, j)))
            .collect::<Result<_>>()?;
        Matrix::from_columns(self.dim, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix {
        let cols: Vec<Vec<Rational>> = (0..self.dim).map(|j| self.bracket_basis(i, j)).collect();
        Matrix::from_columns(self.dim, &cols).expect("columns have length dim")
    }

    /// Every failing component of the Jacobi identity over `i < j < k`, in
    /// lexicographic order of `(i, j, k, l)`.
    pub fn jacobi_violations(&self) -> Vec<JacobiViolation> {
        let n = self.dim;
        let ads: Vec<Matrix> = (0..n).map(|i| self.ad_basis(i)).collect();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    // [[a, b], c] = -ad_c [a, b]
                    let t1 = ads[k].mul_vec(&self.bracket_basis(i, j)).expect("dims");
                    let t2 = ads[i].mul_vec(&self.bracket_basis(j, k)).expect("dims");
                    let t3 = ads[j].mul_vec(&self.bracket_basis(k, i)).expect("dims");
                    for l in 0..n {
                        let r = -(&t1[l] + &t2[l] + &t3[l]);
                        if !r.is_zero() {
                            out.push(JacobiViolation {
                                i,
                                j,
                                k,
                                l,
                                residual: r,
                            });
                        }
                    }
                }
            }
        }
        out
    }

    pub fn jacobi_check(&self) -> Result<()> {
        match self.jacobi_violations().into_iter().next() {
            Some(v) => Err(v.into()),
            None => Ok(()),
        }
    }

    /// Span of `[a, b]` over basis vectors `a` of `left` and `b` of `right`.
    pub fn bracket_span(&self, left: &Subspace, right: &Subspace) -> Subspace {
        let mut gens = Vec::new();
        for a in left.basis_vectors() {
            for b in right.basis_vectors() {
                gens.push(self.bracket(&a, &b).expect("ambient dimension"));
            }
        }
        Subspace::from_vectors(self.dim, &gens).expect("ambient dimension")
    }

    pub fn center(&self) -> Subspace {
        self.upper_centralizer(&Subspace::zero(self.dim))
    }

    /// `{x : [x, L] ⊆ s}`; the preimage of the center of `L/s` when `s` is
    /// an ideal.
    pub fn upper_centralizer(&self, s: &Subspace) -> Subspace {
        let q = s.quotient_projection();
        let blocks: Vec<Matrix> = (0..self.dim).map(|j| &q * &self.ad_basis(j)).collect();
        if blocks.is_empty() {
            return Subspace::full(self.dim);
        }
        let stacked = Matrix::vstack(&blocks.iter().collect::<Vec<_>>()).expect("same width");
        Subspace::span(&stacked.nullspace())
    }

    /// Centralizer of a subspace: `{x : [x, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace) -> Subspace {
        let blocks: Vec<Matrix> = s
            .basis_vectors()
            .iter()
            .map(|v| self.ad(v).expect("ambient dimension"))
            .collect();
        if blocks.is_empty() {
            return Subspace::full(self.dim);
        }
        let stacked = Matrix::vstack(&blocks.iter().collect::<Vec<_>>()).expect("same width");
        Subspace::span(&stacked.nullspace())
    }

    pub fn derived_subalgebra(&self) -> Subspace {
        let full = Subspace::full(self.dim);
        self.bracket_span(&full, &full)
    }

    /// `L, L', L'', …` up to the first zero or repeated term.
    pub fn derived_series(&self) -> Vec<Subspace> {
        self.derived_series_of(&Subspace::full(self.dim))
    }

    /// Derived series of the subalgebra `s`, as subspaces of `L`.
    pub fn derived_series_of(&self, s: &Subspace) -> Vec<Subspace> {
        self.series_from(s, |cur| self.bracket_span(cur, cur))
    }

    /// Smallest `k` with `L^{(k)} = 0`, or `None` if the algebra is not
    /// solvable.
    pub fn solvability_degree(&self) -> Option<usize> {
        degree_of(&self.derived_series())
    }

    pub fn is_solvable(&self) -> bool {
        self.solvability_degree().is_some()
    }

    /// `L, [L, L], [L, [L, L]], …` up to the first zero or repeated term.
    pub fn lower_central_series(&self) -> Vec<Subspace> {
        let full = Subspace::full(self.dim);
        self.series_from(&full, |cur| self.bracket_span(&full, cur))
    }

    /// Number of nonzero terms of the lower central series, or `None` if it
    /// never reaches zero.
    pub fn nilpotency_degree(&self) -> Option<usize> {
        degree_of(&self.lower_central_series())
    }

    /// `Z_1 = Z(L)`, `Z_{i+1}/Z_i = Z(L/Z_i)`, until the chain stops growing.
    pub fn ascending_central_series(&self) -> Vec<Subspace> {
        let mut terms = vec![self.center()];
        for _ in 0..=self.dim {
            let last = terms.last().expect("nonempty");
            let next = self.upper_centralizer(last);
            if next == *last {
                break;
            }
            terms.push(next);
        }
        terms
    }

    fn series_from(&self, start: &Subspace, step: impl Fn(&Subspace) -> Subspace) -> Vec<Subspace> {
        let mut terms = vec![start.clone()];
        for _ in 0..=self.dim {
            let last = terms.last().expect("nonempty");
            if last.is_zero() {
                break;
            }
            let next = step(last);
            if next == *last {
                break;
            }
            terms.push(next);
        }
        terms
    }

    /// Gram matrix `K_{ij} = tr(ad e_i · ad e_j)`.
    pub fn killing_form(&self) -> Matrix {
        let ads: Vec<Matrix> = (0..self.dim).map(|i| self.ad_basis(i)).collect();
        let mut k = Matrix::zeros(self.dim, self.dim);
        for i in 0..self.dim {
            for j in i..self.dim {
                let t = (&ads[i] * &ads[j]).trace();
                k.set(j, i, t.clone());
                k.set(i, j, t);
            }
        }
        k
    }

    /// Killing-orthogonal complement of the derived algebra. In
    /// characteristic zero this is the radical.
    pub fn radical(&self) -> Subspace {
        let derived = self.derived_subalgebra();
        if derived.is_zero() {
            return Subspace::full(self.dim);
        }
        let pairing = &derived.basis().transpose() * &self.killing_form();
        Subspace::span(&pairing.nullspace())
    }

    /// `[L, s] ⊆ s`
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        self.ideal_witness(s).is_none()
    }

    /// First `(e_i, x)` with `x` a basis vector of `s` and `[e_i, x] ∉ s`.
    pub fn ideal_witness(&self, s: &Subspace) -> Option<(Vec<Rational>, Vec<Rational>)> {
        if s.ambient() != self.dim {
            return Some((Vec::new(), Vec::new()));
        }
        for i in 0..self.dim {
            let e = unit_vector(self.dim, i);
            for x in s.basis_vectors() {
                let b = self.bracket(&e, &x).expect("ambient dimension");
                if !s.contains(&b) {
                    return Some((e, x));
                }
            }
        }
        None
    }

    /// `[s, s] ⊆ s`
    pub fn is_subalgebra(&self, s: &Subspace) -> bool {
        if s.ambient() != self.dim {
            return false;
        }
        let vs = s.basis_vectors();
        vs.iter().enumerate().all(|(a, x)| {
            vs[a + 1..]
                .iter()
                .all(|y| s.contains(&self.bracket(x, y).expect("ambient dimension")))
        })
    }

    /// `L/I`, with the complement spanned by unit vectors on the non-pivot
    /// coordinates of `I`'s canonical basis.
    pub fn quotient(&self, ideal: &Subspace) -> Result<Quotient> {
        if ideal.ambient() != self.dim {
            return Err(Error::DimensionMismatch("ideal lives in another space".into()));
        }
        if !self.is_ideal(ideal) {
            return Err(Error::NotIdeal);
        }
        let projection = ideal.quotient_projection();
        let section = ideal.quotient_section();
        let m = section.cols();
        let reps = section.columns();
        let mut b = LieAlgebra::builder(m);
        for a in 0..m {
            for c in a + 1..m {
                let br = self.bracket(&reps[a], &reps[c])?;
                let img = projection.mul_vec(&br)?;
                let entries: Vec<(usize, Rational)> = img.into_iter().enumerate().collect();
                b = b.bracket(a, c, &entries);
            }
        }
        let comp = ideal.complement_coordinates();
        let names = comp.iter().map(|&c| self.names[c].clone()).collect();
        Ok(Quotient {
            algebra: b.names(names).build_unchecked()?,
            projection,
            section,
        })
    }

    /// The subalgebra `s` as an algebra in its own canonical basis.
    pub fn subalgebra(&self, s: &Subspace) -> Result<LieAlgebra> {
        if !self.is_subalgebra(s) {
            return Err(Error::NotSubalgebra);
        }
        let vs = s.basis_vectors();
        let d = vs.len();
        let mut b = LieAlgebra::builder(d);
        for a in 0..d {
            for c in a + 1..d {
                let br = self.bracket(&vs[a], &vs[c])?;
                let coords = s.coordinates(&br).ok_or(Error::NotSubalgebra)?;
                let entries: Vec<(usize, Rational)> = coords.into_iter().enumerate().collect();
                b = b.bracket(a, c, &entries);
            }
        }
        b.build_unchecked()
    }

    /// Block-diagonal sum. The result declares each summand (or each of the
    /// summand's own direct components) as a component.
    pub fn direct_sum(parts: &[&LieAlgebra]) -> LieAlgebra {
        let dim: usize = parts.iter().map(|p| p.dim).sum();
        let mut b = LieAlgebra::builder(dim);
        let mut components = Vec::new();
        let mut names = Vec::new();
        let mut off = 0;
        for p in parts {
            for i in 0..p.dim {
                for j in i + 1..p.dim {
                    let v = p.bracket_basis(i, j);
                    let entries: Vec<(usize, Rational)> = v
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(k, c)| (k + off, c))
                        .collect();
                    if !entries.is_empty() {
                        b = b.bracket(i + off, j + off, &entries);
                    }
                }
            }
            match &p.decomposition {
                Some(d) if d.direct_sum => components.extend(d.shifted(off)),
                _ if p.dim > 0 => components.push(Component::new(ComponentKind::Ideal, off, p.dim)),
                _ => {}
            }
            names.extend(p.names.iter().cloned());
            off += p.dim;
        }
        let mut sorted = names.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != names.len() {
            names = default_names(dim);
        }
        b.names(names)
            .decomposition(Decomposition::direct(components))
            .build_unchecked()
            .expect("components tile the sum")
    }

    /// `s` is invertible and `s[e_i, e_j] = [s e_i, s e_j]` for all `i < j`.
    pub fn is_automorphism(&self, s: &Matrix) -> bool {
        if s.rows() != self.dim || s.cols() != self.dim || s.rank() != self.dim {
            return false;
        }
        let images = s.columns();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = s.mul_vec(&self.bracket_basis(i, j)).expect("square");
                let rhs = self.bracket(&images[i], &images[j]).expect("ambient dimension");
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }
}

fn degree_of(series: &[Subspace]) -> Option<usize> {
    series.last().filter(|s| s.is_zero()).map(|_| series.len() - 1)
}

#[cfg(test)]
mod tests;
