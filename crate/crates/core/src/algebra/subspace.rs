use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};

/// A subspace of `Q^n`, stored by its canonical basis.
///
/// The basis columns are the transposed nonzero rows of the RREF of any
/// spanning set, so equality of subspaces is equality of this struct. The
/// pivot coordinates of the RREF are kept alongside: a vector in the subspace
/// is determined by its entries at those coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(ambient, 0),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the columns of `generators` (an `ambient × k` matrix).
    pub fn span(generators: &Matrix) -> Self {
        let ambient = generators.rows();
        let (r, pivots) = generators.transpose().rref();
        let basis = Matrix::from_fn(ambient, pivots.len(), |i, j| r.get(j, i).clone());
        Subspace { ambient, basis, pivots }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<Rational>]) -> Result<Self> {
        Ok(Self::span(&Matrix::from_columns(ambient, vectors)?))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let cols: Vec<Vec<Rational>> = indices.into_iter().map(|i| unit_vector(ambient, i)).collect();
        Self::from_vectors(ambient, &cols).expect("unit vectors have ambient length")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// Canonical `ambient × dim` basis matrix.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rational>> {
        self.basis.columns()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates outside the pivot set; their unit vectors span a
    /// complement of this subspace.
    pub fn complement_coordinates(&self) -> Vec<usize> {
        (0..self.ambient).filter(|c| !self.pivots.contains(c)).collect()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if v.len() != self.ambient {
            return None;
        }
        let coords: Vec<Rational> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let rebuilt = self.basis.mul_vec(&coords).expect("basis has dim columns");
        (rebuilt == v).then_some(coords)
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.coordinates(v).is_some()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis_vectors().iter().all(|v| self.contains(v))
    }

    /// First canonical basis vector of `other` not contained in `self`.
    pub fn first_outside(&self, other: &Subspace) -> Option<Vec<Rational>> {
        other.basis_vectors().into_iter().find(|v| !self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        Ok(Subspace::span(&Matrix::hstack(&[&self.basis, &other.basis])?))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let stacked = Matrix::hstack(&[&self.basis, &(-&other.basis)])?;
        let kernel = stacked.nullspace();
        let left = kernel.select_rows(&(0..self.dim()).collect::<Vec<_>>());
        Ok(Subspace::span(&(&self.basis * &left)))
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, map: &Matrix) -> Result<Subspace> {
        Ok(Subspace::span(&map.checked_mul(&self.basis)?))
    }

    /// First basis vector `x` with `map · x` outside the subspace.
    pub fn invariance_witness(&self, map: &Matrix) -> Option<Vec<Rational>> {
        self.basis_vectors().into_iter().find(|x| {
            let y = map.mul_vec(x).expect("map is ambient-sized");
            !self.contains(&y)
        })
    }

    pub fn is_invariant(&self, map: &Matrix) -> bool {
        self.invariance_witness(map).is_none()
    }

    /// `(ambient - dim) × ambient` matrix sending `x` to its coordinates on
    /// the complement coordinates, with kernel exactly this subspace.
    pub fn quotient_projection(&self) -> Matrix {
        let comp = self.complement_coordinates();
        let mut q = Matrix::zeros(comp.len(), self.ambient);
        for (r, &c) in comp.iter().enumerate() {
            q.set(r, c, Rational::one());
            // x - B·x[pivots] has zero pivot entries; read off the rest
            for (k, &p) in self.pivots.iter().enumerate() {
                let v = q.get(r, p) - self.basis.get(c, k);
                q.set(r, p, v);
            }
        }
        q
    }

    /// `ambient × (ambient - dim)` matrix of unit vectors on the complement
    /// coordinates.
    pub fn quotient_section(&self) -> Matrix {
        let comp = self.complement_coordinates();
        let mut s = Matrix::zeros(self.ambient, comp.len());
        for (k, &c) in comp.iter().enumerate() {
            s.set(c, k, Rational::one());
        }
        s
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient, other.ambient
            )));
        }
        Ok(())
    }
}

pub(crate) fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subspace")
            .field("ambient", &self.ambient)
            .field("dim", &self.dim())
            .field("basis", &self.basis_vectors())
            .finish()
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 (in Q^{})", self.ambient);
        }
        let vs: Vec<String> = self
            .basis_vectors()
            .iter()
            .map(|v| {
                let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("({})", parts.join(", "))
            })
            .collect();
        write!(f, "<{}>", vs.join(", "))
    }
}

impl Serialize for Subspace {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("Subspace", 2)?;
        st.serialize_field("dim", &self.dim())?;
        st.serialize_field("basis", &self.basis_vectors())?;
        st.end()
    }
}
