//! Exact-arithmetic toolkit for finite-dimensional Lie algebras given by
//! structure constants, and for the Lie-orthogonal operators on them: linear
//! maps `J` with `[Jx, Jy] = [x, y]` for all `x`, `y`.
//!
//! Everything is computed over the rationals. There is no floating point
//! anywhere, so every check in the crate is an exact equality.

pub mod algebra;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod linalg;
pub mod ortho;
pub mod suites;

pub use algebra::{Component, ComponentKind, Decomposition, LieAlgebra, Subspace};
pub use error::{Error, Result};
pub use linalg::{Matrix, Polynomial, Rational};
