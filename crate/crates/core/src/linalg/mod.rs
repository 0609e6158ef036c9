//! Exact rational linear algebra: scalars, dense matrices, polynomials.

mod matrix;
mod poly;
mod rational;

pub use matrix::Matrix;
pub use poly::Polynomial;
pub use rational::Rational;
