use thiserror::Error;

/// Errors raised by the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular")]
    Singular,

    #[error("the zero polynomial has no well-defined roots")]
    ZeroPolynomial,

    #[error("invalid rational {input:?}: {reason}")]
    ParseRational { input: String, reason: &'static str },

    #[error("Jacobi identity fails for basis triple ({i}, {j}, {k}): component {l} of the cyclic sum is {residual}")]
    Jacobi {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        residual: String,
    },

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("subspace is not a subalgebra")]
    NotSubalgebra,

    #[error("subspace is not invariant under the operator")]
    NotInvariant,

    #[error("matrix is not an automorphism of the algebra")]
    NotAutomorphism,

    #[error("operator is not Lie-orthogonal")]
    NotLieOrthogonal,

    #[error("algebra has no declared direct-sum decomposition")]
    NoDecomposition,

    #[error("off-diagonal block from component {from} to component {to} is not center-valued")]
    NotCentral { from: usize, to: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("invalid input: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, Error>;
