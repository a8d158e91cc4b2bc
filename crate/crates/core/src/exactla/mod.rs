//! Exact linear algebra over the cyclotomic field.

mod eigen;
mod matrix;

pub use eigen::{
    eigenspaces_finite_order, eigenvalue_on, simultaneous_diagonalize, EigenDecomposition, EigenSpace,
    SimultaneousEigenbasis,
};
pub use matrix::{normalize, Matrix, Vector};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LaError {
    #[error("dimension mismatch: {left:?} vs {right:?}")]
    DimensionMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("rows have different lengths")]
    Ragged,
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("operator does not satisfy M^{order} = I")]
    NotFiniteOrder { order: u32 },
    #[error("eigenspaces do not span the space")]
    NotDiagonalizable,
    #[error("family members {i} and {j} do not commute")]
    NonCommuting { i: usize, j: usize },
}
