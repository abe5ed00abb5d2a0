//! Exact field arithmetic and dense linear algebra over ℚ and 𝔽_p.

mod matrix;
mod rational;
mod scalar;

pub use matrix::{kernel_basis, matrix_order, solve_linear, Echelon, Matrix, Vector};
pub use rational::Rational;
pub use scalar::{Field, Scalar, MAX_MODULUS};
