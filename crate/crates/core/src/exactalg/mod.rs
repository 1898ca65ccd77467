//! Exact linear algebra over `Q` and `GF(p)`.

mod bareiss;
mod matrix;
mod scalar;
mod subspace;

pub use matrix::{Echelon, Matrix};
pub(crate) use matrix::dot;
pub use scalar::{Field, Scalar};
pub use subspace::{default_enumeration_bound, enumerate_subspaces, Quotient, SubspaceBasis};
pub(crate) use subspace::unit_vector;
