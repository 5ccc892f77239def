//! Exact scalars and matrices.

pub mod bareiss;
mod field;
mod matrix;

pub use field::{is_prime, Field, FieldDescriptor, Fp};
pub use matrix::{dot, gauss_echelon, Echelon, ExactMatrix};
