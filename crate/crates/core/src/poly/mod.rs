//! Homogeneous forms, univariate helpers and resultants.

mod monomial;
mod multipoly;
mod resultant;
mod univariate;

pub use monomial::{binomial, form_space_dim, monomial_basis, Monomial};
pub use multipoly::MultiPoly;
pub(crate) use multipoly::{monomial_value, power_table};
pub use resultant::{dehomogenize_binary, is_squarefree, resultant_bivariate};
pub use univariate::UniPoly;
