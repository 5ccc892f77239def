//! Separation of nodes in the degree that controls factoriality, and the
//! constructions that produce it.
pub mod cayley_bacharach;
pub mod certify;
pub mod decomposition;
pub mod params;
pub mod swapping;

pub use cayley_bacharach::{cb_check, cb_predicate, CbCheck, CbPrediction};
pub use certify::{
    certify_main, Branch, CertificateBundle, CertifyOptions, DecompositionSummary, Divergence, StarSummary,
};
pub use decomposition::{decompose, decompose_with_projection, product_form, Decomposition, DecompositionPart};
pub use params::{
    degree_budget, plane_curve_bound, residual_bound, small_cases_table, weighted_sum, CIParams, SMALL_CASES,
};
pub use swapping::{avoiding_linear_form, swap_assemble, swapping_compose};
