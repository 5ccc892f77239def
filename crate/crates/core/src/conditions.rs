//! Evaluation maps of homogeneous forms on finite point sets.
//!
//! A finite set Σ ⊂ ℙ^N imposes independent conditions on forms of degree ξ
//! when the evaluation map from degree-ξ forms to `F^Σ` is onto, i.e. the
//! evaluation matrix has rank `|Σ|`. Equivalently every point `P` has a
//! separating form: one that vanishes on `Σ∖P` and not at `P`.
//!
//! Everything here works with forms on the ambient space. For Σ contained in
//! a hypersurface `G`, a separating ambient form restricts to a separating
//! section on `G`, so ambient independence implies independence for forms
//! restricted to `G`. The converse is not claimed.

use serde::Serialize;

use crate::algebra::{dot, ExactMatrix, Field};
use crate::geom::PointConfig;
use crate::poly::{form_space_dim, monomial_basis, monomial_value, power_table, Monomial, MultiPoly};

/// Rank data of the evaluation map in one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionsReport {
    pub degree: u32,
    pub point_count: usize,
    pub form_space_dim: usize,
    pub rank: usize,
    /// `point_count − rank`.
    pub defect: usize,
    pub independent: bool,
    /// Independence on ambient forms carries over to forms restricted to any
    /// hypersurface through the points; recorded so reports state which
    /// direction was checked.
    pub implies_restricted_independence: bool,
}

/// A form of degree `degree` vanishing on every point but `point`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatingCertificate<F> {
    pub point: usize,
    pub degree: u32,
    pub form: MultiPoly<F>,
    pub value_at_point: F,
}

impl<F: Field> SeparatingCertificate<F> {
    /// Re-evaluates the stored form on the whole configuration.
    pub fn verify(&self, config: &PointConfig<F>) -> bool {
        if self.form.num_vars() != config.ambient_dim() + 1 || self.form.degree() != self.degree {
            return false;
        }
        config.points().iter().enumerate().all(|(i, p)| {
            let v = self.form.eval(p.coords()).expect("variable count checked");
            if i == self.point {
                !v.is_zero() && v == self.value_at_point
            } else {
                v.is_zero()
            }
        })
    }
}

/// Outcome of separating every point of a configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FullCertificate<F> {
    /// One certificate per point, in point order.
    Complete(Vec<SeparatingCertificate<F>>),
    /// Indices of the points with no separating form.
    Failed(Vec<usize>),
}

impl<F> FullCertificate<F> {
    pub fn is_complete(&self) -> bool {
        matches!(self, FullCertificate::Complete(_))
    }

    pub fn failures(&self) -> &[usize] {
        match self {
            FullCertificate::Complete(_) => &[],
            FullCertificate::Failed(f) => f,
        }
    }
}

/// `|Σ| × C(ξ+N, N)` matrix whose row `i` holds the values of the monomial
/// basis (graded lex) at the normalized representative of point `i`.
pub fn evaluation_matrix<F: Field>(config: &PointConfig<F>, degree: u32) -> ExactMatrix<F> {
    let basis = monomial_basis(config.ambient_dim() + 1, degree);
    evaluation_matrix_in(config, degree, &basis)
}

fn evaluation_matrix_in<F: Field>(config: &PointConfig<F>, degree: u32, basis: &[Monomial]) -> ExactMatrix<F> {
    let rows = config
        .points()
        .iter()
        .map(|p| {
            let powers = power_table(p.coords(), degree);
            basis.iter().map(|m| monomial_value(m, &powers)).collect()
        })
        .collect();
    ExactMatrix::from_rows(rows, basis.len()).expect("consistent dimensions")
}

pub fn impose_independent<F: Field>(config: &PointConfig<F>, degree: u32) -> ConditionsReport {
    let form_dim = form_space_dim(config.ambient_dim() + 1, degree);
    let rank = if config.is_empty() { 0 } else { evaluation_matrix(config, degree).rank() };
    let defect = config.len() - rank;
    ConditionsReport {
        degree,
        point_count: config.len(),
        form_space_dim: form_dim,
        rank,
        defect,
        independent: defect == 0,
        implies_restricted_independence: defect == 0,
    }
}

/// Searches the forms through `Σ∖P` for one that misses `P`.
///
/// The value at `P` is a linear functional on the kernel of the `Σ∖P`
/// evaluation matrix, so it is nonzero somewhere on the kernel iff it is
/// nonzero on some basis vector. Basis vectors are tried in free-column order
/// and the first hit is returned; `None` means the condition imposed by `P`
/// depends on the others.
pub fn separating_form<F: Field>(
    config: &PointConfig<F>,
    point: usize,
    degree: u32,
) -> Option<SeparatingCertificate<F>> {
    let basis = monomial_basis(config.ambient_dim() + 1, degree);
    let eval = evaluation_matrix_in(config, degree, &basis);
    separate_in(&eval, &basis, config.ambient_dim() + 1, point, degree)
}

fn separate_in<F: Field>(
    eval: &ExactMatrix<F>,
    basis: &[Monomial],
    num_vars: usize,
    point: usize,
    degree: u32,
) -> Option<SeparatingCertificate<F>> {
    let others: Vec<usize> = (0..eval.num_rows()).filter(|&i| i != point).collect();
    let ech = eval.select_rows(&others).echelon();
    let target = eval.row(point);
    for free in ech.free_columns() {
        let coeffs = ech.kernel_vector(free);
        let value = dot(target, &coeffs);
        if !value.is_zero() {
            return Some(SeparatingCertificate {
                point,
                degree,
                form: MultiPoly::from_coefficients(num_vars, degree, basis, &coeffs),
                value_at_point: value,
            });
        }
    }
    None
}

/// Separating certificates for every point, or the exact set of points that
/// cannot be separated. Per-point results do not depend on each other.
pub fn full_certificate<F: Field>(config: &PointConfig<F>, degree: u32) -> FullCertificate<F> {
    if config.is_empty() {
        return FullCertificate::Complete(Vec::new());
    }
    let basis = monomial_basis(config.ambient_dim() + 1, degree);
    let eval = evaluation_matrix_in(config, degree, &basis);
    let mut certs = Vec::with_capacity(config.len());
    let mut failures = Vec::new();
    for i in 0..config.len() {
        match separate_in(&eval, &basis, config.ambient_dim() + 1, i, degree) {
            Some(c) => certs.push(c),
            None => failures.push(i),
        }
    }
    if failures.is_empty() {
        FullCertificate::Complete(certs)
    } else {
        FullCertificate::Failed(failures)
    }
}
