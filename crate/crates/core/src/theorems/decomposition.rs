use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Field;
use crate::conditions::evaluation_matrix;
use crate::error::{DecompositionInvariant, TheoremError};
use crate::geom::{sample_general_projection, LinearProjection, PointConfig};
use crate::incidence::{max_on_plane_curve, plane_curve_exceeding, star_degree_cap, SearchOptions};
use crate::poly::{monomial_basis, MultiPoly};
use crate::theorems::params::{degree_budget, residual_bound, weighted_sum, CIParams};
use crate::theorems::swapping::unit_form;

/// Points whose projections crowd onto one plane curve of degree `degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionPart<F> {
    pub degree: u32,
    /// Indices into the decomposed configuration, sorted.
    pub members: Vec<usize>,
    /// The plane curve carrying the projected members.
    pub plane_curve: MultiPoly<F>,
}

/// The split `Σ = Δ ⊔ Γ` driven by the curves that break property ★ after
/// projection to the plane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition<F> {
    pub projection: LinearProjection<F>,
    /// Parts in extraction order.
    pub parts: Vec<DecompositionPart<F>>,
    /// `(j, c_j)` for every degree that occurs, ascending.
    pub counts: Vec<(u32, usize)>,
    /// Points in the base locus of the forms through some part.
    pub delta: Vec<usize>,
    pub gamma: Vec<usize>,
    /// `2n + k − 6 − Σ j·c_j`.
    pub budget: u32,
    /// Every curve search was exhaustive.
    pub exact: bool,
}

impl<F: Field> Decomposition<F> {
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Smallest part degree.
    pub fn r(&self) -> Option<u32> {
        self.counts.first().map(|&(j, _)| j)
    }

    /// Largest part degree.
    pub fn l(&self) -> Option<u32> {
        self.counts.last().map(|&(j, _)| j)
    }

    pub fn spent(&self) -> u64 {
        weighted_sum(&self.counts)
    }
}

pub fn decompose<F: Field>(
    config: &PointConfig<F>,
    params: CIParams,
    seed: u64,
    options: &SearchOptions,
) -> Result<Decomposition<F>, TheoremError> {
    let proj = sample_general_projection(config.ambient_dim(), 2, config, seed, options.projection_retries)?;
    decompose_with_projection(config, params, proj, options)
}

fn invariant(invariant: DecompositionInvariant, detail: String) -> TheoremError {
    TheoremError::Invariant { invariant, detail }
}

/// Extracts parts greedily: at the smallest degree `t` where more than
/// `(n+k−2)·t` of the remaining projected points lie on a curve, the largest
/// such set (lexicographically least on ties) becomes a part, and the scan
/// restarts on what is left. Then `Δ` collects every point at which all
/// degree-`j` forms through some part of degree `j` vanish, and the structural
/// bounds are asserted.
pub fn decompose_with_projection<F: Field>(
    config: &PointConfig<F>,
    params: CIParams,
    projection: LinearProjection<F>,
    options: &SearchOptions,
) -> Result<Decomposition<F>, TheoremError> {
    let image = projection.project(config)?;
    let c = params.star_coefficient();
    let mut remaining: Vec<usize> = (0..config.len()).collect();
    let mut parts = Vec::new();
    let mut exact = true;
    'scan: loop {
        let sub = image.subset(&remaining);
        for t in 1..=star_degree_cap(sub.len(), c) {
            let (hit, ex) = plane_curve_exceeding(&sub, t, c * t as usize, options)?;
            exact &= ex;
            if hit.is_none() {
                continue;
            }
            let best = max_on_plane_curve(&sub, t, options)?;
            exact &= best.exact;
            let members: Vec<usize> = best.incident.iter().map(|&i| remaining[i]).collect();
            let crate::incidence::IncidenceCurve::Form(curve) = best.curve else {
                unreachable!("plane search returns forms")
            };
            remaining.retain(|i| !members.contains(i));
            parts.push(DecompositionPart { degree: t, members, plane_curve: curve });
            continue 'scan;
        }
        break;
    }

    if parts.is_empty() {
        return Ok(Decomposition {
            projection,
            parts,
            counts: Vec::new(),
            delta: Vec::new(),
            gamma: (0..config.len()).collect(),
            budget: params.separation_degree(),
            exact,
        });
    }

    let mut counts: Vec<(u32, usize)> = Vec::new();
    for p in &parts {
        if p.members.len() <= c * p.degree as usize {
            return Err(invariant(
                DecompositionInvariant::PartTooSmall,
                format!("{} points on a degree-{} curve", p.members.len(), p.degree),
            ));
        }
        match counts.iter_mut().find(|(j, _)| *j == p.degree) {
            Some((_, n)) => *n += 1,
            None => counts.push((p.degree, 1)),
        }
    }
    counts.sort();
    let budget = degree_budget(params, &counts)?;

    let mut in_delta = vec![false; config.len()];
    for p in &parts {
        let rows = evaluation_matrix(config, p.degree);
        let ech = rows.select_rows(&p.members).echelon();
        for (i, slot) in in_delta.iter_mut().enumerate() {
            if ech.contains_row(rows.row(i)) {
                *slot = true;
            }
        }
        if let Some(&m) = p.members.iter().find(|&&m| !in_delta[m]) {
            return Err(invariant(DecompositionInvariant::Nesting, format!("part member {m} is outside Δ")));
        }
    }
    let delta: Vec<usize> = (0..config.len()).filter(|&i| in_delta[i]).collect();
    let gamma: Vec<usize> = (0..config.len()).filter(|&i| !in_delta[i]).collect();
    let bound = residual_bound(params, weighted_sum(&counts));
    if gamma.len() as i64 > bound {
        return Err(invariant(DecompositionInvariant::ResidualBound, format!("|Γ| = {} > {bound}", gamma.len())));
    }
    Ok(Decomposition { projection, parts, counts, delta, gamma, budget, exact })
}

/// A form of degree `Σ j·c_j` vanishing on `Δ` and at no point of `Γ`: the
/// product of one form through each part, each redrawn at random from the
/// forms through its part until it misses `Γ`.
pub fn product_form<F: Field>(
    config: &PointConfig<F>,
    decomposition: &Decomposition<F>,
    seed: u64,
) -> Result<MultiPoly<F>, TheoremError> {
    let vars = config.ambient_dim() + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut product = unit_form(vars);
    for (index, part) in decomposition.parts.iter().enumerate() {
        let basis = monomial_basis(vars, part.degree);
        let kernel = evaluation_matrix(config, part.degree).select_rows(&part.members).kernel_basis();
        let misses_gamma = |f: &MultiPoly<F>| {
            !f.is_zero()
                && decomposition.gamma.iter().all(|&q| !f.eval(config.point(q).coords()).expect("same variables").is_zero())
        };
        let mut factor = None;
        for _ in 0..64 {
            let mut coeffs = vec![F::zero(); basis.len()];
            for k in &kernel {
                let s = F::random(&mut rng);
                for (c, v) in coeffs.iter_mut().zip(k) {
                    *c += s.clone() * v;
                }
            }
            let f = MultiPoly::from_coefficients(vars, part.degree, &basis, &coeffs);
            if misses_gamma(&f) {
                factor = Some(f);
                break;
            }
        }
        let f = factor.ok_or_else(|| {
            invariant(DecompositionInvariant::Nesting, format!("no form through part {index} misses every point of Γ"))
        })?;
        product = product.try_mul(&f)?;
    }
    Ok(product)
}
