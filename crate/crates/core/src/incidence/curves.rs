use serde::Serialize;

use crate::algebra::Field;
use crate::conditions::evaluation_matrix;
use crate::error::IncidenceError;
use crate::geom::{sample_general_projection, span_dimension, LinearProjection, PointConfig};
use crate::incidence::flats::{exceeds, max_flat, Budget};
use crate::poly::{form_space_dim, monomial_basis, MultiPoly};

/// Knobs for the subset searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SearchOptions {
    /// Plane searches over at most this many points with degree at most 3 are
    /// always enumerated exhaustively.
    pub exact_threshold: usize,
    /// Beyond the threshold, enumerate only if at most this many subsets are
    /// visited; otherwise fall back to seeded sampling.
    pub enumeration_budget: u64,
    pub samples: u64,
    pub seed: u64,
    /// Retries when sampling a projection to the plane.
    pub projection_retries: u32,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            exact_threshold: 25,
            enumeration_budget: 2_500_000,
            samples: 20_000,
            seed: 0,
            projection_retries: 32,
        }
    }
}

impl SearchOptions {
    pub fn with_seed(self, seed: u64) -> Self {
        SearchOptions { seed, ..self }
    }

    fn budget(&self, points: usize, degree: u32) -> Budget {
        Budget {
            leaves: self.enumeration_budget,
            force_exact: points <= self.exact_threshold && degree <= 3,
            samples: self.samples,
            seed: self.seed,
        }
    }
}

/// The curve carrying an incidence count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IncidenceCurve<F> {
    /// A plane form of the record's degree.
    Form(MultiPoly<F>),
    /// The line through two configuration points, in any ambient dimension.
    Line { through: [usize; 2] },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveIncidenceRecord<F> {
    pub degree: u32,
    pub curve: IncidenceCurve<F>,
    /// Sorted indices of the points on the curve.
    pub incident: Vec<usize>,
    /// False when the count is only a lower bound for the maximum.
    pub exact: bool,
}

impl<F: Field> CurveIncidenceRecord<F> {
    pub fn count(&self) -> usize {
        self.incident.len()
    }

    /// Re-checks that every listed point lies on the curve.
    pub fn verify(&self, config: &PointConfig<F>) -> bool {
        match &self.curve {
            IncidenceCurve::Form(form) => {
                form.num_vars() == config.ambient_dim() + 1
                    && form.degree() == self.degree
                    && !form.is_zero()
                    && self.incident.iter().all(|&i| form.eval(config.point(i).coords()).is_ok_and(|v| v.is_zero()))
            }
            IncidenceCurve::Line { through } => {
                let mut idx = self.incident.clone();
                idx.extend(through);
                through[0] != through[1] && span_dimension(config, &idx).is_ok_and(|d| d == 1)
            }
        }
    }
}

/// Property ★ with bound `coefficient · t` on degree-`t` curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarReport<F> {
    pub coefficient: usize,
    pub t_max: u32,
    pub satisfies: bool,
    pub witness: Option<CurveIncidenceRecord<F>>,
    /// Every non-vacuous degree was settled by exhaustive search.
    pub exact: bool,
    /// False when the only violation found lives on a projection, where the
    /// ambient configuration may still satisfy ★.
    pub conclusive: bool,
    /// The projection used for degrees ≥ 2 in ambient dimension ≥ 3.
    pub projection: Option<LinearProjection<F>>,
}

/// A line through the most points, found over all pairs.
pub fn max_on_line<F: Field>(config: &PointConfig<F>) -> Result<CurveIncidenceRecord<F>, IncidenceError> {
    if config.len() < 2 {
        return Err(IncidenceError::TooFewPoints { needed: 2, found: config.len() });
    }
    let rows = config.coordinate_matrix();
    let budget = Budget { leaves: u64::MAX, force_exact: true, samples: 0, seed: 0 };
    let (incident, _) = max_flat(&rows, 2, budget);
    Ok(line_record(incident))
}

fn line_record<F>(incident: Vec<usize>) -> CurveIncidenceRecord<F> {
    CurveIncidenceRecord {
        degree: 1,
        curve: IncidenceCurve::Line { through: [incident[0], incident[1]] },
        incident,
        exact: true,
    }
}

fn check_plane<F: Field>(config: &PointConfig<F>, t: u32) -> Result<(), IncidenceError> {
    if config.ambient_dim() != 2 {
        return Err(IncidenceError::WrongAmbient { expected: 2, found: config.ambient_dim() });
    }
    if t == 0 {
        return Err(IncidenceError::DegreeTooSmall { degree: t, minimum: 1 });
    }
    Ok(())
}

/// A nonzero degree-`t` form through the points at `members`, and all points
/// of the configuration it passes through.
fn curve_through<F: Field>(config: &PointConfig<F>, t: u32, members: &[usize]) -> (MultiPoly<F>, Vec<usize>) {
    let basis = monomial_basis(3, t);
    let kernel = evaluation_matrix(config, t).select_rows(members).kernel_basis();
    let form = MultiPoly::from_coefficients(3, t, &basis, &kernel[0]);
    let incident = (0..config.len())
        .filter(|&i| form.eval(config.point(i).coords()).expect("plane point").is_zero())
        .collect();
    (form, incident)
}

/// The maximum number of points of a plane configuration on one curve of
/// degree `t`, with a witness curve.
///
/// Point sets on a common degree-`t` curve are the sets whose evaluation rows
/// have rank below `C(t+2, 2)`, so the maximum is attained by the set cut out
/// by the unique curve through some `C(t+2, 2) − 1` independent points, or by
/// the whole set when its rank is already small. Reducible curves count.
pub fn max_on_plane_curve<F: Field>(
    config: &PointConfig<F>,
    t: u32,
    options: &SearchOptions,
) -> Result<CurveIncidenceRecord<F>, IncidenceError> {
    check_plane(config, t)?;
    let rho = form_space_dim(3, t) - 1;
    let rows = evaluation_matrix(config, t);
    let (members, exact) = max_flat(&rows, rho, options.budget(config.len(), t));
    let (form, incident) = curve_through(config, t, &members);
    Ok(CurveIncidenceRecord { degree: t, curve: IncidenceCurve::Form(form), incident, exact })
}

/// A degree-`t` plane curve through more than `bound` points, if one exists.
/// The flag says whether a `None` answer is exhaustive.
pub fn plane_curve_exceeding<F: Field>(
    config: &PointConfig<F>,
    t: u32,
    bound: usize,
    options: &SearchOptions,
) -> Result<(Option<CurveIncidenceRecord<F>>, bool), IncidenceError> {
    check_plane(config, t)?;
    let rho = form_space_dim(3, t) - 1;
    let rows = evaluation_matrix(config, t);
    let (hit, exact) = exceeds(&rows, rho, bound, options.budget(config.len(), t));
    Ok((
        hit.map(|members| {
            let (form, incident) = curve_through(config, t, &members);
            CurveIncidenceRecord { degree: t, curve: IncidenceCurve::Form(form), incident, exact: true }
        }),
        exact,
    ))
}

/// Checks property ★: at most `coefficient · t` points on any curve of
/// degree `t ≤ t_max`.
///
/// Degrees with `coefficient · t ≥ |Σ|` hold trivially and are skipped. In
/// the plane every degree is searched directly. In higher dimension lines
/// are checked exactly, and curves of degree ≥ 2 on a sampled projection to
/// the plane: a curve of degree `t` maps into one of degree at most `t`, so a
/// clean projection proves ★, while a violation downstairs is reported as
/// inconclusive.
pub fn property_star<F: Field>(
    config: &PointConfig<F>,
    coefficient: usize,
    t_max: u32,
    options: &SearchOptions,
) -> Result<StarReport<F>, IncidenceError> {
    if t_max == 0 {
        return Err(IncidenceError::DegreeTooSmall { degree: 0, minimum: 1 });
    }
    let n = config.len();
    let relevant = |t: u32| coefficient * (t as usize) < n;
    let mut report = StarReport {
        coefficient,
        t_max,
        satisfies: true,
        witness: None,
        exact: true,
        conclusive: true,
        projection: None,
    };
    let fail = |mut report: StarReport<F>, witness, conclusive| {
        report.satisfies = false;
        report.witness = Some(witness);
        report.conclusive = conclusive;
        report
    };

    if config.ambient_dim() == 2 {
        for t in (1..=t_max).take_while(|&t| relevant(t)) {
            let (hit, exact) = plane_curve_exceeding(config, t, coefficient * t as usize, options)?;
            report.exact &= exact;
            if let Some(w) = hit {
                return Ok(fail(report, w, true));
            }
        }
        return Ok(report);
    }

    if relevant(1) {
        let rows = config.coordinate_matrix();
        let budget = Budget { leaves: u64::MAX, force_exact: true, samples: 0, seed: 0 };
        if let (Some(incident), _) = exceeds(&rows, 2, coefficient, budget) {
            return Ok(fail(report, line_record(incident), true));
        }
    }
    if config.ambient_dim() < 2 || t_max < 2 || !relevant(2) {
        return Ok(report);
    }
    let proj = sample_general_projection(config.ambient_dim(), 2, config, options.seed, options.projection_retries)?;
    let image = proj.project(config)?;
    report.projection = Some(proj);
    for t in (2..=t_max).take_while(|&t| relevant(t)) {
        let (hit, exact) = plane_curve_exceeding(&image, t, coefficient * t as usize, options)?;
        report.exact &= exact;
        if let Some(w) = hit {
            return Ok(fail(report, w, false));
        }
    }
    Ok(report)
}

/// Largest `t` for which the ★ bound `coefficient · t` is below `size`.
pub fn star_degree_cap(size: usize, coefficient: usize) -> u32 {
    if coefficient == 0 {
        return 0;
    }
    (size.saturating_sub(1) / coefficient) as u32
}
