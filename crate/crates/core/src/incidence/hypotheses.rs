use serde::Serialize;

use crate::algebra::Field;
use crate::error::IncidenceError;
use crate::geom::PointConfig;
use crate::incidence::curves::{plane_curve_exceeding, CurveIncidenceRecord, SearchOptions};
use crate::incidence::flats::{exceeds, Budget};

/// Points spanning a linear subspace that carries too many of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubspaceWitness {
    pub dimension: usize,
    pub bound: usize,
    pub incident: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EisenbudKohReport {
    pub degree: u32,
    pub holds: bool,
    pub witness: Option<SubspaceWitness>,
    pub exact: bool,
}

/// Whether at most `ξ·k + 1` points lie in every `k`-dimensional linear
/// subspace, for `1 ≤ k ≤ N`. When it holds the points impose independent
/// conditions on forms of degree `ξ`.
///
/// `k = N` bounds the whole set by `ξ·N + 1`; without it the hypothesis would
/// admit more points than there are forms of degree `ξ`.
pub fn eisenbud_koh_hypothesis<F: Field>(
    config: &PointConfig<F>,
    degree: u32,
    options: &SearchOptions,
) -> Result<EisenbudKohReport, IncidenceError> {
    if degree < 2 {
        return Err(IncidenceError::DegreeTooSmall { degree, minimum: 2 });
    }
    let rows = config.coordinate_matrix();
    let budget = Budget {
        leaves: options.enumeration_budget,
        force_exact: config.len() <= options.exact_threshold,
        samples: options.samples,
        seed: options.seed,
    };
    let mut exact = true;
    for k in 1..=config.ambient_dim() {
        let bound = degree as usize * k + 1;
        if config.len() <= bound {
            break;
        }
        let (hit, ex) = exceeds(&rows, k + 1, bound, budget);
        exact &= ex;
        if let Some(incident) = hit {
            return Ok(EisenbudKohReport {
                degree,
                holds: false,
                witness: Some(SubspaceWitness { dimension: k, bound, incident }),
                exact: true,
            });
        }
    }
    Ok(EisenbudKohReport { degree, holds: true, witness: None, exact })
}

/// One curve-degree condition of the plane hypothesis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveBoundCheck<F> {
    pub degree: u32,
    /// At most `degree·(ξ+3−degree) − 2` points may lie on such a curve.
    pub bound: usize,
    /// The configuration is too small to violate the bound.
    pub vacuous: bool,
    pub witness: Option<CurveIncidenceRecord<F>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DavisGeramitaReport<F> {
    pub degree: u32,
    /// `⌊(ξ+3)/2⌋`.
    pub m: u32,
    /// `max(m(ξ+3−m) − 1, m²)`.
    pub delta_bound: usize,
    pub size_ok: bool,
    pub curve_checks: Vec<CurveBoundCheck<F>>,
    pub holds: bool,
    pub exact: bool,
}

/// `(m, max(m(ξ+3−m) − 1, m²))` for the plane hypothesis at degree `ξ`.
pub fn davis_geramita_parameters(degree: u32) -> (u32, usize) {
    let m = (degree + 3) / 2;
    let a = (m * (degree + 3 - m)) as usize - 1;
    (m, a.max((m * m) as usize))
}

/// Hypothesis for plane point sets under which every point is cut out by a
/// degree-`ξ` curve through the others: at most
/// `max(m(ξ+3−m) − 1, m²)` points, and at most `k(ξ+3−k) − 2` of them on a
/// possibly reducible curve of degree `k`, for `1 ≤ k ≤ m`.
pub fn davis_geramita_hypothesis<F: Field>(
    config: &PointConfig<F>,
    degree: u32,
    options: &SearchOptions,
) -> Result<DavisGeramitaReport<F>, IncidenceError> {
    if degree < 3 {
        return Err(IncidenceError::DegreeTooSmall { degree, minimum: 3 });
    }
    if config.ambient_dim() != 2 {
        return Err(IncidenceError::WrongAmbient { expected: 2, found: config.ambient_dim() });
    }
    let (m, delta_bound) = davis_geramita_parameters(degree);
    let size_ok = config.len() <= delta_bound;
    let mut checks = Vec::new();
    let mut holds = size_ok;
    let mut exact = true;
    for k in 1..=m {
        let bound = (k * (degree + 3 - k)) as usize - 2;
        let vacuous = config.len() <= bound;
        let witness = if vacuous || !holds {
            None
        } else {
            let (hit, ex) = plane_curve_exceeding(config, k, bound, options)?;
            exact &= ex;
            hit
        };
        holds &= witness.is_none();
        checks.push(CurveBoundCheck { degree: k, bound, vacuous, witness });
    }
    Ok(DavisGeramitaReport { degree, m, delta_bound, size_ok, curve_checks: checks, holds, exact })
}
