use serde::Serialize;

use crate::algebra::Field;
use crate::conditions::{impose_independent, ConditionsReport};
use crate::error::TheoremError;
use crate::geom::PointConfig;

/// What the Cayley–Bacharach theorem predicts for a subset of a
/// zero-dimensional complete intersection.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CbPrediction {
    /// `Σ d_i − N − 1`.
    pub critical_degree: u32,
    pub bezout_number: u64,
    /// Dependent at the critical degree iff the subset is the whole
    /// intersection, i.e. has `Π d_i` points.
    pub dependent_expected: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CbCheck {
    pub prediction: CbPrediction,
    pub report: ConditionsReport,
    pub agrees: bool,
}

/// The caller vouches that `config` lies on a complete intersection of
/// hypersurfaces of the given degrees; this is recorded, not verified.
pub fn cb_predicate<F: Field>(config: &PointConfig<F>, degrees: &[u32]) -> Result<CbPrediction, TheoremError> {
    let n = config.ambient_dim();
    if degrees.len() != n {
        return Err(TheoremError::BadParameters(format!("need {n} degrees in ℙ^{n}, got {}", degrees.len())));
    }
    if degrees.contains(&0) {
        return Err(TheoremError::BadParameters("hypersurface degrees must be positive".into()));
    }
    let sum: u64 = degrees.iter().map(|&d| d as u64).sum();
    let critical = sum
        .checked_sub(n as u64 + 1)
        .ok_or_else(|| TheoremError::BadParameters(format!("Σ d_i = {sum} leaves no critical degree")))?;
    let bezout: u64 = degrees.iter().map(|&d| d as u64).product();
    Ok(CbPrediction {
        critical_degree: critical as u32,
        bezout_number: bezout,
        dependent_expected: config.len() as u64 == bezout,
    })
}

/// The prediction together with the rank computation at the critical degree.
pub fn cb_check<F: Field>(config: &PointConfig<F>, degrees: &[u32]) -> Result<CbCheck, TheoremError> {
    let prediction = cb_predicate(config, degrees)?;
    let report = impose_independent(config, prediction.critical_degree);
    let agrees = report.independent != prediction.dependent_expected;
    Ok(CbCheck { prediction, report, agrees })
}
