//! Serializable documents shared by the library and the command line.
//!
//! Scalars are written as decimal strings (`"a/b"` over ℚ); every document
//! names its field, and reading it back into a different field fails.
use serde::{Deserialize, Serialize};

use crate::algebra::{ExactMatrix, Field, FieldDescriptor};
use crate::conditions::{ConditionsReport, FullCertificate, SeparatingCertificate};
use crate::error::{AlgebraError, DocumentError};
use crate::generators::{ExampleFamily, GridCI, NodeReport};
use crate::geom::{LinearProjection, PointConfig, ProjPoint};
use crate::incidence::{CurveIncidenceRecord, IncidenceCurve, StarReport};
use crate::poly::{Monomial, MultiPoly};
use crate::theorems::{Branch, CIParams, CertificateBundle, DecompositionSummary, Divergence, StarSummary};

fn check_field<F: Field>(found: FieldDescriptor) -> Result<(), DocumentError> {
    let expected = F::descriptor();
    if found != expected {
        return Err(AlgebraError::FieldMismatch { expected, found }.into());
    }
    Ok(())
}

fn scalar<F: Field>(s: &str) -> Result<F, DocumentError> {
    Ok(F::parse_scalar(s)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointSetDocument {
    pub field: FieldDescriptor,
    pub ambient_dim: usize,
    pub points: Vec<Vec<String>>,
    #[serde(default)]
    pub label: String,
}

impl PointSetDocument {
    pub fn from_config<F: Field>(config: &PointConfig<F>) -> Self {
        PointSetDocument {
            field: F::descriptor(),
            ambient_dim: config.ambient_dim(),
            points: config.points().iter().map(|p| p.coords().iter().map(|c| c.to_string()).collect()).collect(),
            label: config.label().to_string(),
        }
    }

    pub fn to_config<F: Field>(&self) -> Result<PointConfig<F>, DocumentError> {
        check_field::<F>(self.field)?;
        let pts = self
            .points
            .iter()
            .map(|coords| {
                let c = coords.iter().map(|s| scalar::<F>(s)).collect::<Result<Vec<_>, _>>()?;
                Ok(ProjPoint::new(c)?)
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Ok(PointConfig::new(self.ambient_dim, pts, self.label.clone())?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coefficient: String,
    pub exponents: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialDocument {
    pub field: FieldDescriptor,
    pub num_vars: usize,
    pub degree: u32,
    pub terms: Vec<TermRecord>,
}

impl PolynomialDocument {
    pub fn from_poly<F: Field>(p: &MultiPoly<F>) -> Self {
        PolynomialDocument {
            field: F::descriptor(),
            num_vars: p.num_vars(),
            degree: p.degree(),
            terms: p
                .terms()
                .map(|(m, c)| TermRecord { coefficient: c.to_string(), exponents: m.exponents().to_vec() })
                .collect(),
        }
    }

    pub fn to_poly<F: Field>(&self) -> Result<MultiPoly<F>, DocumentError> {
        check_field::<F>(self.field)?;
        let terms = self
            .terms
            .iter()
            .map(|t| Ok((Monomial::new(t.exponents.clone()), scalar::<F>(&t.coefficient)?)))
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Ok(MultiPoly::from_terms(self.num_vars, self.degree, terms)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProjectionRecord {
    pub field: FieldDescriptor,
    pub matrix: Vec<Vec<String>>,
    pub seed: Option<u64>,
    pub attempts: u32,
}

impl ProjectionRecord {
    pub fn from_projection<F: Field>(p: &LinearProjection<F>) -> Self {
        ProjectionRecord {
            field: F::descriptor(),
            matrix: p.matrix().to_rows().iter().map(|r| r.iter().map(|c| c.to_string()).collect()).collect(),
            seed: p.seed(),
            attempts: p.attempts(),
        }
    }

    pub fn to_projection<F: Field>(&self) -> Result<LinearProjection<F>, DocumentError> {
        check_field::<F>(self.field)?;
        let cols = self.matrix.first().map_or(0, |r| r.len());
        let rows = self
            .matrix
            .iter()
            .map(|r| r.iter().map(|s| scalar::<F>(s)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        let m = ExactMatrix::from_rows(rows, cols)?;
        Ok(LinearProjection::from_record(m, self.seed, self.attempts)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CertificateRecord {
    pub point: usize,
    pub degree: u32,
    pub value_at_point: String,
    pub form: PolynomialDocument,
}

impl CertificateRecord {
    pub fn from_certificate<F: Field>(c: &SeparatingCertificate<F>) -> Self {
        CertificateRecord {
            point: c.point,
            degree: c.degree,
            value_at_point: c.value_at_point.to_string(),
            form: PolynomialDocument::from_poly(&c.form),
        }
    }
}

/// Rank data plus the per-point verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionsDocument {
    pub field: FieldDescriptor,
    #[serde(flatten)]
    pub report: ConditionsReport,
    pub failures: Vec<usize>,
    pub certificates: Vec<CertificateRecord>,
}

impl ConditionsDocument {
    pub fn new<F: Field>(report: ConditionsReport, full: &FullCertificate<F>) -> Self {
        let certificates = match full {
            FullCertificate::Complete(certs) => certs.iter().map(CertificateRecord::from_certificate).collect(),
            FullCertificate::Failed(_) => Vec::new(),
        };
        ConditionsDocument { field: F::descriptor(), report, failures: full.failures().to_vec(), certificates }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IncidenceDocument {
    pub degree: u32,
    pub incident: Vec<usize>,
    pub exact: bool,
    /// The carrying plane curve, absent for lines through two points.
    pub curve: Option<PolynomialDocument>,
    pub line_through: Option<[usize; 2]>,
}

impl IncidenceDocument {
    pub fn from_record<F: Field>(r: &CurveIncidenceRecord<F>) -> Self {
        let (curve, line_through) = match &r.curve {
            IncidenceCurve::Form(f) => (Some(PolynomialDocument::from_poly(f)), None),
            IncidenceCurve::Line { through } => (None, Some(*through)),
        };
        IncidenceDocument { degree: r.degree, incident: r.incident.clone(), exact: r.exact, curve, line_through }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarDocument {
    pub coefficient: usize,
    pub t_max: u32,
    pub satisfies: bool,
    pub exact: bool,
    pub conclusive: bool,
    pub witness: Option<IncidenceDocument>,
    pub projection: Option<ProjectionRecord>,
}

impl StarDocument {
    pub fn from_report<F: Field>(r: &StarReport<F>) -> Self {
        StarDocument {
            coefficient: r.coefficient,
            t_max: r.t_max,
            satisfies: r.satisfies,
            exact: r.exact,
            conclusive: r.conclusive,
            witness: r.witness.as_ref().map(IncidenceDocument::from_record),
            projection: r.projection.as_ref().map(ProjectionRecord::from_projection),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CrossCheck {
    Pass,
    /// Not run.
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BundleDocument {
    pub field: FieldDescriptor,
    pub params: CIParams,
    pub seed: u64,
    pub degree: u32,
    pub route: Branch,
    pub branches: Vec<Branch>,
    pub star: StarSummary,
    pub plane_star: Option<StarSummary>,
    pub decomposition: Option<DecompositionSummary>,
    pub projections: Vec<ProjectionRecord>,
    pub divergences: Vec<Divergence>,
    pub certificates: Vec<CertificateRecord>,
    pub cross_check: CrossCheck,
}

impl BundleDocument {
    pub fn from_bundle<F: Field>(b: &CertificateBundle<F>) -> Self {
        BundleDocument {
            field: F::descriptor(),
            params: b.params,
            seed: b.seed,
            degree: b.degree,
            route: b.route,
            branches: b.branches.clone(),
            star: b.star.clone(),
            plane_star: b.plane_star.clone(),
            decomposition: b.decomposition.clone(),
            projections: b.projections.iter().map(ProjectionRecord::from_projection).collect(),
            divergences: b.divergences.clone(),
            certificates: b.certificates.iter().map(CertificateRecord::from_certificate).collect(),
            cross_check: if b.cross_checked { CrossCheck::Pass } else { CrossCheck::Skipped },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExampleDocument {
    pub field: FieldDescriptor,
    pub n: u32,
    pub k: u32,
    pub seed: u64,
    pub f: Vec<PolynomialDocument>,
    pub g: Vec<PolynomialDocument>,
    pub nodes: NodeReport,
}

impl ExampleDocument {
    pub fn new<F: Field>(family: &ExampleFamily<F>, nodes: &NodeReport) -> Self {
        ExampleDocument {
            field: F::descriptor(),
            n: family.n,
            k: family.k,
            seed: family.seed,
            f: family.f.iter().map(PolynomialDocument::from_poly).collect(),
            g: family.g.iter().map(PolynomialDocument::from_poly).collect(),
            nodes: nodes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GridDocument {
    pub points: PointSetDocument,
    pub degrees: [u32; 2],
    pub curves: Vec<PolynomialDocument>,
}

impl GridDocument {
    pub fn new<F: Field>(grid: &GridCI<F>) -> Self {
        GridDocument {
            points: PointSetDocument::from_config(&grid.config),
            degrees: grid.degrees,
            curves: grid.curves.iter().map(PolynomialDocument::from_poly).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fp;
    use num_rational::BigRational;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    type F101 = Fp<101>;

    #[test]
    fn rational_points_round_trip() {
        let pts = vec![ProjPoint::<BigRational>::new(vec![
            BigRational::new(1.into(), 3.into()),
            BigRational::from_integer((-2).into()),
            BigRational::from_integer(0.into()),
        ])
        .unwrap()];
        let cfg = PointConfig::new(2, pts, "third").unwrap();
        let doc = PointSetDocument::from_config(&cfg);
        assert_eq!(doc.field, FieldDescriptor::Rational);
        assert_eq!(doc.to_config::<BigRational>().unwrap(), cfg);
    }

    #[test]
    fn point_document_json_shape() {
        let cfg = PointConfig::new(2, vec![ProjPoint::<F101>::from_i64(&[2, 4, 6]).unwrap()], "one").unwrap();
        let text = serde_json::to_string(&PointSetDocument::from_config(&cfg)).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["field"], "fp:101");
        assert_eq!(v["ambient_dim"], 2);
        assert_eq!(v["points"], serde_json::json!([["1", "2", "3"]]));
        let back: PointSetDocument = serde_json::from_str(&text).unwrap();
        assert_eq!(back.to_config::<F101>().unwrap(), cfg);
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let cfg = PointConfig::new(1, vec![ProjPoint::<F101>::from_i64(&[1, 5]).unwrap()], "").unwrap();
        let doc = PointSetDocument::from_config(&cfg);
        let err = doc.to_config::<Fp<7>>().unwrap_err();
        assert!(matches!(err, DocumentError::Algebra(AlgebraError::FieldMismatch { .. })));
    }

    #[test]
    fn projection_round_trip_keeps_provenance() {
        let cfg = PointConfig::new(3, vec![ProjPoint::<F101>::from_i64(&[1, 2, 3, 4]).unwrap()], "").unwrap();
        let p = crate::geom::sample_general_projection(3, 2, &cfg, 11, 8).unwrap();
        let rec = ProjectionRecord::from_projection(&p);
        assert_eq!(rec.to_projection::<F101>().unwrap(), p);
    }

    proptest! {
        #[test]
        fn polynomials_round_trip(seed in any::<u64>(), vars in 1usize..5, degree in 0u32..4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let p = MultiPoly::<F101>::random(vars, degree, &mut rng);
            let doc = PolynomialDocument::from_poly(&p);
            prop_assert_eq!(doc.to_poly::<F101>().unwrap(), p);
        }
    }
}
