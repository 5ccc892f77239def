use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::{dot, ExactMatrix, Field};
use crate::error::{GeomError, PolyError};
use crate::geom::point::{PointConfig, ProjPoint};
use crate::poly::MultiPoly;

/// A linear projection ℙ^r ⇢ ℙ^m given by a full-rank `(m+1) × (r+1)`
/// matrix. Its center is the projectivized kernel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearProjection<F> {
    matrix: ExactMatrix<F>,
    seed: Option<u64>,
    attempts: u32,
}

impl<F: Field> LinearProjection<F> {
    pub fn new(matrix: ExactMatrix<F>) -> Result<Self, GeomError> {
        let (rows, cols) = (matrix.num_rows(), matrix.num_cols());
        if rows < 2 || rows > cols {
            return Err(GeomError::BadProjectionShape {
                source_dim: cols.saturating_sub(1),
                target: rows.saturating_sub(1),
            });
        }
        if matrix.rank() != rows {
            return Err(GeomError::RankDeficient);
        }
        Ok(LinearProjection { matrix, seed: None, attempts: 0 })
    }

    /// Rebuilds a sampled projection from its stored matrix and provenance.
    pub fn from_record(matrix: ExactMatrix<F>, seed: Option<u64>, attempts: u32) -> Result<Self, GeomError> {
        let mut proj = Self::new(matrix)?;
        proj.seed = seed;
        proj.attempts = attempts;
        Ok(proj)
    }

    /// Keeps the coordinates `keep` of ℙ^source_dim, in that order.
    pub fn axis(source_dim: usize, keep: &[usize]) -> Result<Self, GeomError> {
        let mut m = ExactMatrix::zeros(keep.len(), source_dim + 1);
        for (i, &c) in keep.iter().enumerate() {
            if c > source_dim {
                return Err(GeomError::BadProjectionShape { source_dim, target: keep.len().saturating_sub(1) });
            }
            m.set(i, c, F::one());
        }
        Self::new(m)
    }

    pub fn matrix(&self) -> &ExactMatrix<F> {
        &self.matrix
    }

    pub fn source_dim(&self) -> usize {
        self.matrix.num_cols() - 1
    }

    pub fn target_dim(&self) -> usize {
        self.matrix.num_rows() - 1
    }

    /// Seed this projection was sampled from, if any.
    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    /// Number of samples drawn before this one was accepted.
    pub fn attempts(&self) -> u32 {
        self.attempts
    }

    /// The image of `p`, or `None` when `p` lies in the center.
    pub fn apply(&self, p: &ProjPoint<F>) -> Option<ProjPoint<F>> {
        debug_assert_eq!(p.coords().len(), self.matrix.num_cols());
        let image: Vec<F> = (0..self.matrix.num_rows()).map(|i| dot(self.matrix.row(i), p.coords())).collect();
        ProjPoint::new(image).ok()
    }

    /// Images of every point, in order. Fails if a point lies in the center
    /// or two points land on the same image.
    pub fn project(&self, config: &PointConfig<F>) -> Result<PointConfig<F>, GeomError> {
        if config.ambient_dim() != self.source_dim() {
            return Err(GeomError::WrongDimension {
                index: 0,
                expected: self.source_dim() + 1,
                found: config.ambient_dim() + 1,
            });
        }
        let mut images = Vec::with_capacity(config.len());
        let mut seen: HashMap<ProjPoint<F>, usize> = HashMap::new();
        for (i, p) in config.points().iter().enumerate() {
            let q = self.apply(p).ok_or(GeomError::CenterHit { index: i })?;
            if let Some(&j) = seen.get(&q) {
                return Err(GeomError::Collision { first: j, second: i });
            }
            seen.insert(q.clone(), i);
            images.push(q);
        }
        PointConfig::new(self.target_dim(), images, config.label())
    }

    /// The coordinate functions of the target as linear forms on the source.
    pub fn linear_forms(&self) -> Vec<MultiPoly<F>> {
        (0..self.matrix.num_rows()).map(|i| MultiPoly::linear(self.matrix.row(i))).collect()
    }

    /// Pulls a form on the target back along the projection: the cone over
    /// `form` with vertex the center. Same degree; vanishes at `P` outside the
    /// center exactly when `form` vanishes at the image of `P`.
    pub fn cone_lift(&self, form: &MultiPoly<F>) -> Result<MultiPoly<F>, PolyError> {
        if form.num_vars() != self.target_dim() + 1 {
            return Err(PolyError::VariableMismatch { expected: self.target_dim() + 1, found: form.num_vars() });
        }
        form.compose_linear(&self.linear_forms())
    }
}

/// Draws random projections ℙ^source ⇢ ℙ^target from `seed` until one is of
/// full rank and maps `config` injectively away from its center.
pub fn sample_general_projection<F: Field>(
    source_dim: usize,
    target_dim: usize,
    config: &PointConfig<F>,
    seed: u64,
    max_retries: u32,
) -> Result<LinearProjection<F>, GeomError> {
    if target_dim < 1 || target_dim > source_dim {
        return Err(GeomError::BadProjectionShape { source_dim, target: target_dim });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (rows, cols) = (target_dim + 1, source_dim + 1);
    for attempt in 1..=max_retries.max(1) {
        let entries = (0..rows * cols).map(|_| F::random(&mut rng)).collect();
        let matrix = ExactMatrix::new(rows, cols, entries).expect("shape");
        let Ok(mut proj) = LinearProjection::new(matrix) else {
            continue;
        };
        if proj.project(config).is_ok() {
            proj.seed = Some(seed);
            proj.attempts = attempt;
            return Ok(proj);
        }
    }
    Err(GeomError::GenericityFailure { attempts: max_retries.max(1) })
}
