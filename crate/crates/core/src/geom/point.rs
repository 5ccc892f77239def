use std::collections::HashMap;
use std::fmt;

use rand::Rng;

use crate::algebra::{ExactMatrix, Field};
use crate::error::GeomError;

/// A point of ℙ^N stored by its normalized representative: the first
/// nonzero coordinate is 1.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ProjPoint<F> {
    coords: Vec<F>,
}

impl<F: Field> ProjPoint<F> {
    pub fn new(mut coords: Vec<F>) -> Result<Self, GeomError> {
        let lead = coords.iter().find(|c| !c.is_zero()).ok_or(GeomError::ZeroPoint)?;
        let inv = lead.inv().expect("nonzero lead");
        if !inv.is_one() {
            for c in coords.iter_mut() {
                *c *= inv.clone();
            }
        }
        Ok(ProjPoint { coords })
    }

    pub fn from_i64(coords: &[i64]) -> Result<Self, GeomError> {
        Self::new(coords.iter().map(|&c| F::from_i64(c)).collect())
    }

    /// A uniformly random point of the affine cone, normalized.
    pub fn random<R: Rng + ?Sized>(ambient_dim: usize, rng: &mut R) -> Self {
        loop {
            let coords: Vec<F> = (0..=ambient_dim).map(|_| F::random(rng)).collect();
            if let Ok(p) = Self::new(coords) {
                return p;
            }
        }
    }

    pub fn coords(&self) -> &[F] {
        &self.coords
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.len() - 1
    }
}

impl<F: fmt::Debug> fmt::Debug for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("ProjPoint").field(&self.coords).finish()
    }
}

impl<F: fmt::Display> fmt::Display for ProjPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", c.join(":"))
    }
}

/// An ordered set of distinct points of ℙ^N.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointConfig<F> {
    ambient_dim: usize,
    points: Vec<ProjPoint<F>>,
    label: String,
}

impl<F: Field> PointConfig<F> {
    pub fn new(ambient_dim: usize, points: Vec<ProjPoint<F>>, label: impl Into<String>) -> Result<Self, GeomError> {
        let mut seen: HashMap<&ProjPoint<F>, usize> = HashMap::new();
        for (i, p) in points.iter().enumerate() {
            if p.ambient_dim() != ambient_dim {
                return Err(GeomError::WrongDimension {
                    index: i,
                    expected: ambient_dim + 1,
                    found: p.coords.len(),
                });
            }
            if let Some(&j) = seen.get(p) {
                return Err(GeomError::DuplicatePoint { first: j, second: i });
            }
            seen.insert(p, i);
        }
        Ok(PointConfig { ambient_dim, points, label: label.into() })
    }

    pub fn empty(ambient_dim: usize) -> Self {
        PointConfig { ambient_dim, points: Vec::new(), label: String::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn points(&self) -> &[ProjPoint<F>] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &ProjPoint<F> {
        &self.points[i]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// The points at `indices`, in that order.
    pub fn subset(&self, indices: &[usize]) -> Self {
        PointConfig {
            ambient_dim: self.ambient_dim,
            points: indices.iter().map(|&i| self.points[i].clone()).collect(),
            label: self.label.clone(),
        }
    }

    /// All points except the one at `index`.
    pub fn without(&self, index: usize) -> Self {
        let keep: Vec<usize> = (0..self.len()).filter(|&i| i != index).collect();
        self.subset(&keep)
    }

    /// Rows are the normalized coordinate vectors.
    pub fn coordinate_matrix(&self) -> ExactMatrix<F> {
        ExactMatrix::from_rows(self.points.iter().map(|p| p.coords.clone()).collect(), self.ambient_dim + 1)
            .expect("consistent dimensions")
    }
}

/// Dimension of the projective span of the points at `indices`.
pub fn span_dimension<F: Field>(config: &PointConfig<F>, indices: &[usize]) -> Result<usize, GeomError> {
    if indices.is_empty() {
        return Err(GeomError::Empty);
    }
    Ok(config.coordinate_matrix().select_rows(indices).rank() - 1)
}
