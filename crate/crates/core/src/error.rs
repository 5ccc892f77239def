use thiserror::Error;

use crate::algebra::FieldDescriptor;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldDescriptor, found: FieldDescriptor },
    #[error("cannot parse {text:?} as an element of {field}")]
    BadScalar { text: String, field: FieldDescriptor },
    #[error("bad field descriptor {0:?} (expected \"rational\" or \"fp:<prime>\")")]
    BadFieldDescriptor(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: expected {expected}, found {found}")]
    VariableMismatch { expected: usize, found: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },
    #[error("monomial {exponents:?} has degree {found}, form has degree {expected}")]
    NotHomogeneous { exponents: Vec<u32>, expected: u32, found: u32 },
    #[error("operation needs a nonzero polynomial")]
    ZeroPolynomial,
    #[error("variable index {index} out of range for {num_vars} variables")]
    BadVariable { index: usize, num_vars: usize },
    #[error(
        "eliminated variable x{var} does not occur in one of the inputs; \
         apply a coordinate change or reseed the instance"
    )]
    DegenerateLeadingCoefficient { var: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeomError {
    #[error("point has only zero coordinates")]
    ZeroPoint,
    #[error("point {index} has {found} coordinates, expected {expected}")]
    WrongDimension { index: usize, expected: usize, found: usize },
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("point {index} lies in the projection center; resample the projection")]
    CenterHit { index: usize },
    #[error("points {first} and {second} have the same image; resample the projection")]
    Collision { first: usize, second: usize },
    #[error("projection matrix is not of full row rank")]
    RankDeficient,
    #[error("projection ℙ^{source_dim} ⇢ ℙ^{target} is not allowed")]
    BadProjectionShape { source_dim: usize, target: usize },
    #[error("no admissible projection found after {attempts} attempts")]
    GenericityFailure { attempts: u32 },
    #[error("empty point set")]
    Empty,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IncidenceError {
    #[error("need at least {needed} points, found {found}")]
    TooFewPoints { needed: usize, found: usize },
    #[error("expected a configuration in ℙ^{expected}, found ℙ^{found}")]
    WrongAmbient { expected: usize, found: usize },
    #[error("degree {degree} is below the minimum {minimum}")]
    DegreeTooSmall { degree: u32, minimum: u32 },
    #[error(transparent)]
    Geom(#[from] GeomError),
}

/// Which structural property of a decomposition failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionInvariant {
    /// A part carries no more than `j·(n+k−2)` points.
    PartTooSmall,
    /// `Σ j·c_j ≤ n−2`.
    DegreeSumBound,
    /// The degree budget is at least 3.
    BudgetAtLeastThree,
    /// `|Γ| ≤ (n+k−2)(n−1−Σ j·c_j) − 2`.
    ResidualBound,
    /// `Λ ⊆ Δ`, `Γ = Σ∖Δ`.
    Nesting,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("parameters out of range: {0}")]
    BadParameters(String),
    #[error("{size} points exceed the node bound {bound}")]
    TooManyPoints { size: usize, bound: u64 },
    #[error("property ★ with coefficient {coefficient} fails: {count} points on a curve of degree {degree}")]
    StarViolation { coefficient: u64, degree: u32, count: usize },
    #[error("swapping hypothesis fails at point {point} in degree {degree}")]
    SwappingHypothesis { point: usize, degree: u32 },
    #[error("need γ ≥ max(α, β), got γ = {gamma}, α = {alpha}, β = {beta}")]
    SwappingDegrees { alpha: u32, beta: u32, gamma: u32 },
    #[error("blocks must partition the point set")]
    NotAPartition,
    #[error("decomposition invariant {invariant:?} violated: {detail}")]
    Invariant { invariant: DecompositionInvariant, detail: String },
    #[error("no linear form avoids every point; the field is too small")]
    NoAvoidingForm,
    #[error("points {failures:?} admit no separating form of degree {degree}")]
    Dependent { degree: u32, failures: Vec<usize> },
    #[error("cross-check failed: {0}")]
    CrossCheck(String),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// The last degeneracy met while sampling an example family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Degeneracy {
    /// A node-locus form lost degree in the eliminated variable.
    DegreeDrop,
    /// The node-locus forms share a factor (zero resultant).
    SharedFactor,
    /// The resultant has a repeated root.
    NotSquarefree,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("parameters out of range: {0}")]
    BadParameters(String),
    #[error("field with {order} elements is too small (need {needed})")]
    FieldTooSmall { order: u64, needed: u64 },
    #[error("example family stayed degenerate after {attempts} attempts (last: {last:?})")]
    DegenerateFamily { attempts: u32, last: Degeneracy },
    #[error("no configuration found after {attempts} attempts")]
    RetriesExhausted { attempts: u32 },
    #[error(transparent)]
    Theorem(#[from] TheoremError),
    #[error(transparent)]
    Incidence(#[from] IncidenceError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

#[derive(Debug, Error)]
pub enum DocumentError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Poly(#[from] PolyError),
}
