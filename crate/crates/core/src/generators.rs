//! Instances: the nodal example family, grid complete intersections and random
//! configurations with property ★.
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::Field;
use crate::error::{Degeneracy, GeneratorError, PolyError, TheoremError};
use crate::geom::{PointConfig, ProjPoint};
use crate::incidence::{property_star, star_degree_cap, SearchOptions};
use crate::poly::{is_squarefree, resultant_bivariate, MultiPoly};
use crate::theorems::CIParams;

/// `F = x₃f₁ + x₄f₂ + x₅f₃` and `G = x₃g₁ + x₄g₂ + x₅g₃` in ℙ⁵, with
/// `deg f_i = n − 1` and `deg g_i = k − 1`. The threefold `F = G = 0`
/// contains the plane `x₃ = x₄ = x₅ = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExampleFamily<F> {
    pub n: u32,
    pub k: u32,
    pub seed: u64,
    pub f: [MultiPoly<F>; 3],
    pub g: [MultiPoly<F>; 3],
}

impl<F: Field> ExampleFamily<F> {
    fn combine(forms: &[MultiPoly<F>; 3]) -> MultiPoly<F> {
        let mut out = MultiPoly::zero(6, forms[0].degree() + 1);
        for (i, f) in forms.iter().enumerate() {
            let term = MultiPoly::variable(6, 3 + i).try_mul(f).expect("six variables");
            out = out.try_add(&term).expect("same degree");
        }
        out
    }

    pub fn big_f(&self) -> MultiPoly<F> {
        Self::combine(&self.f)
    }

    pub fn big_g(&self) -> MultiPoly<F> {
        Self::combine(&self.g)
    }

    /// `f₁g₂ − f₂g₁` and `f₁g₃ − f₃g₁` on the plane `x₃ = x₄ = x₅ = 0`,
    /// as ternary forms of degree `n + k − 2`.
    pub fn minors_on_plane(&self) -> Result<[MultiPoly<F>; 2], PolyError> {
        let plane = |p: &MultiPoly<F>| p.restrict_to(&[0, 1, 2]);
        let f: Vec<_> = self.f.iter().map(plane).collect::<Result<_, _>>()?;
        let g: Vec<_> = self.g.iter().map(plane).collect::<Result<_, _>>()?;
        let a = f[0].try_mul(&g[1])?.try_sub(&f[1].try_mul(&g[0])?)?;
        let b = f[0].try_mul(&g[2])?.try_sub(&f[2].try_mul(&g[0])?)?;
        Ok([a, b])
    }
}

/// Count of the points of the plane where both minors vanish, over the
/// algebraic closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NodeReport {
    pub resultant_degree: u32,
    pub squarefree: bool,
    /// Equal to the resultant degree once it is squarefree.
    pub node_count: u64,
    /// Samples drawn, the accepted one included.
    pub attempts: u32,
}

fn classify<F: Field>(family: &ExampleFamily<F>) -> Result<NodeReport, Degeneracy> {
    let [a, b] = family.minors_on_plane().map_err(|_| Degeneracy::SharedFactor)?;
    if a.is_zero() || b.is_zero() {
        return Err(Degeneracy::SharedFactor);
    }
    let full = a.degree();
    if a.degree_in(0) != full || b.degree_in(0) != full {
        return Err(Degeneracy::DegreeDrop);
    }
    let res = resultant_bivariate(&a, &b, 0).map_err(|_| Degeneracy::DegreeDrop)?;
    if res.is_zero() {
        return Err(Degeneracy::SharedFactor);
    }
    if !is_squarefree(&res).expect("nonzero binary form") {
        return Err(Degeneracy::NotSquarefree);
    }
    Ok(NodeReport {
        resultant_degree: res.degree(),
        squarefree: true,
        node_count: res.degree() as u64,
        attempts: 0,
    })
}

/// Forms `(f, g)` for one draw of the family.
pub type FamilyForms<F> = ([MultiPoly<F>; 3], [MultiPoly<F>; 3]);

fn dense_forms<F: Field>(n: u32, k: u32, rng: &mut ChaCha8Rng) -> FamilyForms<F> {
    let f = std::array::from_fn(|_| MultiPoly::random(6, n - 1, rng));
    let g = std::array::from_fn(|_| MultiPoly::random(6, k - 1, rng));
    (f, g)
}

pub const EXAMPLE_RETRIES: u32 = 16;

/// Samples the family with dense random forms and counts the nodes on the
/// plane by a resultant, redrawing on degenerate samples.
pub fn gen_example<F: Field>(n: u32, k: u32, seed: u64) -> Result<(ExampleFamily<F>, NodeReport), GeneratorError> {
    gen_example_with(n, k, seed, EXAMPLE_RETRIES, |_, rng| dense_forms(n, k, rng))
}

/// [`gen_example`] with the sampler supplied; it receives the attempt number,
/// starting at 1.
pub fn gen_example_with<F: Field>(
    n: u32,
    k: u32,
    seed: u64,
    max_retries: u32,
    mut sampler: impl FnMut(u32, &mut ChaCha8Rng) -> FamilyForms<F>,
) -> Result<(ExampleFamily<F>, NodeReport), GeneratorError> {
    CIParams::new(n, k).map_err(|e| GeneratorError::BadParameters(e.to_string()))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last = Degeneracy::SharedFactor;
    for attempt in 1..=max_retries.max(1) {
        let (f, g) = sampler(attempt, &mut rng);
        let family = ExampleFamily { n, k, seed, f, g };
        match classify(&family) {
            Ok(mut report) => {
                report.attempts = attempt;
                return Ok((family, report));
            }
            Err(d) => last = d,
        }
    }
    Err(GeneratorError::DegenerateFamily { attempts: max_retries.max(1), last })
}

/// The `a × a` grid in ℙ² as a complete intersection of two products of
/// `a` lines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCI<F> {
    pub config: PointConfig<F>,
    pub degrees: [u32; 2],
    /// `Π_s (x₀ − s·x₂)` and `Π_t (x₁ − t·x₂)`.
    pub curves: [MultiPoly<F>; 2],
}

/// The points `(s : t : 1)` for `s, t ∈ {0, …, a−1}`.
pub fn gen_grid_ci<F: Field>(a: u32) -> Result<GridCI<F>, GeneratorError> {
    if a < 2 {
        return Err(GeneratorError::BadParameters(format!("grid side must be at least 2, got {a}")));
    }
    if let Some(order) = F::order() {
        if order < a as u64 {
            return Err(GeneratorError::FieldTooSmall { order, needed: a as u64 });
        }
    }
    let mut pts = Vec::with_capacity((a * a) as usize);
    for s in 0..a as i64 {
        for t in 0..a as i64 {
            pts.push(ProjPoint::new(vec![F::from_i64(s), F::from_i64(t), F::one()])?);
        }
    }
    let config = PointConfig::new(2, pts, format!("{a}x{a} grid"))?;
    let product = |var: usize| {
        let mut acc = MultiPoly::constant(3, F::one());
        for s in 0..a as i64 {
            let mut c = vec![F::zero(); 3];
            c[var] = F::one();
            c[2] = -F::from_i64(s);
            acc = acc.try_mul(&MultiPoly::linear(&c)).expect("three variables");
        }
        acc
    };
    Ok(GridCI { config, degrees: [a, a], curves: [product(0), product(1)] })
}

fn draw_distinct<F: Field>(ambient_dim: usize, size: usize, rng: &mut ChaCha8Rng) -> Option<Vec<ProjPoint<F>>> {
    let mut pts: Vec<ProjPoint<F>> = Vec::with_capacity(size);
    let mut draws = 0;
    while pts.len() < size {
        if draws >= 64 * size + 64 {
            return None;
        }
        draws += 1;
        let p = ProjPoint::random(ambient_dim, rng);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    Some(pts)
}

/// `size` random distinct points of ℙ^ambient_dim, with no condition.
pub fn gen_random_config<F: Field>(ambient_dim: usize, size: usize, seed: u64) -> Result<PointConfig<F>, GeneratorError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pts = draw_distinct(ambient_dim, size, &mut rng).ok_or(GeneratorError::RetriesExhausted { attempts: 1 })?;
    Ok(PointConfig::new(ambient_dim, pts, format!("random sample {seed}"))?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarConfig<F> {
    pub config: PointConfig<F>,
    pub seed: u64,
    pub attempts: u32,
    /// Degrees up to this were checked.
    pub t_max: u32,
}

/// Draws `size` random distinct points of ℙ^ambient_dim until the set passes
/// property ★ with coefficient `n + k − 2`.
pub fn gen_star_config<F: Field>(
    params: CIParams,
    size: usize,
    ambient_dim: usize,
    seed: u64,
    max_retries: u32,
) -> Result<StarConfig<F>, GeneratorError> {
    let bound = params.node_bound();
    if size as u64 > bound {
        return Err(TheoremError::TooManyPoints { size, bound }.into());
    }
    if ambient_dim < 1 {
        return Err(GeneratorError::BadParameters("ambient dimension must be positive".into()));
    }
    let c = params.star_coefficient();
    let t_max = star_degree_cap(size, c);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=max_retries.max(1) {
        let Some(pts) = draw_distinct(ambient_dim, size, &mut rng) else {
            continue;
        };
        let config = PointConfig::new(ambient_dim, pts, format!("star sample {seed}/{attempt}"))?;
        let passes = t_max == 0 || {
            let opts = SearchOptions::default().with_seed(rng.gen());
            property_star(&config, c, t_max, &opts)?.satisfies
        };
        if passes {
            return Ok(StarConfig { config, seed, attempts: attempt, t_max });
        }
    }
    Err(GeneratorError::RetriesExhausted { attempts: max_retries.max(1) })
}
