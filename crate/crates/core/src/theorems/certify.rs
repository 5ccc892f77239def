use serde::Serialize;

use crate::algebra::Field;
use crate::conditions::{full_certificate, separating_form, FullCertificate, SeparatingCertificate};
use crate::error::TheoremError;
use crate::geom::{sample_general_projection, span_dimension, LinearProjection, PointConfig};
use crate::incidence::{davis_geramita_hypothesis, property_star, star_degree_cap, SearchOptions, StarReport};
use crate::theorems::decomposition::{decompose_with_projection, product_form, Decomposition};
use crate::theorems::params::CIParams;
use crate::theorems::swapping::{avoiding_linear_form, swap_assemble};

/// How a certificate was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    /// Direct solve for `n ≤ 3` and `(4, 2)`.
    SmallCases,
    /// Points spanning at most a plane: solve on the plane and lift.
    Coplanar,
    /// The plane projection satisfies ★: solve there and lift along the cone.
    ConeLift,
    /// `n = 4`: the points over a crowded plane curve are swapped against
    /// products with the lifted curve.
    ConicSwap,
    Decomposition,
    /// Fallback solve in the ambient space.
    Direct,
}

impl Branch {
    pub fn name(self) -> &'static str {
        match self {
            Branch::SmallCases => "small-cases",
            Branch::Coplanar => "coplanar",
            Branch::ConeLift => "cone-lift",
            Branch::ConicSwap => "conic-swap",
            Branch::Decomposition => "decomposition",
            Branch::Direct => "direct",
        }
    }
}

/// A point whose routed certificate was replaced by a direct solve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Divergence {
    pub point: usize,
    pub branch: Branch,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DecompositionSummary {
    pub r: Option<u32>,
    pub l: Option<u32>,
    pub counts: Vec<(u32, usize)>,
    pub part_sizes: Vec<usize>,
    pub delta: Vec<usize>,
    pub gamma: Vec<usize>,
    pub budget: u32,
    pub exact: bool,
    /// Whether the projected residual set meets the plane separation
    /// hypothesis at the budget degree.
    pub residual_hypothesis: Option<bool>,
}

impl<F: Field> From<&Decomposition<F>> for DecompositionSummary {
    fn from(d: &Decomposition<F>) -> Self {
        DecompositionSummary {
            r: d.r(),
            l: d.l(),
            counts: d.counts.clone(),
            part_sizes: d.parts.iter().map(|p| p.members.len()).collect(),
            delta: d.delta.clone(),
            gamma: d.gamma.clone(),
            budget: d.budget,
            exact: d.exact,
            residual_hypothesis: None,
        }
    }
}

#[derive(Debug, Clone)]
pub struct CertifyOptions<F> {
    pub seed: u64,
    pub search: SearchOptions,
    /// Configurations in higher dimension are first projected here.
    pub intermediate_dim: usize,
    /// Replaces the sampled projection of the working space to the plane.
    pub plane_projection: Option<LinearProjection<F>>,
    /// Also solve every point directly in the ambient space and compare.
    pub cross_check: bool,
}

impl<F> Default for CertifyOptions<F> {
    fn default() -> Self {
        CertifyOptions {
            seed: 0,
            search: SearchOptions::default(),
            intermediate_dim: 3,
            plane_projection: None,
            cross_check: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarSummary {
    pub satisfies: bool,
    pub exact: bool,
    pub conclusive: bool,
}

impl<F> From<&StarReport<F>> for StarSummary {
    fn from(r: &StarReport<F>) -> Self {
        StarSummary { satisfies: r.satisfies, exact: r.exact, conclusive: r.conclusive }
    }
}

#[derive(Debug, Clone)]
pub struct CertificateBundle<F> {
    pub params: CIParams,
    pub seed: u64,
    pub degree: u32,
    pub route: Branch,
    /// One per point, in point order.
    pub certificates: Vec<SeparatingCertificate<F>>,
    /// Branch that produced each certificate.
    pub branches: Vec<Branch>,
    pub star: StarSummary,
    /// ★ on the plane image that decided the route, when one was taken.
    pub plane_star: Option<StarSummary>,
    pub decomposition: Option<DecompositionSummary>,
    /// Projections used, from the ambient space downwards.
    pub projections: Vec<LinearProjection<F>>,
    pub divergences: Vec<Divergence>,
    /// Whether an ambient solve independently confirmed every point.
    pub cross_checked: bool,
}

fn star<F: Field>(
    config: &PointConfig<F>,
    coefficient: usize,
    options: &SearchOptions,
) -> Result<StarReport<F>, TheoremError> {
    let t_max = star_degree_cap(config.len(), coefficient);
    if t_max == 0 {
        return Ok(StarReport {
            coefficient,
            t_max,
            satisfies: true,
            witness: None,
            exact: true,
            conclusive: true,
            projection: None,
        });
    }
    Ok(property_star(config, coefficient, t_max, options)?)
}

fn lift<F: Field>(
    proj: &LinearProjection<F>,
    cert: &SeparatingCertificate<F>,
    upstairs: &PointConfig<F>,
) -> Result<SeparatingCertificate<F>, TheoremError> {
    let form = proj.cone_lift(&cert.form)?;
    let value_at_point = form.eval(upstairs.point(cert.point).coords())?;
    Ok(SeparatingCertificate { point: cert.point, degree: cert.degree, form, value_at_point })
}

/// Certificates for every point of a subset, re-indexed to the full set.
fn separate_within<F: Field>(
    config: &PointConfig<F>,
    members: &[usize],
    degree: u32,
) -> Vec<Option<SeparatingCertificate<F>>> {
    let sub = config.subset(members);
    (0..members.len())
        .map(|pos| {
            separating_form(&sub, pos, degree).map(|mut c| {
                c.point = members[pos];
                c
            })
        })
        .collect()
}

type Routed<F> = Vec<Option<(Branch, SeparatingCertificate<F>)>>;

struct Route<F> {
    route: Branch,
    certs: Routed<F>,
    plane_star: Option<StarSummary>,
    decomposition: Option<DecompositionSummary>,
    projections: Vec<LinearProjection<F>>,
    notes: Vec<Divergence>,
}

impl<F: Field> Route<F> {
    fn new(route: Branch, size: usize) -> Self {
        Route {
            route,
            certs: vec![None; size],
            plane_star: None,
            decomposition: None,
            projections: Vec::new(),
            notes: Vec::new(),
        }
    }
}

fn seed_for(seed: u64, salt: u64) -> u64 {
    seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15)
}

/// Separates every node in degree `2n + k − 6` by following the proof
/// strategy for the parameters and the geometry of the point set, checking
/// each certificate, and falling back to a direct solve for any point the
/// routed construction misses.
///
/// Errors if the set exceeds the node bound, if ★ fails conclusively, or if
/// some point admits no separating form at all.
pub fn certify_main<F: Field>(
    config: &PointConfig<F>,
    params: CIParams,
    options: &CertifyOptions<F>,
) -> Result<CertificateBundle<F>, TheoremError> {
    let degree = params.separation_degree();
    let bound = params.node_bound();
    if config.len() as u64 > bound {
        return Err(TheoremError::TooManyPoints { size: config.len(), bound });
    }
    let c = params.star_coefficient();
    let search = options.search.with_seed(options.seed);
    let star_report = star(config, c, &search)?;
    if !star_report.satisfies && star_report.conclusive {
        let w = star_report.witness.as_ref().expect("violation has a witness");
        return Err(TheoremError::StarViolation { coefficient: c as u64, degree: w.degree, count: w.count() });
    }

    let mut route = if config.is_empty() {
        Route::new(Branch::Direct, 0)
    } else if params.n <= 3 || (params.n, params.k) == (4, 2) {
        let mut r = Route::new(Branch::SmallCases, config.len());
        for (i, cert) in separate_within(config, &(0..config.len()).collect::<Vec<_>>(), degree).into_iter().enumerate() {
            r.certs[i] = cert.map(|c| (Branch::SmallCases, c));
        }
        r
    } else if params.n == 4 {
        conic_route(config, params, options)?
    } else {
        high_route(config, params, options)?
    };

    let mut certificates = Vec::with_capacity(config.len());
    let mut branches = Vec::with_capacity(config.len());
    let mut missing = Vec::new();
    let mut divergences = std::mem::take(&mut route.notes);
    for (i, routed) in route.certs.into_iter().enumerate() {
        match routed {
            Some((b, cert)) if cert.verify(config) => {
                certificates.push(Some(cert));
                branches.push(b);
            }
            other => {
                let reason = match &other {
                    Some(_) => "routed certificate failed verification",
                    None => "no routed certificate",
                };
                if !divergences.iter().any(|d| d.point == i) {
                    divergences.push(Divergence { point: i, branch: route.route, reason: reason.into() });
                }
                certificates.push(None);
                branches.push(Branch::Direct);
                missing.push(i);
            }
        }
    }

    let oracle = if options.cross_check || !missing.is_empty() {
        Some(full_certificate(config, degree))
    } else {
        None
    };
    match &oracle {
        Some(FullCertificate::Failed(failures)) => {
            let contradicted: Vec<usize> = failures.iter().copied().filter(|i| certificates[*i].is_some()).collect();
            if !contradicted.is_empty() {
                return Err(TheoremError::CrossCheck(format!(
                    "direct solve finds no separating form for {contradicted:?}, but routed certificates verify"
                )));
            }
            return Err(TheoremError::Dependent { degree, failures: failures.clone() });
        }
        Some(FullCertificate::Complete(direct)) => {
            for &i in &missing {
                certificates[i] = Some(direct[i].clone());
            }
        }
        None => {}
    }
    divergences.sort_by_key(|d| d.point);

    Ok(CertificateBundle {
        params,
        seed: options.seed,
        degree,
        route: route.route,
        certificates: certificates.into_iter().map(|c| c.expect("filled")).collect(),
        branches,
        star: StarSummary::from(&star_report),
        plane_star: route.plane_star,
        decomposition: route.decomposition,
        projections: route.projections,
        divergences,
        cross_checked: oracle.is_some(),
    })
}

fn plane_projection<F: Field>(
    config: &PointConfig<F>,
    options: &CertifyOptions<F>,
    salt: u64,
) -> Result<LinearProjection<F>, TheoremError> {
    if let Some(p) = &options.plane_projection {
        return Ok(p.clone());
    }
    Ok(sample_general_projection(
        config.ambient_dim(),
        2,
        config,
        seed_for(options.seed, salt),
        options.search.projection_retries,
    )?)
}

/// Separates every point on the plane image at `degree` and lifts.
fn cone_lift_all<F: Field>(
    config: &PointConfig<F>,
    image: &PointConfig<F>,
    proj: &LinearProjection<F>,
    degree: u32,
    branch: Branch,
    route: &mut Route<F>,
) -> Result<(), TheoremError> {
    let all: Vec<usize> = (0..image.len()).collect();
    for (i, cert) in separate_within(image, &all, degree).into_iter().enumerate() {
        if let Some(cert) = cert {
            route.certs[i] = Some((branch, lift(proj, &cert, config)?));
        }
    }
    Ok(())
}

/// `n = 4`, `k ∈ {3, 4}`. With ★ on the plane image the cone lift suffices.
/// Otherwise a curve `C` of degree `t` carries too many projected points: the
/// points `Λ` over it are separated within `Λ` in degree `5t − 6`, each other
/// point `Q` by the lifted curve times a form separating `Q′` from the
/// remaining images in degree `D − t`, and the two are swapped up to `D`.
fn conic_route<F: Field>(
    config: &PointConfig<F>,
    params: CIParams,
    options: &CertifyOptions<F>,
) -> Result<Route<F>, TheoremError> {
    let degree = params.separation_degree();
    let c = params.star_coefficient();
    let proj = plane_projection(config, options, 1)?;
    let image = proj.project(config)?;
    let image_star = star(&image, c, &options.search.with_seed(seed_for(options.seed, 2)))?;
    let mut route = Route::new(Branch::ConeLift, config.len());
    route.plane_star = Some(StarSummary::from(&image_star));
    route.projections.push(proj.clone());
    if image_star.satisfies {
        cone_lift_all(config, &image, &proj, degree, Branch::ConeLift, &mut route)?;
        return Ok(route);
    }
    route.route = Branch::ConicSwap;
    let witness = image_star.witness.expect("violation has a witness");
    let crate::incidence::IncidenceCurve::Form(curve) = &witness.curve else {
        unreachable!("plane search returns forms")
    };
    let t = witness.degree;
    let lambda = witness.incident.clone();
    let gamma: Vec<usize> = (0..config.len()).filter(|i| !lambda.contains(i)).collect();
    if t >= degree {
        route.notes.push(Divergence {
            point: lambda[0],
            branch: Branch::ConicSwap,
            reason: format!("crowded curve of degree {t} leaves no room below {degree}"),
        });
        return Ok(route);
    }
    let lifted_curve = proj.cone_lift(curve)?;
    let mut gamma_certs = Vec::new();
    for (pos, cert) in separate_within(&image, &gamma, degree - t).into_iter().enumerate() {
        let q = gamma[pos];
        let Some(cert) = cert else {
            route.notes.push(Divergence {
                point: q,
                branch: Branch::ConicSwap,
                reason: format!("image not separated from the rest in degree {}", degree - t),
            });
            continue;
        };
        let g = proj.cone_lift(&cert.form)?;
        let form = lifted_curve.try_mul(&g)?;
        let value_at_point = form.eval(config.point(q).coords())?;
        let full = SeparatingCertificate { point: q, degree, form, value_at_point };
        route.certs[q] = Some((Branch::ConicSwap, full.clone()));
        gamma_certs.push(full);
    }
    if gamma_certs.len() != gamma.len() {
        return Ok(route);
    }
    let alpha = (5 * t).saturating_sub(6).clamp(1, degree);
    let line = avoiding_linear_form(config, seed_for(options.seed, 3))?;
    for (pos, h) in separate_within(config, &lambda, alpha).into_iter().enumerate() {
        let p = lambda[pos];
        let Some(h) = h else {
            route.notes.push(Divergence {
                point: p,
                branch: Branch::ConicSwap,
                reason: format!("not separated within the crowded set in degree {alpha}"),
            });
            continue;
        };
        match swap_assemble(config, p, &h.form, &gamma_certs, degree, &line) {
            Ok(cert) => route.certs[p] = Some((Branch::ConicSwap, cert)),
            Err(e) => route.notes.push(Divergence { point: p, branch: Branch::ConicSwap, reason: e.to_string() }),
        }
    }
    Ok(route)
}

/// `n ≥ 5`.
fn high_route<F: Field>(
    config: &PointConfig<F>,
    params: CIParams,
    options: &CertifyOptions<F>,
) -> Result<Route<F>, TheoremError> {
    let degree = params.separation_degree();
    let c = params.star_coefficient();
    let all: Vec<usize> = (0..config.len()).collect();

    if span_dimension(config, &all)? <= 2 && config.ambient_dim() > 2 {
        let mut route = Route::new(Branch::Coplanar, config.len());
        let proj = sample_general_projection(
            config.ambient_dim(),
            2,
            config,
            seed_for(options.seed, 4),
            options.search.projection_retries,
        )?;
        let image = proj.project(config)?;
        route.projections.push(proj.clone());
        cone_lift_all(config, &image, &proj, degree, Branch::Coplanar, &mut route)?;
        return Ok(route);
    }

    let mut route = Route::new(Branch::ConeLift, config.len());
    let psi = if config.ambient_dim() > options.intermediate_dim.max(2) {
        let p = sample_general_projection(
            config.ambient_dim(),
            options.intermediate_dim.max(2),
            config,
            seed_for(options.seed, 5),
            options.search.projection_retries,
        )?;
        route.projections.push(p.clone());
        Some(p)
    } else {
        None
    };
    let working = match &psi {
        Some(p) => p.project(config)?,
        None => config.clone(),
    };
    let lift_up = |cert: &SeparatingCertificate<F>| match &psi {
        Some(p) => lift(p, cert, config),
        None => Ok(cert.clone()),
    };

    let phi = plane_projection(&working, options, 6)?;
    let image = phi.project(&working)?;
    route.projections.push(phi.clone());
    let image_star = star(&image, c, &options.search.with_seed(seed_for(options.seed, 7)))?;
    route.plane_star = Some(StarSummary::from(&image_star));
    if image_star.satisfies {
        for (i, cert) in separate_within(&image, &all, degree).into_iter().enumerate() {
            if let Some(cert) = cert {
                route.certs[i] = Some((Branch::ConeLift, lift_up(&lift(&phi, &cert, &working)?)?));
            }
        }
        return Ok(route);
    }

    route.route = Branch::Decomposition;
    let dec = match decompose_with_projection(&working, params, phi.clone(), &options.search) {
        Ok(d) => d,
        Err(e @ TheoremError::Invariant { .. }) => {
            route.notes.push(Divergence { point: 0, branch: Branch::Decomposition, reason: e.to_string() });
            return Ok(route);
        }
        Err(e) => return Err(e),
    };
    let mut summary = DecompositionSummary::from(&dec);
    let residual = image.subset(&dec.gamma);
    summary.residual_hypothesis =
        davis_geramita_hypothesis(&residual, dec.budget, &options.search).ok().map(|r| r.holds);
    route.decomposition = Some(summary);
    let f = product_form(&working, &dec, seed_for(options.seed, 8))?;

    let mut gamma_certs = Vec::new();
    for (pos, g) in separate_within(&image, &dec.gamma, dec.budget).into_iter().enumerate() {
        let q = dec.gamma[pos];
        let Some(g) = g else {
            route.notes.push(Divergence {
                point: q,
                branch: Branch::Decomposition,
                reason: format!("residual image not separated in degree {}", dec.budget),
            });
            continue;
        };
        let form = f.try_mul(&phi.cone_lift(&g.form)?)?;
        let value_at_point = form.eval(working.point(q).coords())?;
        let cert = SeparatingCertificate { point: q, degree, form, value_at_point };
        route.certs[q] = Some((Branch::Decomposition, lift_up(&cert)?));
        gamma_certs.push(cert);
    }
    if gamma_certs.len() != dec.gamma.len() {
        return Ok(route);
    }
    let line = avoiding_linear_form(&working, seed_for(options.seed, 9))?;
    for (pos, h) in separate_within(&working, &dec.delta, degree).into_iter().enumerate() {
        let p = dec.delta[pos];
        let Some(h) = h else {
            route.notes.push(Divergence {
                point: p,
                branch: Branch::Decomposition,
                reason: format!("not separated within Δ in degree {degree}"),
            });
            continue;
        };
        match swap_assemble(&working, p, &h.form, &gamma_certs, degree, &line) {
            Ok(cert) => route.certs[p] = Some((Branch::Decomposition, lift_up(&cert)?)),
            Err(e) => route.notes.push(Divergence { point: p, branch: Branch::Decomposition, reason: e.to_string() }),
        }
    }
    Ok(route)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fp;
    use crate::geom::ProjPoint;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    type F1009 = Fp<1009>;

    fn random_config(n: usize, size: usize, seed: u64) -> PointConfig<F1009> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pts = (0..size).map(|_| ProjPoint::random(n, &mut rng)).collect();
        PointConfig::new(n, pts, "").unwrap()
    }

    fn check(bundle: &CertificateBundle<F1009>, cfg: &PointConfig<F1009>) {
        assert_eq!(bundle.certificates.len(), cfg.len());
        for (i, c) in bundle.certificates.iter().enumerate() {
            assert_eq!(c.point, i);
            assert_eq!(c.degree, bundle.degree);
            assert!(c.verify(cfg));
        }
    }

    #[test]
    fn small_case_three_two() {
        let cfg = random_config(5, 5, 1);
        let params = CIParams::new(3, 2).unwrap();
        let b = certify_main(&cfg, params, &CertifyOptions::default()).unwrap();
        assert_eq!((b.route, b.degree), (Branch::SmallCases, 2));
        check(&b, &cfg);
        assert!(b.divergences.is_empty() && b.cross_checked);
    }

    #[test]
    fn fourteen_general_points_for_four_three() {
        let cfg = random_config(5, 14, 2);
        let params = CIParams::new(4, 3).unwrap();
        let b = certify_main(&cfg, params, &CertifyOptions::default()).unwrap();
        assert_eq!(b.route, Branch::ConeLift);
        assert!(b.branches.iter().all(|&br| br == Branch::ConeLift));
        check(&b, &cfg);
    }

    #[test]
    fn crowded_conic_for_four_three_swaps() {
        // Eleven points over the conic x0·x2 = x1² in the plane x3 = x4 = 0,
        // at random heights in x5, and three general points.
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut pts: Vec<ProjPoint<F1009>> = (0..11i64)
            .map(|s| ProjPoint::from_i64(&[1, s, s * s, 0, 0, rng.gen_range(0..1009)]).unwrap())
            .collect();
        pts.extend((0..3).map(|_| ProjPoint::random(5, &mut rng)));
        let cfg = PointConfig::new(5, pts, "").unwrap();
        let keep = LinearProjection::axis(5, &[0, 1, 2]).unwrap();
        let opts = CertifyOptions { plane_projection: Some(keep), ..CertifyOptions::default() };
        let b = certify_main(&cfg, CIParams::new(4, 3).unwrap(), &opts).unwrap();
        assert_eq!(b.route, Branch::ConicSwap);
        assert!(b.branches.iter().all(|&br| br == Branch::ConicSwap), "{:?}", b.divergences);
        check(&b, &cfg);
    }

    #[test]
    fn coplanar_five_two() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let pts = (0..11)
            .map(|_| {
                let p = ProjPoint::<F1009>::random(2, &mut rng);
                let c = p.coords();
                ProjPoint::new(vec![
                    c[0],
                    c[1],
                    c[2],
                    c[0] + c[1],
                    c[1] + c[2],
                    c[0] + c[2],
                ])
                .unwrap()
            })
            .collect();
        let cfg = PointConfig::new(5, pts, "").unwrap();
        let b = certify_main(&cfg, CIParams::new(5, 2).unwrap(), &CertifyOptions::default()).unwrap();
        assert_eq!((b.route, b.degree), (Branch::Coplanar, 6));
        check(&b, &cfg);
    }

    #[test]
    fn decomposition_five_two() {
        // The cone configuration in ℙ³, embedded in ℙ⁵ by x4 = x5 = 0 and
        // projected back along the axes.
        let cone = crate::theorems::decomposition::tests::cone_config(6, 1);
        let pts = cone
            .points()
            .iter()
            .map(|p| {
                let mut c = p.coords().to_vec();
                c.extend([F1009::new(0), F1009::new(0)]);
                ProjPoint::new(c).unwrap()
            })
            .collect();
        let cfg = PointConfig::new(5, pts, "").unwrap();
        let opts = CertifyOptions {
            intermediate_dim: 5,
            plane_projection: Some(LinearProjection::axis(5, &[0, 1, 2]).unwrap()),
            ..CertifyOptions::default()
        };
        let b = certify_main(&cfg, CIParams::new(5, 2).unwrap(), &opts).unwrap();
        assert_eq!(b.route, Branch::Decomposition);
        let d = b.decomposition.as_ref().unwrap();
        assert_eq!((d.r, d.counts.clone(), d.budget), (Some(2), vec![(2, 1)], 4));
        assert_eq!(d.residual_hypothesis, Some(true));
        assert!(b.branches.iter().all(|&br| br == Branch::Decomposition), "{:?}", b.divergences);
        check(&b, &cfg);
    }

    #[test]
    fn too_many_points() {
        let cfg = random_config(5, 6, 5);
        let err = certify_main(&cfg, CIParams::new(3, 2).unwrap(), &CertifyOptions::default()).unwrap_err();
        assert_eq!(err, TheoremError::TooManyPoints { size: 6, bound: 5 });
    }

    #[test]
    fn collinear_star_violation() {
        // (3, 3): c = 4. Five collinear points break ★ on lines.
        let pts = (0..5i64).map(|s| ProjPoint::<F1009>::from_i64(&[1, s, 0, 0, 0, 0]).unwrap()).collect();
        let cfg = PointConfig::new(5, pts, "").unwrap();
        let err = certify_main(&cfg, CIParams::new(3, 3).unwrap(), &CertifyOptions::default()).unwrap_err();
        assert!(matches!(err, TheoremError::StarViolation { coefficient: 4, degree: 1, count: 5 }));
    }
}
