use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::Field;
use crate::conditions::{separating_form, SeparatingCertificate};
use crate::error::TheoremError;
use crate::geom::PointConfig;
use crate::poly::MultiPoly;

/// A linear form vanishing at no point of the configuration. Coordinate
/// hyperplanes are tried first, then seeded random forms.
pub fn avoiding_linear_form<F: Field>(config: &PointConfig<F>, seed: u64) -> Result<MultiPoly<F>, TheoremError> {
    let vars = config.ambient_dim() + 1;
    let avoids = |l: &MultiPoly<F>| config.points().iter().all(|p| !l.eval(p.coords()).expect("same variables").is_zero());
    for i in 0..vars {
        let l = MultiPoly::variable(vars, i);
        if avoids(&l) {
            return Ok(l);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..256 {
        let coeffs: Vec<F> = (0..vars).map(|_| F::random(&mut rng)).collect();
        let l = MultiPoly::linear(&coeffs);
        if !l.is_zero() && avoids(&l) {
            return Ok(l);
        }
    }
    Err(TheoremError::NoAvoidingForm)
}

fn times_power<F: Field>(form: &MultiPoly<F>, line: &MultiPoly<F>, e: u32) -> MultiPoly<F> {
    form.try_mul(&line.pow(e)).expect("same variables")
}

/// Combines a form `h` of degree `α` through `Λ∖P` with forms `G_Q` of degree
/// `β` through `Σ∖Q`, one per remaining point `Q`, into a form of degree `γ`
/// through `Σ∖P` and not through `P`:
///
/// `H = h·L^{γ−α} − Σ_Q (h·L^{γ−α})(Q) / G_Q(Q) · G_Q·L^{γ−β}`
///
/// where `L` is a linear form avoiding every point. Each correction term
/// cancels the value at its `Q` and vanishes at every other point, `P`
/// included.
pub fn swap_assemble<F: Field>(
    config: &PointConfig<F>,
    point: usize,
    h: &MultiPoly<F>,
    others: &[SeparatingCertificate<F>],
    gamma: u32,
    line: &MultiPoly<F>,
) -> Result<SeparatingCertificate<F>, TheoremError> {
    let alpha = h.degree();
    let beta = others.iter().map(|c| c.degree).max().unwrap_or(0);
    if gamma < alpha || gamma < beta {
        return Err(TheoremError::SwappingDegrees { alpha, beta, gamma });
    }
    let base = times_power(h, line, gamma - alpha);
    let mut out = base.clone();
    for cert in others {
        let q = config.point(cert.point).coords();
        let value = base.eval(q)?;
        if value.is_zero() {
            continue;
        }
        let scale = value.div_exact(&cert.value_at_point).expect("certificate value is nonzero");
        let correction = times_power(&cert.form, line, gamma - cert.degree).scale(&scale);
        out = out.try_sub(&correction)?;
    }
    let value_at_point = out.eval(config.point(point).coords())?;
    let cert = SeparatingCertificate { point, degree: gamma, form: out, value_at_point };
    if !cert.verify(config) {
        return Err(TheoremError::CrossCheck(format!("swapped form for point {point} does not separate it")));
    }
    Ok(cert)
}

/// Separates `P ∈ Λ` from `Σ = Λ ⊔ Δ` in degree `γ` from a degree-`α` form
/// separating `P` within `Λ` and degree-`β` forms separating each `Q ∈ Δ`
/// within `Σ`. Both hypotheses are checked by direct solves.
#[allow(clippy::too_many_arguments)]
pub fn swapping_compose<F: Field>(
    config: &PointConfig<F>,
    lambda: &[usize],
    delta: &[usize],
    point: usize,
    alpha: u32,
    beta: u32,
    gamma: u32,
    seed: u64,
) -> Result<SeparatingCertificate<F>, TheoremError> {
    let mut seen = vec![0u8; config.len()];
    for &i in lambda.iter().chain(delta) {
        if i >= config.len() {
            return Err(TheoremError::NotAPartition);
        }
        seen[i] += 1;
    }
    if seen.iter().any(|&s| s != 1) {
        return Err(TheoremError::NotAPartition);
    }
    let Some(pos) = lambda.iter().position(|&i| i == point) else {
        return Err(TheoremError::BadParameters(format!("point {point} is not in the first block")));
    };
    if alpha == 0 || beta == 0 || gamma < alpha.max(beta) {
        return Err(TheoremError::SwappingDegrees { alpha, beta, gamma });
    }
    let h = separating_form(&config.subset(lambda), pos, alpha)
        .ok_or(TheoremError::SwappingHypothesis { point, degree: alpha })?
        .form;
    let others = delta
        .iter()
        .map(|&q| separating_form(config, q, beta).ok_or(TheoremError::SwappingHypothesis { point: q, degree: beta }))
        .collect::<Result<Vec<_>, _>>()?;
    let line = avoiding_linear_form(config, seed)?;
    swap_assemble(config, point, &h, &others, gamma, &line)
}

/// The constant form 1 in `vars` variables.
pub(crate) fn unit_form<F: Field>(vars: usize) -> MultiPoly<F> {
    MultiPoly::constant(vars, F::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Fp;
    use crate::geom::ProjPoint;
    use rand::Rng;

    type F1009 = Fp<1009>;

    fn random_config(n: usize, size: usize, rng: &mut ChaCha8Rng) -> PointConfig<F1009> {
        loop {
            let pts = (0..size).map(|_| ProjPoint::random(n, rng)).collect();
            if let Ok(c) = PointConfig::new(n, pts, "") {
                return c;
            }
        }
    }

    #[test]
    fn empty_second_block_reduces_to_direct_separation() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let cfg = random_config(2, 5, &mut rng);
        let all: Vec<usize> = (0..5).collect();
        let c = swapping_compose(&cfg, &all, &[], 2, 2, 1, 2, 0).unwrap();
        assert_eq!(c.degree, 2);
        assert!(c.verify(&cfg));
    }

    #[test]
    fn random_blocks_at_degree_three() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let mut built = 0;
        for _ in 0..20 {
            let size = rng.gen_range(3..8);
            let cfg = random_config(3, size, &mut rng);
            let split = rng.gen_range(1..size);
            let lambda: Vec<usize> = (0..split).collect();
            let delta: Vec<usize> = (split..size).collect();
            match swapping_compose(&cfg, &lambda, &delta, 0, 2, 2, 3, 9) {
                Ok(c) => {
                    assert!(c.verify(&cfg) && c.degree == 3);
                    built += 1;
                }
                Err(TheoremError::SwappingHypothesis { .. }) => {}
                Err(e) => panic!("{e}"),
            }
        }
        assert!(built >= 15);
    }

    #[test]
    fn hypothesis_failure_names_point() {
        // Four collinear points: no conic through three of them misses the fourth.
        let pts = (0..4).map(|s| ProjPoint::<F1009>::from_i64(&[1, s, 0]).unwrap()).collect();
        let cfg = PointConfig::new(2, pts, "").unwrap();
        let err = swapping_compose(&cfg, &[0, 1, 2, 3], &[], 0, 2, 2, 2, 0).unwrap_err();
        assert_eq!(err, TheoremError::SwappingHypothesis { point: 0, degree: 2 });
    }

    #[test]
    fn bad_inputs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let cfg = random_config(2, 4, &mut rng);
        assert_eq!(swapping_compose(&cfg, &[0, 1], &[1, 2, 3], 0, 1, 1, 1, 0), Err(TheoremError::NotAPartition));
        assert!(matches!(
            swapping_compose(&cfg, &[0, 1], &[2, 3], 0, 2, 1, 1, 0),
            Err(TheoremError::SwappingDegrees { .. })
        ));
    }

    #[test]
    fn avoiding_form_over_tiny_field() {
        type F2 = Fp<2>;
        // Each nonzero linear form on ℙ¹(𝔽_2) vanishes at one of its three
        // points.
        let pts = [[1, 0], [0, 1], [1, 1]].iter().map(|c| ProjPoint::<F2>::from_i64(c).unwrap()).collect();
        let cfg = PointConfig::new(1, pts, "").unwrap();
        assert_eq!(avoiding_linear_form(&cfg, 0), Err(TheoremError::NoAvoidingForm));
        let two = cfg.subset(&[0, 1]);
        assert!(avoiding_linear_form(&two, 0).is_ok());
    }
}
