use nodal_core::conditions::{full_certificate, impose_independent};
use nodal_core::generators::{gen_grid_ci, gen_star_config};
use nodal_core::geom::{sample_general_projection, LinearProjection, PointConfig, ProjPoint};
use nodal_core::incidence::{property_star, SearchOptions};
use nodal_core::poly::{resultant_bivariate, MultiPoly};
use nodal_core::theorems::{
    cb_check, certify_main, decompose_with_projection, degree_budget, residual_bound, swapping_compose, CIParams,
    CertifyOptions,
};
use nodal_core::{Rational, F1009};
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_config(dim: usize, size: usize, rng: &mut ChaCha8Rng) -> PointConfig<F1009> {
    loop {
        let pts = (0..size).map(|_| ProjPoint::random(dim, rng)).collect();
        if let Ok(c) = PointConfig::new(dim, pts, "") {
            return c;
        }
    }
}

/// Twelve points over the conic `x0·x2 = x1²` of the plane `x3 = 0`, lifted
/// to random heights, plus `extra` random points of ℙ³.
fn conic_cone(extra: usize, rng: &mut ChaCha8Rng) -> PointConfig<F1009> {
    let start = rng.gen_range(0..990u64);
    let mut pts: Vec<ProjPoint<F1009>> = (start..start + 12)
        .map(|s| {
            let h = F1009::new(rng.gen_range(0..1009));
            ProjPoint::new(vec![F1009::new(1), F1009::new(s), F1009::new(s * s), h]).unwrap()
        })
        .collect();
    while pts.len() < 12 + extra {
        let p = ProjPoint::random(3, rng);
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointConfig::new(3, pts, "").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn cone_lift_vanishes_exactly_over_the_curve(seed in any::<u64>(), size in 1usize..8, deg in 1u32..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = random_config(4, size, &mut rng);
        let proj = sample_general_projection(4, 2, &cfg, seed, 16).unwrap();
        let image = proj.project(&cfg).unwrap();
        prop_assert_eq!(image.len(), cfg.len());
        // A curve through every image point but the first, when one exists.
        let curve = full_certificate(&image, deg);
        let form = match curve {
            nodal_core::conditions::FullCertificate::Complete(c) => c[0].form.clone(),
            nodal_core::conditions::FullCertificate::Failed(_) => MultiPoly::random(3, deg, &mut rng),
        };
        let lifted = proj.cone_lift(&form).unwrap();
        for (p, q) in cfg.points().iter().zip(image.points()) {
            prop_assert_eq!(lifted.eval(p.coords()).unwrap().is_zero(), form.eval(q.coords()).unwrap().is_zero());
        }
    }

    #[test]
    fn star_passes_to_subsets(seed in any::<u64>(), size in 4usize..14, keep in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = random_config(2, size, &mut rng);
        let opts = SearchOptions::default();
        let full = property_star(&cfg, 3, 2, &opts).unwrap();
        let idx: Vec<usize> = (0..size).filter(|i| keep >> i & 1 == 1).collect();
        let sub = property_star(&cfg.subset(&idx), 3, 2, &opts).unwrap();
        prop_assert!(!full.satisfies || sub.satisfies);
    }

    #[test]
    fn star_configurations_recheck(seed in 0u64..10_000, which in 0usize..3) {
        let (n, k) = [(3, 2), (3, 3), (4, 3)][which];
        let params = CIParams::new(n, k).unwrap();
        let size = params.node_bound() as usize;
        let s = gen_star_config::<F1009>(params, size, 5, seed, 32).unwrap();
        prop_assert_eq!(s.config.len(), size);
        if s.t_max > 0 {
            let opts = SearchOptions::default();
            let again = property_star(&s.config, params.star_coefficient(), s.t_max, &opts).unwrap();
            prop_assert!(again.satisfies || !again.conclusive);
        }
    }

    #[test]
    fn certify_agrees_with_direct_solve(seed in 0u64..10_000, which in 0usize..3) {
        let (n, k) = [(2, 2), (3, 2), (3, 3)][which];
        let params = CIParams::new(n, k).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let size = rng.gen_range(1..=params.node_bound() as usize);
        let cfg = random_config(5, size, &mut rng);
        let direct = full_certificate(&cfg, params.separation_degree());
        match certify_main(&cfg, params, &CertifyOptions { seed, ..CertifyOptions::default() }) {
            Ok(b) => {
                prop_assert!(direct.is_complete());
                prop_assert!(b.certificates.iter().all(|c| c.verify(&cfg)));
            }
            Err(nodal_core::error::TheoremError::Dependent { .. }) => prop_assert!(!direct.is_complete()),
            Err(nodal_core::error::TheoremError::StarViolation { .. }) => {}
            Err(e) => prop_assert!(false, "{}", e),
        }
    }

    #[test]
    fn swapping_separates_when_hypotheses_hold(seed in any::<u64>(), size in 3usize..9, bump in 0u32..2) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = random_config(3, size, &mut rng);
        let mut order: Vec<usize> = (0..size).collect();
        order.shuffle(&mut rng);
        let cut = rng.gen_range(1..size);
        let (mut lambda, mut delta) = (order[..cut].to_vec(), order[cut..].to_vec());
        lambda.sort_unstable();
        delta.sort_unstable();
        let point = lambda[0];
        let sub = cfg.subset(&lambda);
        let alpha = (1..8).find(|&a| full_certificate(&sub, a).is_complete()).unwrap();
        let beta = (1..8).find(|&b| full_certificate(&cfg, b).is_complete()).unwrap();
        let gamma = alpha.max(beta) + bump;
        let cert = swapping_compose(&cfg, &lambda, &delta, point, alpha, beta, gamma, seed).unwrap();
        prop_assert_eq!(cert.degree, gamma);
        prop_assert!(cert.verify(&cfg));
    }

    #[test]
    fn decomposition_invariants(seed in any::<u64>(), extra in 0usize..7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = conic_cone(extra, &mut rng);
        let params = CIParams::new(5, 2).unwrap();
        let axis = LinearProjection::axis(3, &[0, 1, 2]).unwrap();
        let dec = decompose_with_projection(&cfg, params, axis, &SearchOptions::default()).unwrap();
        let spent: u64 = dec.counts.iter().map(|&(j, c)| j as u64 * c as u64).sum();
        prop_assert!(spent <= (params.n - 2) as u64);
        prop_assert_eq!(dec.budget, degree_budget(params, &dec.counts).unwrap());
        prop_assert!(dec.budget >= 3);
        prop_assert!(dec.gamma.len() as i64 <= residual_bound(params, spent));
        let mut all: Vec<usize> = dec.delta.iter().chain(&dec.gamma).copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..cfg.len()).collect::<Vec<_>>());
        for part in &dec.parts {
            prop_assert!(part.members.iter().all(|m| dec.delta.contains(m)));
        }
    }

    #[test]
    fn resultant_vanishes_iff_common_factor(seed in any::<u64>(), shared in any::<bool>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let lead = |rng: &mut ChaCha8Rng, d: u32| {
            // Monic in x0 so the degree in x0 is the full degree.
            let p = MultiPoly::<F1009>::random(3, d, rng);
            let c = p.coefficient(&nodal_core::poly::Monomial::new(vec![d, 0, 0]));
            p.try_add(&MultiPoly::variable(3, 0).pow(d).scale(&(F1009::new(1) - c))).unwrap()
        };
        let (mut a, mut b) = (lead(&mut rng, 2), lead(&mut rng, 2));
        if shared {
            let l = lead(&mut rng, 1);
            a = a.try_mul(&l).unwrap();
            b = b.try_mul(&l).unwrap();
        }
        let r = resultant_bivariate(&a, &b, 0).unwrap();
        if shared {
            prop_assert!(r.is_zero());
        } else {
            // Random pairs over 𝔽_1009 share a zero very rarely; a zero
            // resultant must then come with a common zero of the forms.
            prop_assume!(!r.is_zero());
            prop_assert_eq!(r.degree(), a.degree() * b.degree());
        }
    }

    #[test]
    fn grid_subsets_follow_the_bezout_count(a in 2u32..5, drop in any::<u64>()) {
        let grid = gen_grid_ci::<Rational>(a).unwrap();
        prop_assert_eq!(grid.config.len(), (a * a) as usize);
        let degrees = [a, a];
        let whole = cb_check(&grid.config, &degrees).unwrap();
        prop_assert!(whole.agrees && whole.prediction.dependent_expected);
        let keep: Vec<usize> = (0..grid.config.len()).filter(|&i| i != (drop % (a * a) as u64) as usize).collect();
        let sub = cb_check(&grid.config.subset(&keep), &degrees).unwrap();
        prop_assert!(sub.agrees && !sub.prediction.dependent_expected);
    }

    #[test]
    fn independence_is_monotone_in_degree(seed in any::<u64>(), size in 1usize..10, deg in 1u32..4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let cfg = random_config(2, size, &mut rng);
        if impose_independent(&cfg, deg).independent {
            prop_assert!(impose_independent(&cfg, deg + 1).independent);
        }
    }

    #[test]
    fn plane_curve_inequalities(n in 5u32..=12, k in 2u32..=12, t in 1u32..12, s in 0u32..11) {
        prop_assume!(k <= n);
        let (n, k, t, s) = (n as i64, k as i64, t as i64, s as i64);
        let c = n + k - 2;
        if 2 <= t && t < n - 1 {
            prop_assert!(t * (2 * n + k - 3 - t) - 2 >= t * c);
        }
        if s <= n - 2 {
            let d = 2 * n + k - 6 - s;
            prop_assert!(d >= n + k - 4 && d >= 3);
            if c > d {
                prop_assert!(s >= n - 3);
            }
            if 2 <= t && 2 * t <= d + 3 {
                prop_assert_eq!(t * (d + 3 - t) - 2 - c * t, t * (n - 1 - s - t) - 2);
            }
        }
    }
}
