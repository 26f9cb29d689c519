mod common;

use ortho_core::mapping::{check_bounds_12, check_condition_17, min_eps_condition_14, profile, LinearMap, Sampler};
use ortho_core::{Matrix, NormSpec};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = Matrix> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(-3.0f64..3.0, n * n).prop_map(move |d| Matrix::from_rows(d.chunks(n).map(<[f64]>::to_vec).collect()).unwrap())
    })
}

fn well_conditioned() -> impl Strategy<Value = LinearMap> {
    matrix()
        .prop_map(|g| LinearMap::endomorphism(g, NormSpec::lp(2.0)).unwrap())
        .prop_filter("well conditioned", |m| profile(m).map(|p| p.kappa < 1e3).unwrap_or(false))
}

/// Smallest ε in `[0, 1)` for which `passes` holds, by bisection.
fn min_passing(passes: impl Fn(f64) -> bool) -> f64 {
    if passes(0.0) {
        return 0.0;
    }
    let (mut lo, mut hi) = (0.0, 1.0 - 1e-15);
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if passes(mid) { hi = mid } else { lo = mid }
    }
    hi
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certificates_attain_the_norms(map in well_conditioned()) {
        let p = profile(&map).unwrap();
        prop_assert!(common::rel_close(map.ratio(p.cert_max.as_slice()).unwrap(), p.op_norm, 1e-8));
        prop_assert!(common::rel_close(map.ratio(p.cert_min.as_slice()).unwrap(), p.co_norm, 1e-8));
    }

    #[test]
    fn scaling_the_map(map in well_conditioned(), lambda in prop_oneof![-5.0f64..-0.1, 0.1f64..5.0]) {
        let p = profile(&map).unwrap();
        let scaled = LinearMap::endomorphism(map.matrix.scaled(lambda), NormSpec::lp(2.0)).unwrap();
        let q = profile(&scaled).unwrap();
        prop_assert!(common::rel_close(q.op_norm, lambda.abs() * p.op_norm, 1e-10));
        prop_assert!((q.eps_star - p.eps_star).abs() < 1e-10);
    }

    #[test]
    fn eps_star_chain(map in well_conditioned()) {
        let s = Sampler::new(64, 1);
        let star = profile(&map).unwrap().eps_star;
        prop_assert!((min_eps_condition_14(&map).unwrap() - star).abs() < 1e-8);
        let b = min_passing(|e| check_bounds_12(&map, e, &s).unwrap().passes);
        let c = min_passing(|e| check_condition_17(&map, e, &s).unwrap().passes);
        prop_assert!((b - star).abs() < 1e-8, "bounds {b} vs {star}");
        prop_assert!((c - star).abs() < 1e-8, "pair ratio {c} vs {star}");
    }

    #[test]
    fn passing_bounds_give_interpolated_bounds(map in well_conditioned(), eps in 0.0f64..0.99, ts in prop::collection::vec(0.0f64..=1.0, 16)) {
        let r = check_bounds_12(&map, eps, &Sampler::new(64, 2)).unwrap();
        if r.passes {
            let p = profile(&map).unwrap();
            let (co2, op2) = (p.co_norm.powi(2), p.op_norm.powi(2));
            for t in ts {
                let eta2 = co2 + t * (op2 - co2);
                let lo = (1.0 - eps) / (1.0 + eps) * eta2;
                let hi = (1.0 + eps) / (1.0 - eps) * eta2;
                prop_assert!(r.min_ratio >= lo * (1.0 - 1e-10) && r.max_ratio <= hi * (1.0 + 1e-10));
            }
        }
    }
}

#[test]
fn zero_eps_passes_only_conformal_maps() {
    let s = Sampler::new(256, 0);
    let rot = |a: f64, k: f64| Matrix::from_rows(vec![vec![k * a.cos(), -k * a.sin()], vec![k * a.sin(), k * a.cos()]]).unwrap();
    for (g, conformal) in [
        (rot(0.7, 3.0), true),
        (Matrix::identity(3).scaled(0.5), true),
        (Matrix::diag(&[2.0, 1.0]), false),
        (Matrix::from_rows(vec![vec![1.0, 1.0], vec![0.0, 1.0]]).unwrap(), false),
    ] {
        let map = LinearMap::endomorphism(g, NormSpec::lp(2.0)).unwrap();
        let r = check_bounds_12(&map, 0.0, &s).unwrap();
        assert_eq!(r.passes, conformal);
        assert_eq!(profile(&map).unwrap().kappa == 1.0, conformal);
        if conformal {
            assert!((r.max_ratio - r.min_ratio).abs() <= 1e-12 * r.max_ratio);
        }
    }
}
