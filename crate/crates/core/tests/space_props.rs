mod common;

use common::{case, ip_case, v};
use ortho_core::{norm, space::spec_inner, NormSpec, Vector};
use proptest::prelude::*;

proptest! {
    #[test]
    fn norm_is_absolutely_homogeneous((spec, x, _y) in case(), lambda in -10.0f64..10.0) {
        let lhs = norm(&spec, &x.scaled(lambda)).unwrap();
        let rhs = lambda.abs() * norm(&spec, &x).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.max(1e-300) + 1e-300, "{lhs} vs {rhs}");
    }

    #[test]
    fn triangle_inequality((spec, x, y) in case()) {
        let (a, b) = (norm(&spec, &x).unwrap(), norm(&spec, &y).unwrap());
        prop_assert!(norm(&spec, &x.add(&y)).unwrap() <= a + b + 1e-12 * (a + b));
    }

    #[test]
    fn positive_definite((spec, x, _y) in case()) {
        prop_assert!(norm(&spec, &x).unwrap() > 0.0);
        prop_assert_eq!(norm(&spec, &Vector::zeros(x.dim())).unwrap(), 0.0);
    }

    #[test]
    fn cauchy_schwarz((spec, x, y) in ip_case()) {
        let c = spec_inner(&spec, &x, &y).unwrap();
        prop_assert!(c.abs() <= norm(&spec, &x).unwrap() * norm(&spec, &y).unwrap() * (1.0 + 1e-12));
    }

    #[test]
    fn parallelogram_law((spec, x, y) in ip_case()) {
        let n = |w: &Vector| norm(&spec, w).unwrap().powi(2);
        let lhs = n(&x.add(&y)) + n(&x.sub(&y));
        let rhs = 2.0 * n(&x) + 2.0 * n(&y);
        prop_assert!((lhs - rhs).abs() <= 1e-10 * rhs);
    }
}

#[test]
fn parallelogram_fails_in_l1() {
    let spec = NormSpec::lp(1.0);
    let (x, y) = (v(&[1.0, 0.0]), v(&[0.0, 1.0]));
    let n = |w: &Vector| norm(&spec, w).unwrap().powi(2);
    assert_eq!(n(&x.add(&y)) + n(&x.sub(&y)), 8.0);
    assert_eq!(2.0 * n(&x) + 2.0 * n(&y), 4.0);
}
