mod common;

use common::{case, ip_case, rel_close};
use ortho_core::{hh_closed_form_ip, hh_minus, hh_plus, hh_quadrature, norm, NormSpec, Tolerance};
use proptest::prelude::*;

fn t() -> Tolerance {
    Tolerance::default()
}

proptest! {
    #[test]
    fn symmetric_in_the_pair((spec, x, y) in case()) {
        prop_assert!(rel_close(hh_plus(&spec, &x, &y, t()).unwrap(), hh_plus(&spec, &y, &x, t()).unwrap(), 1e-9));
        prop_assert!(rel_close(hh_minus(&spec, &x, &y, t()).unwrap(), hh_minus(&spec, &y, &x, t()).unwrap(), 1e-9));
    }

    #[test]
    fn sign_flip_swaps_sides((spec, x, y) in case()) {
        let flipped = hh_plus(&spec, &x, &y.scaled(-1.0), t()).unwrap();
        prop_assert!(rel_close(flipped, hh_minus(&spec, &x, &y, t()).unwrap(), 1e-9));
    }

    #[test]
    fn joint_scaling_is_quadratic((spec, x, y) in case(), lambda in prop_oneof![-20.0f64..-0.05, 0.05f64..20.0]) {
        let scaled = hh_plus(&spec, &x.scaled(lambda), &y.scaled(lambda), t()).unwrap();
        prop_assert!(rel_close(scaled, lambda * lambda * hh_plus(&spec, &x, &y, t()).unwrap(), 1e-9));
    }

    #[test]
    fn quadrature_matches_closed_form((spec, x, y) in ip_case()) {
        let gram = spec.gram(x.dim()).unwrap();
        let q = hh_quadrature(&spec, &x, &y, t()).unwrap();
        let c = hh_closed_form_ip(&gram, &x, &y).unwrap();
        prop_assert!(rel_close(q.i_plus, c.i_plus, 1e-9));
        prop_assert!(rel_close(q.i_minus, c.i_minus, 1e-9));
    }

    #[test]
    fn bounded_by_the_triangle_estimate((spec, x, y) in case()) {
        let (a, b) = (norm(&spec, &x).unwrap(), norm(&spec, &y).unwrap());
        let bound = (a * a + b * b + a * b) / 3.0;
        prop_assert!(hh_plus(&spec, &x, &y, t()).unwrap() <= bound + t().band(bound));
    }
}

#[test]
fn l1_unit_vectors() {
    let spec = NormSpec::lp(1.0);
    let x = common::v(&[1.0, 0.0]);
    let y = common::v(&[0.0, 1.0]);
    // ‖(1−t, t)‖₁ = 1 for all t
    assert!((hh_plus(&spec, &x, &y, t()).unwrap() - 1.0).abs() < 1e-12);
    assert!((hh_minus(&spec, &x, &y, t()).unwrap() - 1.0).abs() < 1e-12);
}
