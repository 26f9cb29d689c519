mod common;

use common::{case, ip_case, rel_close};
use ortho_core::relations::hh_exact;
use ortho_core::space::spec_inner;
use ortho_core::{beta_functional_min, beta_functional_numeric, hh_orthogonal_in_pencil, minimize_norm_on_line, norm, Tolerance};
use proptest::prelude::*;

proptest! {
    #[test]
    fn beta_numeric_matches_analytic((spec, x, y) in case()) {
        let exact = 2.0 * norm(&spec, &x).unwrap() * norm(&spec, &y).unwrap();
        let num = beta_functional_numeric(&spec, &x, &y).unwrap();
        prop_assert!(rel_close(num.value, exact, 1e-8), "{} vs {}", num.value, exact);
        prop_assert!(rel_close(beta_functional_min(&spec, &x, &y).unwrap().value, exact, 1e-12));
    }

    #[test]
    fn line_minimum_beats_probes((spec, x, y) in case(), probes in prop::collection::vec(-50.0f64..50.0, 1000)) {
        let m = minimize_norm_on_line(&spec, &x, &y).unwrap();
        for t in probes {
            let v = norm(&spec, &x.axpy(t, &y)).unwrap();
            prop_assert!(m.value <= v * (1.0 + 1e-9) + 1e-12, "t={t}: {} > {v}", m.value);
        }
    }

    #[test]
    fn pencil_root_is_hh_orthogonal((spec, x, y) in case()) {
        let tol = Tolerance::default();
        let r = hh_orthogonal_in_pencil(&spec, &x, &y, tol).unwrap();
        let w = y.axpy(r.location, &x);
        prop_assert!(hh_exact(&spec, &x, &w, tol).unwrap().holds);
    }

    #[test]
    fn pencil_root_in_ip_is_projection((spec, x, y) in ip_case()) {
        let r = hh_orthogonal_in_pencil(&spec, &x, &y, Tolerance::default()).unwrap();
        let expected = -spec_inner(&spec, &x, &y).unwrap() / norm(&spec, &x).unwrap().powi(2);
        prop_assert!((r.location - expected).abs() <= 1e-8 * (1.0 + expected.abs()), "{} vs {expected}", r.location);
    }
}
