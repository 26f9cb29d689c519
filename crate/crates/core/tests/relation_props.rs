mod common;

use common::{case, ip_case};
use ortho_core::relations::{
    chmielinski_birkhoff, dragomir_birkhoff, eps_inner, hh_absolute, hh_exact, hh_relative,
};
use ortho_core::space::spec_inner;
use ortho_core::{norm, NormSpec, OrthoVerdict, Result, Tolerance, Vector};
use proptest::prelude::*;

fn t() -> Tolerance {
    Tolerance::default()
}

type Rel = fn(&NormSpec, &Vector, &Vector, f64, Tolerance) -> Result<OrthoVerdict>;

fn outside_band(v: &OrthoVerdict) -> bool {
    v.margin.abs() > v.band()
}

proptest! {
    #[test]
    fn eps_relations_are_symmetric((spec, x, y) in case(), eps in 0.0f64..0.99) {
        for rel in [hh_relative as Rel, hh_absolute] {
            let a = rel(&spec, &x, &y, eps, t()).unwrap();
            let b = rel(&spec, &y, &x, eps, t()).unwrap();
            if outside_band(&a) {
                prop_assert_eq!(a.holds, b.holds);
            }
        }
    }

    #[test]
    fn verdicts_survive_negation((spec, x, y) in case(), eps in 0.0f64..0.99) {
        let nx = x.scaled(-1.0);
        let ny = y.scaled(-1.0);
        let base = hh_exact(&spec, &x, &y, t()).unwrap();
        prop_assert_eq!(base.holds, hh_exact(&spec, &x, &ny, t()).unwrap().holds);
        prop_assert_eq!(base.holds, hh_exact(&spec, &nx, &ny, t()).unwrap().holds);
        for rel in [hh_relative as Rel, hh_absolute] {
            let a = rel(&spec, &x, &y, eps, t()).unwrap();
            if outside_band(&a) {
                prop_assert_eq!(a.holds, rel(&spec, &x, &ny, eps, t()).unwrap().holds);
                prop_assert_eq!(a.holds, rel(&spec, &nx, &ny, eps, t()).unwrap().holds);
            }
        }
    }

    #[test]
    fn margins_grow_with_eps((spec, x, y) in case(), e1 in 0.0f64..0.99, e2 in 0.0f64..0.99) {
        let (lo, hi) = if e1 <= e2 { (e1, e2) } else { (e2, e1) };
        let mut rels: Vec<Rel> = vec![hh_relative, hh_absolute, dragomir_birkhoff, chmielinski_birkhoff];
        if spec.is_inner_product() {
            rels.push(eps_inner);
        }
        for rel in rels {
            let a = rel(&spec, &x, &y, lo, t()).unwrap();
            let b = rel(&spec, &x, &y, hi, t()).unwrap();
            prop_assert!(a.margin <= b.margin + 1e-9 * (1.0 + b.margin.abs()), "{:?}: {} > {}", a.relation, a.margin, b.margin);
        }
    }

    #[test]
    fn zero_eps_collapses_to_exact((spec, x, y) in case()) {
        let exact = hh_exact(&spec, &x, &y, t()).unwrap().holds;
        prop_assert_eq!(hh_relative(&spec, &x, &y, 0.0, t()).unwrap().holds, exact);
        prop_assert_eq!(hh_absolute(&spec, &x, &y, 0.0, t()).unwrap().holds, exact);
    }

    #[test]
    fn inner_product_characterizations((spec, x, y) in ip_case(), eps in 0.0f64..0.99) {
        let c = spec_inner(&spec, &x, &y).unwrap();
        let (a, b) = (norm(&spec, &x).unwrap(), norm(&spec, &y).unwrap());
        let s = a * a + b * b;
        if ((eps * a * b - c.abs()) / s).abs() > 1e-10 {
            prop_assert_eq!(hh_absolute(&spec, &x, &y, eps, t()).unwrap().holds, c.abs() <= eps * a * b);
        }
        if ((eps * s - c.abs()) / s).abs() > 1e-10 {
            prop_assert_eq!(hh_relative(&spec, &x, &y, eps, t()).unwrap().holds, c.abs() <= eps * s);
        }
    }

    #[test]
    fn absolute_implies_relative((spec, x, y) in case(), eps in 0.0f64..0.99) {
        if hh_absolute(&spec, &x, &y, eps, t()).unwrap().holds {
            let r = hh_relative(&spec, &x, &y, eps, t()).unwrap();
            prop_assert!(r.holds, "margin {}", r.margin);
        }
    }

    #[test]
    fn doubled_eps_inner_implies_relative((spec, x, y) in ip_case(), eps in 0.0f64..0.99) {
        if eps_inner(&spec, &x, &y, 2.0 * eps, t()).unwrap().holds {
            prop_assert!(hh_relative(&spec, &x, &y, eps, t()).unwrap().holds);
        }
    }

    #[test]
    fn absolute_is_homogeneous_in_ip(
        (spec, x, y) in ip_case(),
        eps in 0.0f64..0.99,
        alpha in prop_oneof![-50.0f64..-0.02, 0.02f64..50.0],
        beta in prop_oneof![-50.0f64..-0.02, 0.02f64..50.0],
    ) {
        let a = hh_absolute(&spec, &x, &y, eps, t()).unwrap();
        let b = hh_absolute(&spec, &x.scaled(alpha), &y.scaled(beta), eps, t()).unwrap();
        let na = norm(&spec, &x).unwrap() * norm(&spec, &y).unwrap();
        let nb = na * (alpha * beta).abs();
        if (a.margin / na).abs() > 1e-9 && (b.margin / nb).abs() > 1e-9 {
            prop_assert_eq!(a.holds, b.holds);
        }
    }
}
