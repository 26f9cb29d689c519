#![allow(dead_code)]

use ortho_core::{Exponent, Matrix, NormSpec, Vector};
use proptest::prelude::*;

/// `AᵀA + 0.2·I` from the `n²` entries of `A`.
pub fn spd(n: usize, a: &[f64]) -> Matrix {
    let mut g = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let s: f64 = (0..n).map(|k| a[k * n + i] * a[k * n + j]).sum();
            g[(i, j)] = s + if i == j { 0.2 } else { 0.0 };
        }
    }
    g
}

pub fn ip_spec(n: usize) -> impl Strategy<Value = NormSpec> {
    prop::collection::vec(-1.0f64..1.0, n * n).prop_map(move |a| NormSpec::inner_product(spd(n, &a)))
}

pub fn any_spec(n: usize) -> impl Strategy<Value = NormSpec> {
    prop_oneof![
        Just(NormSpec::lp(1.0)),
        Just(NormSpec::lp(1.5)),
        Just(NormSpec::lp(2.0)),
        Just(NormSpec::lp(3.0)),
        Just(NormSpec::linf()),
        prop::collection::vec(0.1f64..10.0, n).prop_map(|w| NormSpec::weighted(Exponent::Finite(2.0), w)),
        ip_spec(n),
    ]
}

pub fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(-10.0f64..10.0, n)
        .prop_filter("away from zero", |v| v.iter().map(|c| c * c).sum::<f64>() > 1e-2)
        .prop_map(|v| Vector::new(v).unwrap())
}

pub fn case() -> impl Strategy<Value = (NormSpec, Vector, Vector)> {
    (1usize..=5).prop_flat_map(|n| (any_spec(n), vector(n), vector(n)))
}

pub fn ip_case() -> impl Strategy<Value = (NormSpec, Vector, Vector)> {
    (1usize..=5).prop_flat_map(|n| (prop_oneof![Just(NormSpec::lp(2.0)), ip_spec(n)], vector(n), vector(n)))
}

pub fn rel_close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1e-300)
}

pub fn v(c: &[f64]) -> Vector {
    Vector::new(c.to_vec()).unwrap()
}
