//! Composite Gauss–Legendre quadrature with adaptive interval bisection.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::space::Tolerance;

/// Points per panel.
pub const ORDER: usize = 16;
/// Maximum bisection depth below an initial panel.
pub const MAX_DEPTH: usize = 30;

struct Rule {
    nodes: [f64; ORDER],
    weights: [f64; ORDER],
}

/// Gauss–Legendre nodes and weights on [-1, 1], via Newton iteration on `P_n`.
fn rule() -> &'static Rule {
    static RULE: OnceLock<Rule> = OnceLock::new();
    RULE.get_or_init(|| {
        let n = ORDER;
        let mut nodes = [0.0; ORDER];
        let mut weights = [0.0; ORDER];
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            let w = 2.0 / ((1.0 - x * x) * d * d);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Rule { nodes, weights }
    })
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, x);
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Single-panel Gauss–Legendre estimate of `∫_a^b f`.
pub fn gauss_legendre<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> f64 {
    let r = rule();
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let s: f64 = r
        .nodes
        .iter()
        .zip(&r.weights)
        .map(|(x, w)| w * f(mid + half * x))
        .sum();
    s * half
}

/// Result of an adaptive integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub abs_error: f64,
    pub evaluations: usize,
}

/// Integrates `f` over `[breaks[0], breaks[last]]`, using every break as an
/// initial panel boundary. Each panel is bisected until the two-panel and
/// one-panel estimates agree to within its share of the tolerance.
pub fn integrate<F: Fn(f64) -> f64>(f: &F, breaks: &[f64], tol: Tolerance) -> Result<Integral> {
    assert!(breaks.len() >= 2, "need at least one panel");
    let (lo, hi) = (breaks[0], breaks[breaks.len() - 1]);
    let length = hi - lo;
    if length <= 0.0 {
        return Ok(Integral {
            value: 0.0,
            abs_error: 0.0,
            evaluations: 0,
        });
    }
    let coarse: Vec<f64> = breaks
        .windows(2)
        .map(|w| gauss_legendre(f, w[0], w[1]))
        .collect();
    let mut evaluations = ORDER * coarse.len();
    let rough: f64 = coarse.iter().map(|v| v.abs()).sum();
    let target = tol.band(rough);

    let mut value = 0.0;
    let mut abs_error = 0.0;
    for (w, whole) in breaks.windows(2).zip(coarse) {
        let share = target * (w[1] - w[0]) / length;
        let (v, e) = refine(f, w[0], w[1], whole, share, 0, &mut evaluations)?;
        value += v;
        abs_error += e;
    }
    Ok(Integral {
        value,
        abs_error,
        evaluations,
    })
}

fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    whole: f64,
    share: f64,
    depth: usize,
    evaluations: &mut usize,
) -> Result<(f64, f64)> {
    let m = 0.5 * (a + b);
    let left = gauss_legendre(f, a, m);
    let right = gauss_legendre(f, m, b);
    *evaluations += 2 * ORDER;
    let split = left + right;
    let diff = (split - whole).abs();
    let floor = 64.0 * f64::EPSILON * split.abs();
    if diff <= share.max(floor) {
        return Ok((split, diff));
    }
    if depth >= MAX_DEPTH {
        return Err(Error::NonConvergence("adaptive quadrature"));
    }
    let (lv, le) = refine(f, a, m, left, 0.5 * share, depth + 1, evaluations)?;
    let (rv, re) = refine(f, m, b, right, 0.5 * share, depth + 1, evaluations)?;
    Ok((lv + rv, le + re))
}
