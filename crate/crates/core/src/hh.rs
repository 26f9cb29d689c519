//! The Hermite–Hadamard integral functionals
//!
//! ```text
//! I+(x, y) = ∫₀¹ ‖(1−t)x + t y‖² dt,    I−(x, y) = ∫₀¹ ‖(1−t)x − t y‖² dt.
//! ```
//!
//! Norms induced by an inner product use the closed form
//! `I± = (‖x‖² + ‖y‖² ± ⟨x,y⟩) / 3`. Everything else goes through adaptive
//! Gauss–Legendre quadrature with the integrand's kinks as panel boundaries.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quadrature::{self, Integral};
use crate::space::{check_pair, Exponent, Matrix, NormSpec, Tolerance, Vector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    ClosedForm,
    Quadrature,
}

/// Both integrals together with their difference and sum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct HHValues {
    pub i_plus: f64,
    pub i_minus: f64,
    /// `i_plus − i_minus`
    pub gap: f64,
    /// `i_plus + i_minus`
    pub total: f64,
    pub method: Method,
    /// Combined error estimate of both integrals (zero for the closed form).
    pub est_abs_error: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Plus,
    Minus,
}

impl Side {
    fn sign(self) -> f64 {
        match self {
            Side::Plus => 1.0,
            Side::Minus => -1.0,
        }
    }
}

/// `I+(x, y)`.
pub fn hh_plus(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance) -> Result<f64> {
    one_side(spec, x, y, tol, Side::Plus)
}

/// `I−(x, y)`.
pub fn hh_minus(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance) -> Result<f64> {
    one_side(spec, x, y, tol, Side::Minus)
}

fn one_side(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance, side: Side) -> Result<f64> {
    check_pair(spec, x, y)?;
    if let Some(v) = closed_form(spec, x, y) {
        return Ok(match side {
            Side::Plus => v.i_plus,
            Side::Minus => v.i_minus,
        });
    }
    let c = unit_scale(spec, x, y);
    Ok(c * c * integrate_side(spec, &x.scaled(1.0 / c), &y.scaled(1.0 / c), tol, side)?.value)
}

/// Closed form for the norm induced by `gram`.
pub fn hh_closed_form_ip(gram: &Matrix, x: &Vector, y: &Vector) -> Result<HHValues> {
    let spec = NormSpec::inner_product(gram.clone());
    check_pair(&spec, x, y)?;
    Ok(closed_form(&spec, x, y).expect("gram spec has an inner product"))
}

fn closed_form(spec: &NormSpec, x: &[f64], y: &[f64]) -> Option<HHValues> {
    let c = spec.eval_inner(x, y)?;
    let xx = spec.eval_inner(x, x)?.max(0.0);
    let yy = spec.eval_inner(y, y)?.max(0.0);
    Some(HHValues {
        i_plus: ((xx + yy + c) / 3.0).max(0.0),
        i_minus: ((xx + yy - c) / 3.0).max(0.0),
        gap: 2.0 * c / 3.0,
        total: 2.0 * (xx + yy) / 3.0,
        method: Method::ClosedForm,
        est_abs_error: 0.0,
    })
}

/// Both integrals, by closed form when the norm has an inner product.
pub fn hh_values(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance) -> Result<HHValues> {
    check_pair(spec, x, y)?;
    if let Some(v) = closed_form(spec, x, y) {
        return Ok(v);
    }
    quadrature_values(spec, x, y, tol)
}

/// Both integrals by quadrature regardless of the norm family.
pub fn hh_quadrature(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance) -> Result<HHValues> {
    check_pair(spec, x, y)?;
    quadrature_values(spec, x, y, tol)
}

/// Power of two nearest to `max(‖x‖, ‖y‖)`. Quadrature runs on the inputs
/// divided by it (an exact operation), so tolerances act relative to them.
fn unit_scale(spec: &NormSpec, x: &Vector, y: &Vector) -> f64 {
    let m = spec.eval(x).max(spec.eval(y));
    if m > 0.0 && m.is_finite() {
        2f64.powi(m.log2().round() as i32)
    } else {
        1.0
    }
}

fn quadrature_values(spec: &NormSpec, x: &Vector, y: &Vector, tol: Tolerance) -> Result<HHValues> {
    let c = unit_scale(spec, x, y);
    let (xs, ys) = (x.scaled(1.0 / c), y.scaled(1.0 / c));
    let plus = integrate_side(spec, &xs, &ys, tol, Side::Plus)?;
    let minus = integrate_side(spec, &xs, &ys, tol, Side::Minus)?;
    let c2 = c * c;
    Ok(HHValues {
        i_plus: c2 * plus.value,
        i_minus: c2 * minus.value,
        gap: c2 * (plus.value - minus.value),
        total: c2 * (plus.value + minus.value),
        method: Method::Quadrature,
        est_abs_error: c2 * (plus.abs_error + minus.abs_error),
    })
}

fn integrate_side(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    tol: Tolerance,
    side: Side,
) -> Result<Integral> {
    let s = side.sign();
    // (1−t)x ± t y = x + t·d
    let d: Vec<f64> = x.iter().zip(y.iter()).map(|(a, b)| s * b - a).collect();
    let breaks = breakpoints(spec, x, &d);
    let n = x.dim();
    let integrand = |t: f64| {
        let sq = |buf: &mut [f64]| {
            for i in 0..n {
                buf[i] = x[i] + t * d[i];
            }
            let v = spec.eval(buf);
            v * v
        };
        if n <= 16 {
            let mut buf = [0.0; 16];
            sq(&mut buf[..n])
        } else {
            let mut buf = vec![0.0; n];
            sq(&mut buf)
        }
    };
    quadrature::integrate(&integrand, &breaks, tol).map_err(|e| match e {
        Error::NonConvergence(_) => Error::NonConvergence("HH-I integral quadrature"),
        other => other,
    })
}

/// Panel boundaries in [0, 1] at the kinks of `t ↦ ‖x + t d‖`.
///
/// Finite `p`: zero crossings of single coordinates. Sup-norms: points
/// where the maximizing coordinate changes.
fn breakpoints(spec: &NormSpec, x: &[f64], d: &[f64]) -> Vec<f64> {
    let n = x.len();
    let mut cuts = vec![0.0, 1.0];
    let inside = |t: f64| t.is_finite() && t > 0.0 && t < 1.0;
    let (p, weights): (Exponent, Option<&[f64]>) = match spec {
        NormSpec::Lp { p } => (*p, None),
        NormSpec::Wlp { p, weights } => (*p, Some(weights)),
        NormSpec::Ip { .. } => return cuts,
    };
    match p {
        Exponent::Finite(_) => {
            for i in 0..n {
                if d[i] != 0.0 {
                    let t = -x[i] / d[i];
                    if inside(t) {
                        cuts.push(t);
                    }
                }
            }
        }
        Exponent::Infinity => {
            let w = |i: usize| weights.map_or(1.0, |w| w[i]);
            let a: Vec<f64> = (0..n).map(|i| w(i) * x[i]).collect();
            let b: Vec<f64> = (0..n).map(|i| w(i) * d[i]).collect();
            let top = |t: f64| (0..n).fold(0.0f64, |m, k| m.max((a[k] + t * b[k]).abs()));
            for i in 0..n {
                for j in (i + 1)..n {
                    for sigma in [1.0, -1.0] {
                        let den = b[i] - sigma * b[j];
                        if den == 0.0 {
                            continue;
                        }
                        let t = (sigma * a[j] - a[i]) / den;
                        if !inside(t) {
                            continue;
                        }
                        let here = (a[i] + t * b[i]).abs();
                        let m = top(t);
                        if here >= m - 1e-12 * m.max(f64::MIN_POSITIVE) {
                            cuts.push(t);
                        }
                    }
                }
            }
        }
    }
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() <= 1e-14);
    if *cuts.last().unwrap() != 1.0 {
        // dedup may have merged 1.0 into a nearby cut
        let last = cuts.len() - 1;
        cuts[last] = 1.0;
    }
    cuts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(c: &[f64]) -> Vector {
        Vector::new(c.to_vec()).unwrap()
    }

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    #[test]
    fn plus_examples() {
        let (x, y) = (v(&[1.0, 0.0]), v(&[0.0, 1.0]));
        let l2 = hh_plus(&NormSpec::lp(2.0), &x, &y, tol()).unwrap();
        assert!((l2 - 2.0 / 3.0).abs() < 1e-14);
        let l1 = hh_plus(&NormSpec::lp(1.0), &x, &y, tol()).unwrap();
        assert!((l1 - 1.0).abs() < 1e-14);
        let linf = hh_plus(&NormSpec::linf(), &x, &y, tol()).unwrap();
        assert!((linf - 7.0 / 12.0).abs() < 1e-14);
    }

    #[test]
    fn minus_examples() {
        let (x, y) = (v(&[1.0, 0.0]), v(&[0.0, 1.0]));
        let l2 = hh_minus(&NormSpec::lp(2.0), &x, &y, tol()).unwrap();
        assert!((l2 - 2.0 / 3.0).abs() < 1e-14);
        let ip = NormSpec::inner_product(Matrix::identity(2));
        let m = hh_minus(&ip, &v(&[1.0, 2.0]), &v(&[3.0, -1.0]), tol()).unwrap();
        assert!((m - 14.0 / 3.0).abs() < 1e-14);
        let q = hh_quadrature(&ip, &v(&[1.0, 2.0]), &v(&[3.0, -1.0]), tol()).unwrap();
        assert!((q.i_minus - 14.0 / 3.0).abs() < 1e-12);
        for spec in [NormSpec::lp(1.0), NormSpec::lp(3.0), NormSpec::linf()] {
            let x = v(&[0.7, -1.3, 2.0]);
            let nx = crate::space::norm(&spec, &x).unwrap();
            let m = hh_minus(&spec, &x, &Vector::zeros(3), tol()).unwrap();
            assert!((m - nx * nx / 3.0).abs() < 1e-12);
        }
    }

    #[test]
    fn closed_form_examples() {
        let i2 = Matrix::identity(2);
        let h = hh_closed_form_ip(&i2, &v(&[1.0, 2.0]), &v(&[3.0, -1.0])).unwrap();
        assert!((h.i_plus - 16.0 / 3.0).abs() < 1e-14);
        assert!((h.i_minus - 14.0 / 3.0).abs() < 1e-14);
        assert_eq!(h.method, Method::ClosedForm);
        assert_eq!(h.est_abs_error, 0.0);
        let h = hh_closed_form_ip(&i2, &v(&[1.0, 0.0]), &v(&[1.0, 0.0])).unwrap();
        assert!((h.i_plus - 1.0).abs() < 1e-15 && (h.i_minus - 1.0 / 3.0).abs() < 1e-15);
        let h = hh_closed_form_ip(&i2, &v(&[1.0, 0.0]), &v(&[0.0, 1.0])).unwrap();
        assert_eq!(h.gap, 0.0);
        assert!((h.i_plus - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn values_examples() {
        let y = v(&[0.45, 0.7975f64.sqrt()]);
        let h = hh_values(&NormSpec::lp(2.0), &v(&[2.0, 0.0]), &y, tol()).unwrap();
        assert!((h.gap - 0.6).abs() < 1e-14);
        assert!((h.total - 10.0 / 3.0).abs() < 1e-14);
        let h = hh_values(&NormSpec::lp(1.0), &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), tol()).unwrap();
        assert!(h.gap.abs() < 1e-14);
        let z = Vector::zeros(3);
        for spec in [NormSpec::lp(1.5), NormSpec::linf(), NormSpec::lp(2.0)] {
            let h = hh_values(&spec, &z, &z, tol()).unwrap();
            assert_eq!((h.i_plus, h.i_minus), (0.0, 0.0));
        }
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let err = hh_plus(&NormSpec::lp(1.0), &v(&[1.0]), &v(&[1.0, 2.0]), tol()).unwrap_err();
        assert!(matches!(err, Error::DimensionMismatch { .. }));
        let w = NormSpec::weighted(Exponent::Finite(1.0), vec![1.0, 2.0, 3.0]);
        assert!(hh_values(&w, &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), tol()).is_err());
    }

    #[test]
    fn sup_norm_breakpoints_are_switch_points() {
        // ‖(1−t, t)‖∞ switches at t = 1/2
        let cuts = breakpoints(&NormSpec::linf(), &[1.0, 0.0], &[-1.0, 1.0]);
        assert_eq!(cuts, vec![0.0, 0.5, 1.0]);
        let cuts = breakpoints(&NormSpec::lp(1.0), &[1.0, -1.0], &[-2.0, 4.0]);
        assert_eq!(cuts, vec![0.0, 0.25, 0.5, 1.0]);
    }

    #[test]
    fn weighted_sup_norm_integral_matches_split_integral() {
        // ‖(1−t, t)‖ = max(2(1−t), t): switch at t = 2/3
        let spec = NormSpec::weighted(Exponent::Infinity, vec![2.0, 1.0]);
        let got = hh_plus(&spec, &v(&[1.0, 0.0]), &v(&[0.0, 1.0]), tol()).unwrap();
        let exact = 4.0 * (1.0f64 / 3.0) * (1.0 - (1.0f64 / 3.0).powi(3)) + (1.0 - (8.0f64 / 27.0)) / 3.0;
        assert!((got - exact).abs() < 1e-13, "{got} vs {exact}");
    }
}
