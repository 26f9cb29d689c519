//! One-dimensional minimization and root finding.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hh::hh_values;
use crate::space::{check_pair, NormSpec, Tolerance, Vector};

const GOLDEN_ITERATIONS: usize = 200;
const GOLDEN_REL_WIDTH: f64 = 1e-14;
const BRACKET_DOUBLINGS: usize = 60;
const BISECTION_ITERATIONS: usize = 200;

/// Minimum of a unimodal function located by golden-section search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub at: f64,
    pub value: f64,
    pub iterations: usize,
}

/// Golden-section search on `[a, b]`: 200 iterations or until the interval is
/// narrower than `1e-14·(b − a)`. The endpoints are candidates too.
pub fn golden_section<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64) -> Minimum {
    let (mut a, mut b) = if a <= b { (a, b) } else { (b, a) };
    let width0 = b - a;
    let mut best = Minimum {
        at: a,
        value: f(a),
        iterations: 0,
    };
    let fb = f(b);
    if fb < best.value {
        best = Minimum { at: b, value: fb, iterations: 0 };
    }
    if width0 == 0.0 {
        return best;
    }
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    let mut iterations = 0;
    while iterations < GOLDEN_ITERATIONS && (b - a) > GOLDEN_REL_WIDTH * width0 {
        iterations += 1;
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    for (t, v) in [(c, fc), (d, fd)] {
        if v < best.value {
            best = Minimum { at: t, value: v, iterations };
        }
    }
    best.iterations = iterations;
    best
}

/// `min_t ‖x + t y‖` and a minimizer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LineMinimum {
    pub t_star: f64,
    pub value: f64,
}

/// Minimizes the convex function `t ↦ ‖x + t y‖` over the bracket
/// `[−2‖x‖/‖y‖, 2‖x‖/‖y‖]`, outside of which it exceeds `‖x‖`.
pub fn minimize_norm_on_line(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<LineMinimum> {
    check_pair(spec, x, y)?;
    let ny = spec.eval(y);
    if ny == 0.0 {
        return Err(Error::InvalidInput("direction y must be nonzero".into()));
    }
    Ok(line_min_unchecked(spec, x, y, ny))
}

pub(crate) fn line_min_unchecked(spec: &NormSpec, x: &[f64], y: &[f64], ny: f64) -> LineMinimum {
    let nx = spec.eval(x);
    if nx == 0.0 {
        return LineMinimum { t_star: 0.0, value: 0.0 };
    }
    let r = 2.0 * nx / ny;
    let mut buf = vec![0.0; x.len()];
    let m = golden_section(
        |t| {
            for i in 0..x.len() {
                buf[i] = x[i] + t * y[i];
            }
            spec.eval(&buf)
        },
        -r,
        r,
    );
    if m.value < nx {
        LineMinimum { t_star: m.at, value: m.value }
    } else {
        LineMinimum { t_star: 0.0, value: nx }
    }
}

/// Outcome of a bracketed root search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootResult {
    pub location: f64,
    pub residual: f64,
    pub iterations: usize,
    pub bracket: (f64, f64),
}

/// Finds `s` with `y + s·x` HH-I orthogonal to `x`, i.e. a root of
/// `F(s) = I+(x, y+sx) − I−(x, y+sx)`.
///
/// `F(s)` grows like `±(2/3)s‖x‖²`, so a sign change is bracketed by doubling
/// and then refined by bisection. In norms where `F` has several roots the
/// first bracketed one is returned.
pub fn hh_orthogonal_in_pencil(
    spec: &NormSpec,
    x: &Vector,
    y: &Vector,
    tol: Tolerance,
) -> Result<RootResult> {
    check_pair(spec, x, y)?;
    let nx = spec.eval(x);
    if nx == 0.0 {
        return Err(Error::InvalidInput("x must be nonzero".into()));
    }
    let eval = |s: f64| -> Result<(f64, f64)> {
        let w = y.axpy(s, x);
        let h = hh_values(spec, x, &w, tol)?;
        Ok((h.gap, tol.band(h.total) + h.est_abs_error))
    };
    let (f0, band0) = eval(0.0)?;
    if f0.abs() <= band0 {
        return Ok(RootResult {
            location: 0.0,
            residual: f0,
            iterations: 0,
            bracket: (0.0, 0.0),
        });
    }
    // F(0) > 0 ⇒ a root on the negative side, and vice versa.
    let dir = -f0.signum();
    let mut r = 1.0 + 2.0 * spec.eval(y) / nx;
    let (mut far, mut far_band) = eval(dir * r)?;
    let mut doublings = 0;
    while far.signum() == f0.signum() && far != 0.0 {
        if doublings == BRACKET_DOUBLINGS {
            return Err(Error::NonConvergence("pencil bracket expansion"));
        }
        r *= 2.0;
        doublings += 1;
        (far, far_band) = eval(dir * r)?;
    }
    let (mut lo, mut hi) = if dir < 0.0 { (-r, 0.0) } else { (0.0, r) };
    let mut f_lo = if dir < 0.0 { far } else { f0 };
    let bracket = (lo, hi);
    // (location, F, band) of the smallest residual seen
    let mut best = if far.abs() < f0.abs() {
        (dir * r, far, far_band)
    } else {
        (0.0, f0, band0)
    };
    let mut iterations = 0;
    while iterations < BISECTION_ITERATIONS {
        iterations += 1;
        let mid = 0.5 * (lo + hi);
        let (fm, band) = eval(mid)?;
        if fm.abs() <= best.1.abs() {
            best = (mid, fm, band);
        }
        if fm == 0.0 {
            break;
        }
        if fm.signum() == f_lo.signum() {
            lo = mid;
            f_lo = fm;
        } else {
            hi = mid;
        }
        let width = hi - lo;
        let scale = 1.0 + mid.abs();
        if width <= 4.0 * f64::EPSILON * scale
            || (fm.abs() <= band && width <= 1e-12 * scale)
        {
            break;
        }
    }
    if best.1.abs() > best.2 {
        return Err(Error::NonConvergence("pencil bisection"));
    }
    Ok(RootResult {
        location: best.0,
        residual: best.1,
        iterations: doublings + iterations,
        bracket,
    })
}

/// `min_{β≠0} ‖x/β‖² + ‖βy‖²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BetaMinimum {
    /// Minimizing `β > 0`; absent when the infimum is only approached.
    pub beta_star: Option<f64>,
    pub value: f64,
    pub attained: bool,
}

/// Analytic minimum: `h(β) = ‖x‖²/β² + β²‖y‖²` has minimum `2‖x‖‖y‖` at
/// `β = √(‖x‖/‖y‖)`. With exactly one zero vector the infimum `0` is not attained.
pub fn beta_functional_min(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<BetaMinimum> {
    check_pair(spec, x, y)?;
    let (nx, ny) = (spec.eval(x), spec.eval(y));
    Ok(match (nx == 0.0, ny == 0.0) {
        (true, true) => BetaMinimum { beta_star: Some(1.0), value: 0.0, attained: true },
        (true, false) | (false, true) => BetaMinimum { beta_star: None, value: 0.0, attained: false },
        (false, false) => BetaMinimum {
            beta_star: Some((nx / ny).sqrt()),
            value: 2.0 * nx * ny,
            attained: true,
        },
    })
}

/// Numerical minimum of `β ↦ ‖x/β‖² + ‖βy‖²`, evaluating the norms of the
/// scaled vectors directly. Search runs in `u = ln β`, where the function is
/// convex; the bracket `[−U, U]` doubles until both ends are past the minimum.
pub fn beta_functional_numeric(spec: &NormSpec, x: &Vector, y: &Vector) -> Result<BetaMinimum> {
    check_pair(spec, x, y)?;
    if x.is_zero() || y.is_zero() {
        return beta_functional_min(spec, x, y);
    }
    let mut bx = vec![0.0; x.dim()];
    let mut by = vec![0.0; y.dim()];
    let mut h = |u: f64| {
        let beta = u.exp();
        for i in 0..x.dim() {
            bx[i] = x[i] / beta;
            by[i] = y[i] * beta;
        }
        let (a, b) = (spec.eval(&bx), spec.eval(&by));
        a * a + b * b
    };
    let mut big = 1.0f64;
    for _ in 0..BRACKET_DOUBLINGS {
        let h0 = h(0.0);
        let right = h(big) >= h(big / 2.0).min(h0);
        let left = h(-big) >= h(-big / 2.0).min(h0);
        if right && left {
            break;
        }
        big *= 2.0;
    }
    let m = golden_section(&mut h, -big, big);
    Ok(BetaMinimum {
        beta_star: Some(m.at.exp()),
        value: m.value,
        attained: true,
    })
}
